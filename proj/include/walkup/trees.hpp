#pragma once

#include <string>
#include <vector>

#include "walkup/certificate.hpp"
#include "walkup/complex.hpp"

namespace walkup {

enum class HostKind { Sigma = 0, Mu = 1, Alpha = 2 };

struct HostVertex {
    HostKind kind;
    int k; // path position for alpha vertices (1..d); 0 otherwise
    int i; // cyclic index 0..n-1
};

// The host graph: two n-cycles (sigma and mu) joined by n disjoint paths
// sigma_i alpha_{1,i} ... alpha_{d,i} mu_i. Vertex ids follow the total
// order (kind, k, i): sigma_i = i, mu_i = n+i, alpha_{k,i} = (k+1)n + i.
struct HostGraph {
    int d = 0;
    int n = 0;
    std::vector<std::vector<int>> adjacency;  // per vertex id, sorted
    std::vector<std::pair<int, int>> edges;   // a < b, sorted

    int vertex_count() const { return n * (d + 2); }
    int sigma(int i) const { return mod(i); }
    int mu(int i) const { return n + mod(i); }
    int alpha(int k, int i) const { return (k + 1) * n + mod(i); }
    int mod(long long i) const {
        long long r = i % n;
        return static_cast<int>(r < 0 ? r + n : r);
    }
    HostVertex decode(int id) const;
    std::string vertex_name(int id) const;
    bool adjacent(int a, int b) const;
};

HostGraph graph_G(int d);

enum class TreeVariant { T1, T2 };

// Indexed family of vertex subsets of the host graph, each inducing a
// subtree; validated at construction.
struct TreeFamily {
    TreeVariant variant = TreeVariant::T1;
    int d = 0;
    int n = 0;
    std::vector<std::vector<int>> members; // sorted host-vertex ids, T_0..T_{n-1}
};

TreeFamily tree_family(int d, TreeVariant variant);

// hat(u) = { i : u in T_i } for every host vertex, as sorted index lists.
std::vector<std::vector<int>> hat_sets(const HostGraph& G, const TreeFamily& T);

// Checks the construction hypotheses with D playing the lemma's dimension:
// (i) pairwise intersection, (ii) every vertex in exactly D+1 members,
// (iii) |hat(u) ^ hat(v)| = D iff uv is an edge, plus the member-size and
// induced-tree conditions. Failures land in the certificate.
// Check (iii) is a full double loop over host-vertex pairs, quadratic in
// n(d+2) (385 vertices at d=5, ~74k pairs of one-word bitset intersections;
// still milliseconds up to d=6).
Certificate verify_family(const HostGraph& G, const TreeFamily& T, int D);

// The complex with facets hat(u). Re-verifies the hypotheses first and
// throws HypothesesNotVerified on failure.
Complex complex_from_family(const HostGraph& G, const TreeFamily& T);

// JSON form (host graph plus member index lists) for inspection.
nlohmann::json tree_family_to_json(const HostGraph& G, const TreeFamily& T);

} // namespace walkup
