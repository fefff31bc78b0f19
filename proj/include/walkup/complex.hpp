#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "walkup/face.hpp"

namespace walkup {

// Finite abstract simplicial complex stored by its maximal faces.
// Immutable after construction: facets are canonical (sorted label
// sequences, lexicographically ordered, no facet contains another).
// Purity is recorded but only enforced by operations that need it.
class Complex {
  public:
    Complex() : dim_(-1), pure_(true) {}

    // Canonicalizing constructor: merges duplicates and drops dominated
    // faces. Throws EmptyComplex when the collection is empty.
    static Complex from_facets(std::vector<Face> raw);
    static Complex from_facets(const std::vector<std::vector<Label>>& raw);

    // The complex with no faces at all (dimension -1).
    static Complex empty_complex() { return Complex(); }

    const std::vector<Face>& facets() const { return facets_; }
    const std::vector<Label>& vertices() const { return vertices_; }
    std::size_t facet_count() const { return facets_.size(); }
    std::size_t vertex_count() const { return vertices_.size(); }
    int dim() const { return dim_; }
    bool pure() const { return pure_; }
    bool empty() const { return facets_.empty(); }

    bool has_vertex(Label v) const {
        return std::binary_search(vertices_.begin(), vertices_.end(), v);
    }
    // True iff alpha is a face (subset of some facet).
    bool has_face(const Face& alpha) const;
    bool has_facet(const Face& f) const {
        return std::binary_search(facets_.begin(), facets_.end(), f);
    }
    // Index of f in the sorted facet list, or -1.
    int facet_index(const Face& f) const;

    friend bool operator==(const Complex& a, const Complex& b) {
        return a.facets_ == b.facets_;
    }

  private:
    std::vector<Face> facets_;
    std::vector<Label> vertices_;
    int dim_;
    bool pure_;
};

struct FVector {
    std::vector<std::int64_t> counts; // f_0 .. f_d
    std::int64_t euler = 0;           // alternating sum

    std::int64_t total() const {
        std::int64_t t = 0;
        for (auto c : counts) t += c;
        return t;
    }
    friend bool operator==(const FVector& a, const FVector& b) {
        return a.counts == b.counts && a.euler == b.euler;
    }
};

// Facets of a pure complex as nodes; an edge joins two facets whose
// intersection has codimension one.
struct DualGraph {
    std::vector<Face> nodes;                      // the facets, lex order
    std::vector<std::pair<int, int>> edges;       // index pairs, i < j
    std::vector<std::vector<int>> adjacency;      // per node, sorted

    std::size_t node_count() const { return nodes.size(); }
    std::size_t edge_count() const { return edges.size(); }
    bool connected() const;
    bool is_tree() const;
};

enum class PseudoClass { NotWeak, WeakPseudomanifold, Pseudomanifold };

// --- simplex_core operations -------------------------------------------

Complex build_complex(const std::vector<std::vector<Label>>& raw_facets);

// All faces obtained by downward closure, grouped by dimension, each group
// in lexicographic order. `cap` bounds the total number of faces.
std::vector<std::vector<Face>> faces_by_dim(const Complex& X,
                                            std::uint64_t cap = 50'000'000);

FVector f_vector(const Complex& X);

Complex star(const Complex& X, const Face& alpha);
Complex link(const Complex& X, const Face& alpha);

DualGraph dual_graph(const Complex& X);

PseudoClass classify_pseudo(const Complex& X);

// Pure subcomplex spanned by the ridges lying in exactly one facet;
// the empty complex when X is closed.
Complex boundary(const Complex& X);

bool is_l_neighborly(const Complex& X, int l);

// Induced subcomplex on a vertex set W (faces of X with all vertices in W).
Complex induced(const Complex& X, const std::vector<Label>& W);

// Applies a label bijection given as old -> new. Labels absent from the map
// are kept as-is.
Complex relabel(const Complex& X, const std::map<Label, Label>& mapping);

// Cone over X: joins every facet with a fresh apex vertex.
Complex cone(const Complex& X, Label apex);

// Some vertex lies in every facet (automorphism search rejects these).
std::optional<Label> cone_apex(const Complex& X);

} // namespace walkup
