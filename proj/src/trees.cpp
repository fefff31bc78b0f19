#include "walkup/trees.hpp"

#include <algorithm>
#include <queue>
#include <set>

#include "walkup/errors.hpp"

namespace walkup {

HostVertex HostGraph::decode(int id) const {
    if (id < n) return {HostKind::Sigma, 0, id};
    if (id < 2 * n) return {HostKind::Mu, 0, id - n};
    return {HostKind::Alpha, id / n - 1, id % n};
}

std::string HostGraph::vertex_name(int id) const {
    HostVertex v = decode(id);
    switch (v.kind) {
        case HostKind::Sigma: return "sigma_" + std::to_string(v.i);
        case HostKind::Mu: return "mu_" + std::to_string(v.i);
        case HostKind::Alpha:
            return "alpha_" + std::to_string(v.k) + "_" + std::to_string(v.i);
    }
    return "?";
}

bool HostGraph::adjacent(int a, int b) const {
    const auto& adj = adjacency[static_cast<std::size_t>(a)];
    return std::binary_search(adj.begin(), adj.end(), b);
}

HostGraph graph_G(int d) {
    if (d < 2) throw DimOutOfRange("host graph is defined for d >= 2");
    HostGraph G;
    G.d = d;
    G.n = d * d + 5 * d + 5;
    G.adjacency.assign(static_cast<std::size_t>(G.vertex_count()), {});
    auto add_edge = [&](int a, int b) {
        if (a > b) std::swap(a, b);
        G.edges.emplace_back(a, b);
    };
    for (int i = 0; i < G.n; ++i) {
        add_edge(G.sigma(i), G.sigma(i + 1));             // cycle C1
        add_edge(G.mu(i), G.mu(i + (d + 3)));             // cycle C2, step d+3
        add_edge(G.sigma(i), G.alpha(1, i));              // path P_i
        for (int k = 1; k < d; ++k) add_edge(G.alpha(k, i), G.alpha(k + 1, i));
        add_edge(G.alpha(d, i), G.mu(i));
    }
    std::sort(G.edges.begin(), G.edges.end());
    G.edges.erase(std::unique(G.edges.begin(), G.edges.end()), G.edges.end());
    for (auto [a, b] : G.edges) {
        G.adjacency[static_cast<std::size_t>(a)].push_back(b);
        G.adjacency[static_cast<std::size_t>(b)].push_back(a);
    }
    for (auto& adj : G.adjacency) std::sort(adj.begin(), adj.end());
    return G;
}

namespace {

bool induces_tree(const HostGraph& G, const std::vector<int>& member) {
    if (member.empty()) return false;
    std::set<int> inside(member.begin(), member.end());
    std::size_t inner_edges = 0;
    for (int v : member)
        for (int u : G.adjacency[static_cast<std::size_t>(v)])
            if (u > v && inside.count(u)) ++inner_edges;
    if (inner_edges + 1 != member.size()) return false;
    // connectivity
    std::set<int> seen{member.front()};
    std::queue<int> q;
    q.push(member.front());
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int u : G.adjacency[static_cast<std::size_t>(v)]) {
            if (inside.count(u) && seen.insert(u).second) q.push(u);
        }
    }
    return seen.size() == member.size();
}

} // namespace

TreeFamily tree_family(int d, TreeVariant variant) {
    HostGraph G = graph_G(d);
    TreeFamily T;
    T.variant = variant;
    T.d = d;
    T.n = G.n;
    for (int i = 0; i < G.n; ++i) {
        std::set<int> m;
        for (int j = 0; j <= d + 1; ++j) m.insert(G.sigma(i + j));
        for (int j = 0; j <= d + 1; ++j) m.insert(G.mu(i + (long long)j * (d + 3)));
        for (int j = 1; j <= d; ++j) m.insert(G.alpha(j, i));
        for (int k = 2; k <= d + 1; ++k)
            for (int j = 1; j <= d + 2 - k; ++j) m.insert(G.alpha(j, i + k));
        for (int k = 2; k <= d + 1; ++k) {
            const int lo = (variant == TreeVariant::T1) ? d + 2 - k : k - 1;
            for (int j = lo; j <= d; ++j)
                m.insert(G.alpha(j, i + (long long)k * (d + 3)));
        }
        T.members.emplace_back(m.begin(), m.end());
    }
    for (int i = 0; i < G.n; ++i)
        if (!induces_tree(G, T.members[static_cast<std::size_t>(i)]))
            throw ConstructionBug("member " + std::to_string(i) +
                                  " does not induce a tree");
    return T;
}

std::vector<std::vector<int>> hat_sets(const HostGraph& G, const TreeFamily& T) {
    std::vector<std::vector<int>> hat(static_cast<std::size_t>(G.vertex_count()));
    for (int i = 0; i < static_cast<int>(T.members.size()); ++i)
        for (int u : T.members[static_cast<std::size_t>(i)])
            hat[static_cast<std::size_t>(u)].push_back(i);
    return hat;
}

Certificate verify_family(const HostGraph& G, const TreeFamily& T, int D) {
    Certificate cert;
    cert.subject = "verify_family";
    cert.parameters = {{"d", G.d},
                       {"n", G.n},
                       {"D", D},
                       {"variant", T.variant == TreeVariant::T1 ? "T1" : "T2"}};

    // member sizes and induced-tree property
    bool trees_ok = T.members.size() == static_cast<std::size_t>(G.n);
    std::string tree_note;
    for (std::size_t i = 0; i < T.members.size() && trees_ok; ++i) {
        if (static_cast<int>(T.members[i].size()) != G.n - D) {
            trees_ok = false;
            tree_note = "member " + std::to_string(i) + " has " +
                        std::to_string(T.members[i].size()) + " vertices";
        } else if (!induces_tree(G, T.members[i])) {
            trees_ok = false;
            tree_note = "member " + std::to_string(i) + " is not an induced tree";
        }
    }
    cert.add("members_induce_trees", trees_ok,
             trees_ok ? std::to_string(T.members.size()) + " trees on " +
                            std::to_string(G.n - D) + " vertices"
                      : tree_note);

    // (i) any two members intersect
    bool pairwise = true;
    std::string pair_note;
    for (std::size_t a = 0; a < T.members.size() && pairwise; ++a) {
        for (std::size_t b = a + 1; b < T.members.size(); ++b) {
            std::vector<int> common;
            std::set_intersection(T.members[a].begin(), T.members[a].end(),
                                  T.members[b].begin(), T.members[b].end(),
                                  std::back_inserter(common));
            if (common.empty()) {
                pairwise = false;
                pair_note = "T_" + std::to_string(a) + " and T_" + std::to_string(b) +
                            " are disjoint";
                break;
            }
        }
    }
    cert.add("pairwise_intersection", pairwise, pair_note);

    // (ii) every vertex in exactly D+1 members
    auto hat = hat_sets(G, T);
    bool counts_ok = true;
    std::string count_note;
    for (int u = 0; u < G.vertex_count() && counts_ok; ++u) {
        if (static_cast<int>(hat[static_cast<std::size_t>(u)].size()) != D + 1) {
            counts_ok = false;
            count_note = G.vertex_name(u) + " lies in " +
                         std::to_string(hat[static_cast<std::size_t>(u)].size()) +
                         " members, expected " + std::to_string(D + 1);
        }
    }
    cert.add("vertex_membership_count", counts_ok, count_note);

    // (iii) |hat(u) ^ hat(v)| = D iff uv is an edge
    bool codim_ok = true;
    std::string codim_note;
    for (int u = 0; u < G.vertex_count() && codim_ok; ++u) {
        for (int v = u + 1; v < G.vertex_count(); ++v) {
            std::vector<int> common;
            std::set_intersection(hat[static_cast<std::size_t>(u)].begin(),
                                  hat[static_cast<std::size_t>(u)].end(),
                                  hat[static_cast<std::size_t>(v)].begin(),
                                  hat[static_cast<std::size_t>(v)].end(),
                                  std::back_inserter(common));
            const bool edge = G.adjacent(u, v);
            if ((static_cast<int>(common.size()) == D) != edge) {
                codim_ok = false;
                codim_note = G.vertex_name(u) + ", " + G.vertex_name(v) + ": |hat^hat|=" +
                             std::to_string(common.size()) + (edge ? " on an edge" : " off an edge");
                break;
            }
        }
    }
    cert.add("hat_intersection_iff_edge", codim_ok, codim_note);
    return cert;
}

Complex complex_from_family(const HostGraph& G, const TreeFamily& T) {
    const int D = G.n - static_cast<int>(T.members.front().size());
    Certificate cert = verify_family(G, T, D);
    for (const auto& c : cert.checks)
        if (c.verdict != Verdict::Pass) throw HypothesesNotVerified(c.name);
    std::vector<Face> facets;
    for (const auto& h : hat_sets(G, T))
        facets.push_back(Face::from_sorted(std::vector<Label>(h.begin(), h.end())));
    return Complex::from_facets(std::move(facets));
}

nlohmann::json tree_family_to_json(const HostGraph& G, const TreeFamily& T) {
    nlohmann::json host;
    host["d"] = G.d;
    host["n"] = G.n;
    nlohmann::json names = nlohmann::json::array();
    for (int u = 0; u < G.vertex_count(); ++u) names.push_back(G.vertex_name(u));
    host["vertices"] = names;
    nlohmann::json edges = nlohmann::json::array();
    for (auto [a, b] : G.edges) edges.push_back({a, b});
    host["edges"] = edges;

    nlohmann::json members = nlohmann::json::array();
    for (const auto& m : T.members) members.push_back(m);
    return {{"variant", T.variant == TreeVariant::T1 ? "T1" : "T2"},
            {"host", host},
            {"members", members}};
}

} // namespace walkup
