#include "walkup/orientation.hpp"

#include <algorithm>
#include <map>
#include <queue>

#include "walkup/errors.hpp"

namespace walkup {

int induced_sign(const Face& facet, int facet_sign, const Face& ridge) {
    const Face omitted = facet.minus(ridge);
    const int pos = facet.index_of(omitted[0]);
    return (pos % 2 == 0) ? facet_sign : -facet_sign;
}

OrientabilityResult orientability(const Complex& X, int basepoint,
                                  std::uint64_t traversal_seed) {
    if (!X.pure()) throw NotPure();
    if (X.empty() || basepoint < 0 ||
        basepoint >= static_cast<int>(X.facet_count()))
        throw DimOutOfRange("basepoint out of range");

    const auto& facets = X.facets();
    // ridge -> the (exactly two) facets through it
    std::map<Face, std::vector<int>> ridges;
    for (std::size_t i = 0; i < facets.size(); ++i)
        for (Label v : facets[i])
            ridges[facets[i].without(v)].push_back(static_cast<int>(i));
    std::vector<std::vector<std::pair<int, Face>>> adj(facets.size());
    for (const auto& [ridge, inc] : ridges) {
        if (inc.size() != 2) throw NotClosedManifoldLike(ridge.str());
        adj[static_cast<std::size_t>(inc[0])].emplace_back(inc[1], ridge);
        adj[static_cast<std::size_t>(inc[1])].emplace_back(inc[0], ridge);
    }
    if (traversal_seed != 0) {
        std::uint64_t s = traversal_seed;
        auto next = [&s] {
            s += 0x9E3779B97F4A7C15ULL;
            std::uint64_t z = s;
            z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
            z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
            return z ^ (z >> 31);
        };
        for (auto& list : adj)
            for (std::size_t i = list.size(); i > 1; --i)
                std::swap(list[i - 1], list[next() % i]);
    }

    OrientabilityResult out;
    out.assignment.basepoint = basepoint;
    out.assignment.sign.assign(facets.size(), 0);
    std::vector<int> parent(facets.size(), -1);

    std::queue<int> q;
    out.assignment.sign[static_cast<std::size_t>(basepoint)] = 1;
    q.push(basepoint);
    std::size_t visited = 1;
    while (!q.empty()) {
        const int f = q.front();
        q.pop();
        const int sf = out.assignment.sign[static_cast<std::size_t>(f)];
        for (const auto& [g, ridge] : adj[static_cast<std::size_t>(f)]) {
            // Opposite induced orientations across the shared ridge.
            const int needed =
                (induced_sign(facets[static_cast<std::size_t>(f)], sf, ridge) ==
                 induced_sign(facets[static_cast<std::size_t>(g)], 1, ridge))
                    ? -1
                    : 1;
            int& sg = out.assignment.sign[static_cast<std::size_t>(g)];
            if (sg == 0) {
                sg = needed;
                parent[static_cast<std::size_t>(g)] = f;
                ++visited;
                q.push(g);
            } else if (sg != needed) {
                // Flipping dual cycle: BFS-tree paths from f and g to their
                // lowest common ancestor, closed by the edge g-f.
                std::vector<int> path_f, path_g;
                for (int x = f; x != -1; x = parent[static_cast<std::size_t>(x)])
                    path_f.push_back(x);
                for (int x = g; x != -1; x = parent[static_cast<std::size_t>(x)])
                    path_g.push_back(x);
                while (path_f.size() > 1 && path_g.size() > 1 &&
                       path_f[path_f.size() - 2] == path_g[path_g.size() - 2]) {
                    path_f.pop_back();
                    path_g.pop_back();
                }
                out.witness_cycle = path_f; // f .. LCA
                for (auto it = path_g.rbegin() + 1; it != path_g.rend(); ++it)
                    out.witness_cycle.push_back(*it); // .. g
                out.orientable = false;
                out.assignment.sign.clear();
                return out;
            }
        }
    }
    if (visited != facets.size()) throw NotConnected();
    out.orientable = true;
    return out;
}

Certificate bundle_parity_check(int d, int m, const Permutation& sigma) {
    Complex X = sphere_bundle(d, m, sigma);
    const bool even_sigma = permutation_is_even(sigma);
    const bool md_even = (static_cast<long long>(m) * d) % 2 == 0;
    const bool predicted = (md_even && even_sigma) || (!md_even && !even_sigma);
    const bool computed = orientability(X).orientable;

    Certificate cert;
    cert.subject = "bundle_parity";
    cert.parameters = {{"d", d}, {"m", m}, {"sigma", sigma}};
    cert.add("parity_law", predicted == computed,
             std::string("computed ") + (computed ? "orientable" : "non-orientable") +
                 ", parity predicts " + (predicted ? "orientable" : "non-orientable"),
             {{"md_even", md_even},
              {"sigma_even", even_sigma},
              {"predicted_orientable", predicted},
              {"computed_orientable", computed}});
    return cert;
}

} // namespace walkup
