#include "walkup/symmetry.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "walkup/errors.hpp"

namespace walkup {

bool verify_cyclic_action(const Complex& X, int n) {
    const auto& verts = X.vertices();
    if (static_cast<int>(verts.size()) != n || verts.front() != 0 ||
        verts.back() != n - 1)
        throw LabelMismatch(n);
    for (const Face& f : X.facets()) {
        std::vector<Label> shifted;
        shifted.reserve(f.size());
        for (Label v : f) shifted.push_back((v + 1) % n);
        if (!X.has_facet(Face{std::move(shifted)})) return false;
    }
    return true;
}

namespace {

std::uint64_t hash_mix(std::uint64_t h, std::uint64_t x) {
    h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
}

// One side of the search: the complex re-indexed to 0..n-1 with the
// invariants the pruning uses.
struct Side {
    std::vector<Label> labels;                 // index -> original label
    std::vector<std::vector<int>> facets;      // sorted index lists
    std::set<std::vector<int>> facet_set;
    std::vector<std::vector<int>> vertex_facets;
    std::vector<std::vector<int>> pair_count;  // facets through each pair
    std::vector<std::uint64_t> color;          // refined invariant classes

    int n() const { return static_cast<int>(labels.size()); }

    explicit Side(const Complex& X) {
        labels = X.vertices();
        auto idx = [&](Label v) {
            return static_cast<int>(
                std::lower_bound(labels.begin(), labels.end(), v) - labels.begin());
        };
        vertex_facets.resize(labels.size());
        pair_count.assign(labels.size(), std::vector<int>(labels.size(), 0));
        for (const Face& f : X.facets()) {
            std::vector<int> fi;
            fi.reserve(f.size());
            for (Label v : f) fi.push_back(idx(v));
            std::sort(fi.begin(), fi.end());
            const int id = static_cast<int>(facets.size());
            for (std::size_t a = 0; a < fi.size(); ++a) {
                vertex_facets[static_cast<std::size_t>(fi[a])].push_back(id);
                for (std::size_t b = a + 1; b < fi.size(); ++b) {
                    ++pair_count[static_cast<std::size_t>(fi[a])][static_cast<std::size_t>(fi[b])];
                    ++pair_count[static_cast<std::size_t>(fi[b])][static_cast<std::size_t>(fi[a])];
                }
            }
            facet_set.insert(fi);
            facets.push_back(std::move(fi));
        }
        refine(X);
    }

    // Initial color from per-vertex invariants (skeleton degree, facet-size
    // profile, sorted link f-vector, sorted edge-facet-count multiset),
    // then 1-dimensional Weisfeiler-Leman-style rounds until the partition
    // stops splitting.
    void refine(const Complex& X) {
        const auto nn = labels.size();
        color.assign(nn, 0);
        for (std::size_t v = 0; v < nn; ++v) {
            std::vector<std::uint64_t> sizes;
            for (int f : vertex_facets[v])
                sizes.push_back(facets[static_cast<std::size_t>(f)].size());
            std::sort(sizes.begin(), sizes.end());
            std::size_t degree = 0;
            for (std::size_t u = 0; u < nn; ++u)
                if (u != v && pair_count[v][u] > 0) ++degree;
            std::uint64_t h = hash_mix(0x12345, degree);
            h = hash_mix(h, vertex_facets[v].size());
            for (auto s : sizes) h = hash_mix(h, s);
            for (auto c : f_vector(link(X, Face{labels[v]})).counts)
                h = hash_mix(h, static_cast<std::uint64_t>(c));
            std::vector<int> row(pair_count[v]);
            std::sort(row.begin(), row.end());
            for (int c : row) h = hash_mix(h, static_cast<std::uint64_t>(c));
            color[v] = h;
        }
        std::size_t classes = count_classes();
        for (std::size_t round = 0; round < nn; ++round) {
            std::vector<std::uint64_t> next(nn);
            for (std::size_t v = 0; v < nn; ++v) {
                std::vector<std::uint64_t> sig;
                sig.reserve(nn - 1);
                for (std::size_t u = 0; u < nn; ++u) {
                    if (u == v) continue;
                    sig.push_back(hash_mix(static_cast<std::uint64_t>(pair_count[v][u]) + 1,
                                           color[u]));
                }
                std::sort(sig.begin(), sig.end());
                std::uint64_t h = color[v];
                for (auto s : sig) h = hash_mix(h, s);
                next[v] = h;
            }
            color.swap(next);
            const std::size_t c = count_classes();
            if (c == classes) break;
            classes = c;
        }
    }

    std::size_t count_classes() const {
        std::set<std::uint64_t> s(color.begin(), color.end());
        return s.size();
    }
};

// Backtracking search for a facet-preserving bijection. `forced` seeds the
// partial map (used for the stabilizer chain).
class IsoSearch {
  public:
    IsoSearch(const Side& X, const Side& Y) : X_(X), Y_(Y) {}

    std::optional<std::vector<int>> run(const std::vector<std::pair<int, int>>& forced) {
        const auto n = static_cast<std::size_t>(X_.n());
        map_.assign(n, -1);
        used_.assign(n, 0);
        unmapped_in_facet_.clear();
        for (const auto& f : X_.facets)
            unmapped_in_facet_.push_back(static_cast<int>(f.size()));

        for (auto [x, y] : forced) {
            if (!compatible(x, y) || !place(x, y)) return std::nullopt;
        }
        order_ = search_order();
        if (extend(0)) return map_;
        return std::nullopt;
    }

  private:
    const Side& X_;
    const Side& Y_;
    std::vector<int> map_;     // X index -> Y index or -1
    std::vector<char> used_;   // Y index occupied
    std::vector<int> unmapped_in_facet_;
    std::vector<int> order_;   // unmapped X vertices, static heuristic order

    // Consistency of x -> y with everything mapped so far.
    bool compatible(int x, int y) const {
        if (used_[static_cast<std::size_t>(y)]) return false;
        if (X_.color[static_cast<std::size_t>(x)] != Y_.color[static_cast<std::size_t>(y)])
            return false;
        for (std::size_t u = 0; u < map_.size(); ++u) {
            if (map_[u] < 0) continue;
            if (X_.pair_count[static_cast<std::size_t>(x)][u] !=
                Y_.pair_count[static_cast<std::size_t>(y)][static_cast<std::size_t>(map_[u])])
                return false;
        }
        return true;
    }

    // Applies x -> y in full and reports whether every facet that became
    // fully mapped lands on a facet of Y. Always leaves the bookkeeping in
    // a state that remove(x) reverses exactly.
    bool place(int x, int y) {
        map_[static_cast<std::size_t>(x)] = y;
        used_[static_cast<std::size_t>(y)] = 1;
        bool ok = true;
        for (int f : X_.vertex_facets[static_cast<std::size_t>(x)]) {
            if (--unmapped_in_facet_[static_cast<std::size_t>(f)] == 0 && ok) {
                std::vector<int> image;
                image.reserve(X_.facets[static_cast<std::size_t>(f)].size());
                for (int v : X_.facets[static_cast<std::size_t>(f)])
                    image.push_back(map_[static_cast<std::size_t>(v)]);
                std::sort(image.begin(), image.end());
                if (!Y_.facet_set.count(image)) ok = false;
            }
        }
        return ok;
    }

    void remove(int x) {
        const int y = map_[static_cast<std::size_t>(x)];
        map_[static_cast<std::size_t>(x)] = -1;
        used_[static_cast<std::size_t>(y)] = 0;
        for (int f : X_.vertex_facets[static_cast<std::size_t>(x)])
            ++unmapped_in_facet_[static_cast<std::size_t>(f)];
    }

    // Unmapped vertices, most-constrained first: prefer vertices sharing
    // faces with already-placed ones, then rare colors.
    std::vector<int> search_order() const {
        const auto n = static_cast<std::size_t>(X_.n());
        std::map<std::uint64_t, int> class_size;
        for (auto c : X_.color) ++class_size[c];
        std::vector<char> placed(n, 0);
        for (std::size_t v = 0; v < n; ++v) placed[v] = map_[v] >= 0;
        std::vector<int> order;
        for (std::size_t step = 0; step < n; ++step) {
            int best = -1;
            long best_key = -1;
            for (std::size_t v = 0; v < n; ++v) {
                if (placed[v]) continue;
                long anchored = 0;
                for (std::size_t u = 0; u < n; ++u)
                    if (placed[u] && X_.pair_count[v][u] > 0) ++anchored;
                // more anchors first, then rarer color
                const long key = anchored * 1000000L +
                                 (1000L - class_size.at(X_.color[v]));
                if (key > best_key) {
                    best_key = key;
                    best = static_cast<int>(v);
                }
            }
            if (best < 0) break;
            order.push_back(best);
            placed[static_cast<std::size_t>(best)] = 1;
        }
        std::vector<int> unmapped;
        for (int v : order)
            if (map_[static_cast<std::size_t>(v)] < 0) unmapped.push_back(v);
        return unmapped;
    }

    bool extend(std::size_t depth) {
        if (depth == order_.size()) return true;
        const int x = order_[depth];
        for (int y = 0; y < Y_.n(); ++y) {
            if (!compatible(x, y)) continue;
            if (place(x, y) && extend(depth + 1)) return true;
            remove(x);
        }
        return false;
    }
};

std::multiset<std::uint64_t> color_histogram(const Side& s) {
    return {s.color.begin(), s.color.end()};
}

std::multiset<std::size_t> facet_size_histogram(const Side& s) {
    std::multiset<std::size_t> h;
    for (const auto& f : s.facets) h.insert(f.size());
    return h;
}

VertexPermutation to_permutation(const Side& X, const Side& Y, const std::vector<int>& map) {
    VertexPermutation p;
    for (std::size_t i = 0; i < map.size(); ++i)
        p.mapping[X.labels[i]] = Y.labels[static_cast<std::size_t>(map[i])];
    return p;
}

} // namespace

std::optional<VertexPermutation> isomorphic(const Complex& X, const Complex& Y) {
    if (X.empty() && Y.empty()) return VertexPermutation{};
    if (X.vertex_count() != Y.vertex_count() || X.facet_count() != Y.facet_count() ||
        X.dim() != Y.dim())
        return std::nullopt;
    Side sx(X), sy(Y);
    if (facet_size_histogram(sx) != facet_size_histogram(sy)) return std::nullopt;
    if (color_histogram(sx) != color_histogram(sy)) return std::nullopt;
    IsoSearch search(sx, sy);
    auto found = search.run({});
    if (!found) return std::nullopt;
    return to_permutation(sx, sy, *found);
}

GroupDescription automorphism_group(const Complex& X, std::uint64_t order_cap) {
    if (!X.pure()) throw NotPure();
    if (classify_pseudo(X) != PseudoClass::Pseudomanifold) throw NotConnected();
    if (auto apex = cone_apex(X)) throw ConeNotSupported(*apex);

    Side side(X);
    const int n = side.n();

    GroupDescription group;
    // Point-stabilizer chain over the vertices in index order: the orbit of
    // vertex i under the stabilizer of 0..i-1 is found by one search per
    // candidate image, and the group order is the product of orbit sizes.
    std::vector<std::pair<int, int>> forced;
    for (int i = 0; i < n; ++i) {
        std::uint64_t orbit = 1;
        for (int c = 0; c < n; ++c) {
            if (c == i) continue;
            if (side.color[static_cast<std::size_t>(c)] !=
                side.color[static_cast<std::size_t>(i)])
                continue;
            bool plausible = true;
            for (auto [b, bi] : forced) {
                if (side.pair_count[static_cast<std::size_t>(i)][static_cast<std::size_t>(b)] !=
                    side.pair_count[static_cast<std::size_t>(c)][static_cast<std::size_t>(b)]) {
                    plausible = false;
                    break;
                }
            }
            if (!plausible) continue;
            auto constraints = forced;
            constraints.emplace_back(i, c);
            IsoSearch search(side, side);
            if (auto found = search.run(constraints)) {
                group.generators.push_back(to_permutation(side, side, *found));
                ++orbit;
            }
        }
        if (group.order > order_cap / orbit) throw OrderCapExceeded(order_cap);
        group.order *= orbit;
        forced.emplace_back(i, i);
    }
    return group;
}

bool is_automorphism(const Complex& X, const VertexPermutation& p) {
    if (p.mapping.size() != X.vertex_count()) return false;
    std::set<Label> images;
    for (auto [from, to] : p.mapping) {
        if (!X.has_vertex(from) || !X.has_vertex(to)) return false;
        images.insert(to);
    }
    if (images.size() != X.vertex_count()) return false;
    for (const Face& f : X.facets()) {
        std::vector<Label> img;
        img.reserve(f.size());
        for (Label v : f) img.push_back(p.mapping.at(v));
        if (!X.has_facet(Face{std::move(img)})) return false;
    }
    return true;
}

VertexPermutation compose(const VertexPermutation& outer, const VertexPermutation& inner) {
    VertexPermutation out;
    for (auto [v, mid] : inner.mapping) out.mapping[v] = outer.mapping.at(mid);
    return out;
}

bool is_identity(const VertexPermutation& p) {
    for (auto [v, w] : p.mapping)
        if (v != w) return false;
    return true;
}

std::vector<VertexPermutation> group_elements(const std::vector<VertexPermutation>& gens,
                                              std::uint64_t cap) {
    if (gens.empty()) return {};
    std::set<std::map<Label, Label>> seen;
    std::vector<VertexPermutation> frontier;
    VertexPermutation id;
    for (auto [v, w] : gens.front().mapping) id.mapping[v] = v;
    seen.insert(id.mapping);
    frontier.push_back(id);
    std::vector<VertexPermutation> all{id};
    while (!frontier.empty()) {
        std::vector<VertexPermutation> next;
        for (const auto& p : frontier) {
            for (const auto& g : gens) {
                VertexPermutation q = compose(g, p);
                if (seen.insert(q.mapping).second) {
                    if (seen.size() > cap) throw OrderCapExceeded(cap);
                    all.push_back(q);
                    next.push_back(std::move(q));
                }
            }
        }
        frontier.swap(next);
    }
    return all;
}

} // namespace walkup
