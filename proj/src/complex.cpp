#include "walkup/complex.hpp"

#include <numeric>
#include <queue>
#include <set>
#include <unordered_map>

#include "walkup/errors.hpp"

namespace walkup {

Complex Complex::from_facets(std::vector<Face> raw) {
    if (raw.empty()) throw EmptyComplex();
    for (const Face& f : raw) {
        if (f.empty()) throw EmptyComplex();
        if (f[0] < 0) throw Error("negative vertex label: " + f.str());
    }
    std::sort(raw.begin(), raw.end());
    raw.erase(std::unique(raw.begin(), raw.end()), raw.end());

    // Drop dominated faces. Sorting by size keeps the scan simple; inputs
    // are small enough that the quadratic fallback never matters.
    std::stable_sort(raw.begin(), raw.end(), [](const Face& a, const Face& b) {
        return a.size() > b.size();
    });
    std::vector<Face> maximal;
    for (const Face& f : raw) {
        bool dominated = false;
        for (const Face& g : maximal) {
            if (f.size() < g.size() && f.subset_of(g)) {
                dominated = true;
                break;
            }
        }
        if (!dominated) maximal.push_back(f);
    }
    std::sort(maximal.begin(), maximal.end());

    Complex X;
    X.facets_ = std::move(maximal);
    std::set<Label> verts;
    int lo = X.facets_.front().dim(), hi = lo;
    for (const Face& f : X.facets_) {
        lo = std::min(lo, f.dim());
        hi = std::max(hi, f.dim());
        verts.insert(f.begin(), f.end());
    }
    X.vertices_.assign(verts.begin(), verts.end());
    X.dim_ = hi;
    X.pure_ = (lo == hi);
    return X;
}

Complex Complex::from_facets(const std::vector<std::vector<Label>>& raw) {
    std::vector<Face> faces;
    faces.reserve(raw.size());
    for (const auto& f : raw) faces.emplace_back(f);
    return from_facets(std::move(faces));
}

bool Complex::has_face(const Face& alpha) const {
    if (alpha.empty()) return false;
    for (const Face& f : facets_)
        if (alpha.subset_of(f)) return true;
    return false;
}

int Complex::facet_index(const Face& f) const {
    auto it = std::lower_bound(facets_.begin(), facets_.end(), f);
    if (it == facets_.end() || !(*it == f)) return -1;
    return static_cast<int>(it - facets_.begin());
}

Complex build_complex(const std::vector<std::vector<Label>>& raw_facets) {
    return Complex::from_facets(raw_facets);
}

std::vector<std::vector<Face>> faces_by_dim(const Complex& X, std::uint64_t cap) {
    std::set<Face> all;
    std::vector<Label> buf;
    for (const Face& facet : X.facets()) {
        const auto& v = facet.labels();
        const unsigned k = static_cast<unsigned>(v.size());
        if (k >= 31)
            throw TooLarge("facet with " + std::to_string(k) +
                           " vertices: power set exceeds any cap");
        for (std::uint32_t mask = 1; mask < (1u << k); ++mask) {
            buf.clear();
            for (unsigned i = 0; i < k; ++i)
                if (mask & (1u << i)) buf.push_back(v[i]);
            all.insert(Face::from_sorted(buf));
            if (all.size() > cap)
                throw TooLarge("face enumeration exceeds cap of " + std::to_string(cap));
        }
    }
    std::vector<std::vector<Face>> out(static_cast<std::size_t>(X.dim() + 1));
    for (const Face& f : all)
        out[static_cast<std::size_t>(f.dim())].push_back(f);
    // std::set iteration is lexicographic already; per-dimension order follows.
    return out;
}

FVector f_vector(const Complex& X) {
    FVector fv;
    if (X.empty()) return fv;
    auto faces = faces_by_dim(X);
    fv.counts.reserve(faces.size());
    for (std::size_t j = 0; j < faces.size(); ++j) {
        auto c = static_cast<std::int64_t>(faces[j].size());
        fv.counts.push_back(c);
        fv.euler += (j % 2 == 0) ? c : -c;
    }
    return fv;
}

Complex star(const Complex& X, const Face& alpha) {
    if (!X.has_face(alpha)) throw FaceNotFound(alpha.str());
    std::vector<Face> through;
    for (const Face& f : X.facets())
        if (alpha.subset_of(f)) through.push_back(f);
    return Complex::from_facets(std::move(through));
}

Complex link(const Complex& X, const Face& alpha) {
    if (!X.has_face(alpha)) throw FaceNotFound(alpha.str());
    std::vector<Face> lk;
    for (const Face& f : X.facets()) {
        if (!alpha.subset_of(f)) continue;
        Face rest = f.minus(alpha);
        if (!rest.empty()) lk.push_back(std::move(rest));
    }
    if (lk.empty()) return Complex::empty_complex();
    return Complex::from_facets(std::move(lk));
}

namespace {

// Ridge -> indices of facets containing it. Works for any pure complex.
std::vector<std::pair<Face, std::vector<int>>> ridge_incidence(const Complex& X) {
    std::unordered_map<Face, std::vector<int>, FaceHash> buckets;
    const auto& facets = X.facets();
    buckets.reserve(facets.size() * (X.dim() + 2));
    for (std::size_t i = 0; i < facets.size(); ++i) {
        for (Label v : facets[i])
            buckets[facets[i].without(v)].push_back(static_cast<int>(i));
    }
    std::vector<std::pair<Face, std::vector<int>>> out(buckets.begin(), buckets.end());
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

} // namespace

bool DualGraph::connected() const {
    if (nodes.empty()) return true;
    std::vector<char> seen(nodes.size(), 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    std::size_t visited = 1;
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int w : adjacency[static_cast<std::size_t>(u)]) {
            if (!seen[static_cast<std::size_t>(w)]) {
                seen[static_cast<std::size_t>(w)] = 1;
                ++visited;
                q.push(w);
            }
        }
    }
    return visited == nodes.size();
}

bool DualGraph::is_tree() const {
    return connected() && edges.size() + 1 == nodes.size();
}

DualGraph dual_graph(const Complex& X) {
    if (!X.pure()) throw NotPure();
    DualGraph G;
    G.nodes = X.facets();
    G.adjacency.assign(G.nodes.size(), {});
    if (X.dim() < 0) return G;
    for (const auto& [ridge, incident] : ridge_incidence(X)) {
        for (std::size_t a = 0; a < incident.size(); ++a)
            for (std::size_t b = a + 1; b < incident.size(); ++b)
                G.edges.emplace_back(incident[a], incident[b]);
    }
    // Two distinct facets of a pure complex share at most one ridge, so no
    // duplicate edges can arise; sort for a deterministic listing.
    std::sort(G.edges.begin(), G.edges.end());
    for (auto [a, b] : G.edges) {
        G.adjacency[static_cast<std::size_t>(a)].push_back(b);
        G.adjacency[static_cast<std::size_t>(b)].push_back(a);
    }
    for (auto& adj : G.adjacency) std::sort(adj.begin(), adj.end());
    return G;
}

PseudoClass classify_pseudo(const Complex& X) {
    if (!X.pure()) throw NotPure();
    for (const auto& [ridge, incident] : ridge_incidence(X))
        if (incident.size() > 2) return PseudoClass::NotWeak;
    return dual_graph(X).connected() ? PseudoClass::Pseudomanifold
                                     : PseudoClass::WeakPseudomanifold;
}

Complex boundary(const Complex& X) {
    if (!X.pure()) throw NotPure();
    std::vector<Face> bd;
    for (const auto& [ridge, incident] : ridge_incidence(X)) {
        if (incident.size() > 2) throw NotWeak(ridge.str());
        if (incident.size() == 1) bd.push_back(ridge);
    }
    if (bd.empty()) return Complex::empty_complex();
    return Complex::from_facets(std::move(bd));
}

bool is_l_neighborly(const Complex& X, int l) {
    if (l <= 0) throw DimOutOfRange("l must be positive");
    const auto n = static_cast<int>(X.vertex_count());
    if (l > n) return false;
    if (l == 1) return true;
    // Count (l-1)-faces and compare with C(n, l).
    std::uint64_t choose = 1;
    for (int i = 0; i < l; ++i)
        choose = choose * static_cast<std::uint64_t>(n - i) / static_cast<std::uint64_t>(i + 1);
    std::set<Face> found;
    std::vector<Label> buf;
    for (const Face& facet : X.facets()) {
        const auto& v = facet.labels();
        if (static_cast<int>(v.size()) < l) continue;
        // Enumerate l-subsets of the facet.
        std::vector<int> idx(static_cast<std::size_t>(l));
        std::iota(idx.begin(), idx.end(), 0);
        while (true) {
            buf.clear();
            for (int i : idx) buf.push_back(v[static_cast<std::size_t>(i)]);
            found.insert(Face::from_sorted(buf));
            int pos = l - 1;
            while (pos >= 0 && idx[static_cast<std::size_t>(pos)] ==
                                   static_cast<int>(v.size()) - l + pos)
                --pos;
            if (pos < 0) break;
            ++idx[static_cast<std::size_t>(pos)];
            for (int i = pos + 1; i < l; ++i)
                idx[static_cast<std::size_t>(i)] = idx[static_cast<std::size_t>(i - 1)] + 1;
        }
        if (found.size() == choose) return true;
    }
    return found.size() == choose;
}

Complex induced(const Complex& X, const std::vector<Label>& W) {
    Face w{std::vector<Label>(W)};
    for (Label v : w)
        if (!X.has_vertex(v)) throw UnknownVertex(v);
    std::vector<Face> parts;
    for (const Face& f : X.facets()) {
        Face g = f.intersect(w);
        if (!g.empty()) parts.push_back(std::move(g));
    }
    if (parts.empty()) return Complex::empty_complex();
    return Complex::from_facets(std::move(parts));
}

Complex relabel(const Complex& X, const std::map<Label, Label>& mapping) {
    if (X.empty()) return X;
    std::vector<Face> out;
    out.reserve(X.facet_count());
    for (const Face& f : X.facets()) {
        std::vector<Label> labels;
        labels.reserve(f.size());
        for (Label v : f) {
            auto it = mapping.find(v);
            labels.push_back(it == mapping.end() ? v : it->second);
        }
        out.emplace_back(std::move(labels));
    }
    return Complex::from_facets(std::move(out));
}

Complex cone(const Complex& X, Label apex) {
    if (X.has_vertex(apex)) throw Error("cone apex already a vertex");
    std::vector<Face> out;
    out.reserve(X.facet_count());
    for (const Face& f : X.facets()) {
        std::vector<Label> labels(f.begin(), f.end());
        labels.push_back(apex);
        out.emplace_back(std::move(labels));
    }
    return Complex::from_facets(std::move(out));
}

std::optional<Label> cone_apex(const Complex& X) {
    if (X.empty()) return std::nullopt;
    Face common = X.facets().front();
    for (const Face& f : X.facets()) {
        common = common.intersect(f);
        if (common.empty()) return std::nullopt;
    }
    return common[0];
}

} // namespace walkup
