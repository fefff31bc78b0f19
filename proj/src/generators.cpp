#include "walkup/generators.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "walkup/stacked.hpp"
#include "walkup/symmetry.hpp"

namespace walkup {

GluingMap GluingMap::make(const Face& source, const Face& target,
                          std::vector<std::pair<Label, Label>> pairing) {
    if (!source.disjoint_from(target)) throw NotDisjoint();
    if (pairing.size() != source.size())
        throw Error("gluing map is not total on the source face");
    std::set<Label> seen_src, seen_tgt;
    for (auto [u, t] : pairing) {
        if (!source.contains(u) || !target.contains(t))
            throw Error("gluing pair outside source/target faces");
        if (!seen_src.insert(u).second || !seen_tgt.insert(t).second)
            throw Error("gluing map is not a bijection");
    }
    GluingMap g;
    g.source = source;
    g.target = target;
    g.pairing = std::move(pairing);
    std::sort(g.pairing.begin(), g.pairing.end());
    return g;
}

Complex simplex_ball(int d) {
    if (d < 0) throw DimOutOfRange("simplex dimension must be >= 0");
    std::vector<Label> all(static_cast<std::size_t>(d + 1));
    std::iota(all.begin(), all.end(), 0);
    return Complex::from_facets(std::vector<Face>{Face::from_sorted(all)});
}

Complex simplex_sphere(int d) {
    if (d < 0) throw DimOutOfRange("simplex dimension must be >= 0");
    std::vector<Face> facets;
    for (Label skip = 0; skip <= d + 1; ++skip) {
        std::vector<Label> f;
        for (Label v = 0; v <= d + 1; ++v)
            if (v != skip) f.push_back(v);
        facets.push_back(Face::from_sorted(std::move(f)));
    }
    return Complex::from_facets(std::move(facets));
}

Complex path_ball(int D, int m) {
    if (D < 1 || m < 1) throw DimOutOfRange("path_ball needs D >= 1, m >= 1");
    std::vector<Face> facets;
    facets.reserve(static_cast<std::size_t>(m));
    for (int k = 1; k <= m; ++k) {
        std::vector<Label> f(static_cast<std::size_t>(D + 1));
        std::iota(f.begin(), f.end(), k);
        facets.push_back(Face::from_sorted(std::move(f)));
    }
    return Complex::from_facets(std::move(facets));
}

namespace {

struct FamilyParams {
    int d, n;
    int mod(long long x) const {
        long long r = x % n;
        return static_cast<int>(r < 0 ? r + n : r);
    }
};

Family build_family(int d, FamilyVariant variant) {
    if (d < 2) throw DimOutOfRange("families are defined for d >= 2");
    FamilyParams P{d, d * d + 5 * d + 5};
    std::vector<Face> facets;
    facets.reserve(static_cast<std::size_t>((d + 2) * P.n));
    for (int i = 0; i < P.n; ++i) {
        std::vector<Label> sigma;
        for (int j = 0; j <= d + 1; ++j) sigma.push_back(P.mod(i - j));
        facets.emplace_back(std::move(sigma));

        std::vector<Label> mu;
        if (variant == FamilyVariant::M) {
            mu.push_back(i);
            for (int j = 1; j <= d + 1; ++j) mu.push_back(P.mod(i + j * (d + 3) - 1));
        } else {
            for (int j = 0; j <= d + 1; ++j) mu.push_back(P.mod(i - (long long)j * (d + 3)));
        }
        facets.emplace_back(std::move(mu));

        for (int k = 1; k <= d; ++k) {
            std::vector<Label> alpha;
            alpha.push_back(i);
            for (int j = 2; j <= d + 2 - k; ++j) alpha.push_back(P.mod(i - j));
            if (variant == FamilyVariant::M) {
                for (int j = 1; j <= k; ++j) alpha.push_back(P.mod(i + j * (d + 3) - 1));
            } else {
                for (int j = 2; j <= k + 1; ++j) alpha.push_back(P.mod(i - (long long)j * (d + 3)));
            }
            facets.emplace_back(std::move(alpha));
        }
    }

    Family fam;
    fam.d = d;
    fam.n = P.n;
    fam.filling = Complex::from_facets(std::move(facets));
    if (fam.filling.facet_count() != static_cast<std::size_t>((d + 2) * P.n))
        throw ConstructionBug("family facets collide mod n at d=" + std::to_string(d));
    fam.manifold = boundary(fam.filling);
    return fam;
}

} // namespace

Family family_M(int d) { return build_family(d, FamilyVariant::M); }
Family family_N(int d) { return build_family(d, FamilyVariant::N); }

FamilyDecomposition family_M_decomposition(int d) {
    if (d < 2) throw DimOutOfRange("families are defined for d >= 2");
    FamilyParams P{d, d * d + 5 * d + 5};
    FamilyDecomposition out;
    std::vector<Face> sig, mu;
    for (int i = 0; i < P.n; ++i) {
        std::vector<Label> s;
        for (int j = 0; j <= d + 1; ++j) s.push_back(P.mod(i - j));
        sig.emplace_back(std::move(s));
        std::vector<Label> m{i};
        for (int j = 1; j <= d + 1; ++j) m.push_back(P.mod(i + j * (d + 3) - 1));
        mu.emplace_back(std::move(m));
    }
    out.E1 = Complex::from_facets(std::move(sig));
    out.E2 = Complex::from_facets(std::move(mu));
    for (int i = 0; i < P.n; ++i) {
        std::vector<Face> alphas;
        for (int k = 1; k <= d; ++k) {
            std::vector<Label> a{i};
            for (int j = 2; j <= d + 2 - k; ++j) a.push_back(P.mod(i - j));
            for (int j = 1; j <= k; ++j) a.push_back(P.mod(i + j * (d + 3) - 1));
            alphas.emplace_back(std::move(a));
        }
        out.F.push_back(Complex::from_facets(std::move(alphas)));
    }
    return out;
}

namespace {

// Union-find over labels; the class representative is the smallest label.
class Merge {
  public:
    Label find(Label x) const {
        auto it = parent_.find(x);
        while (it != parent_.end()) {
            x = it->second;
            it = parent_.find(x);
        }
        return x;
    }
    void unite(Label a, Label b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (b < a) std::swap(a, b);
        parent_[b] = a;
    }

  private:
    std::map<Label, Label> parent_;
};

std::map<Label, std::set<Label>> adjacency(const Complex& X) {
    std::map<Label, std::set<Label>> adj;
    for (const Face& f : X.facets()) {
        for (Label u : f)
            for (Label v : f)
                if (u != v) adj[u].insert(v);
    }
    return adj;
}

} // namespace

HandleAddition handle_addition(const Complex& X, const GluingMap& g) {
    if (!X.has_facet(g.source)) throw NotFacet(g.source.str());
    if (!X.has_facet(g.target)) throw NotFacet(g.target.str());
    if (!g.source.disjoint_from(g.target)) throw NotDisjoint();

    HandleAddition out;
    out.admissible = true;
    auto adj = adjacency(X);
    for (auto [u, pu] : g.pairing) {
        const auto& nu = adj[u];
        const auto& npu = adj[pu];
        for (Label v : nu) {
            if (npu.count(v)) {
                out.admissible = false;
                out.witness = InadmissibleGluing(u, pu, v);
                break;
            }
        }
        if (!out.admissible) break;
    }

    Merge merge;
    for (auto [u, pu] : g.pairing) merge.unite(u, pu);
    std::vector<Face> facets;
    facets.reserve(X.facet_count() - 2);
    for (const Face& f : X.facets()) {
        if (f == g.source || f == g.target) continue;
        std::vector<Label> labels;
        labels.reserve(f.size());
        for (Label v : f) labels.push_back(merge.find(v));
        facets.emplace_back(std::move(labels));
    }
    out.complex = Complex::from_facets(std::move(facets));
    return out;
}

Permutation identity_permutation(int size) {
    Permutation p(static_cast<std::size_t>(size));
    std::iota(p.begin(), p.end(), 1);
    return p;
}

bool permutation_is_even(const Permutation& sigma) {
    int inversions = 0;
    for (std::size_t i = 0; i < sigma.size(); ++i)
        for (std::size_t j = i + 1; j < sigma.size(); ++j)
            if (sigma[i] > sigma[j]) ++inversions;
    return inversions % 2 == 0;
}

Complex sphere_bundle(int d, int m, const Permutation& sigma) {
    if (d < 2) throw DimOutOfRange("sphere bundles are defined for d >= 2");
    if (m < d + 1) throw DimOutOfRange("m too small: end simplices overlap");
    Permutation sorted(sigma);
    std::sort(sorted.begin(), sorted.end());
    if (sorted != identity_permutation(d + 1))
        throw Error("sigma is not a permutation of {1..d+1}");

    Complex M = boundary(path_ball(d + 1, m));
    std::vector<Label> a, b;
    for (int i = 1; i <= d + 1; ++i) a.push_back(i);
    for (int i = m + 1; i <= m + d + 1; ++i) b.push_back(i);
    std::vector<std::pair<Label, Label>> pairing;
    for (int i = 1; i <= d + 1; ++i)
        pairing.emplace_back(i, m + sigma[static_cast<std::size_t>(i - 1)]);
    GluingMap g = GluingMap::make(Face::from_sorted(a), Face::from_sorted(b),
                                  std::move(pairing));
    HandleAddition ha = handle_addition(M, g);
    if (!ha.admissible) throw *ha.witness;
    return ha.complex;
}

// --- Lemma-replay machinery ------------------------------------------------

namespace {

// Vertex labels for the replay complexes, packed into disjoint ranges:
//   a_j -> j+4 (j in -4..28), u_j -> 100+j, v_j -> 200+j, w_j -> 300+j,
//   b_m -> 400+m (m in 0..28 and the four cut vertices 34, 40, 46, 52).
Label A(int j) { return j + 4; }
Label U(int j) { return 100 + j; }
Label V(int j) { return 200 + j; }
Label W(int j) { return 300 + j; }
Label Bv(int m) { return 400 + m; }

// The spine of B2 is a path ball over the b-vertices in the order
// 5, 11, 17, ..., (5+6q mod 29), ...; the last four slots are the cut
// vertices 34, 40, 46, 52 that open up the mu-cycle.
Label spine(int q) {
    if (q < 29) return Bv((5 + 6 * q) % 29);
    return Bv(5 + 6 * (q - 29) + 29); // 34, 40, 46, 52
}

std::vector<Face> b2_facets(FamilyVariant variant) {
    std::vector<Face> facets;
    for (int p = 0; p <= 28; ++p) { // mu windows along the spine
        std::vector<Label> f;
        for (int t = 0; t < 5; ++t) f.push_back(spine(p + t));
        facets.emplace_back(std::move(f));
    }
    for (int i = 0; i <= 28; ++i) { // one tooth per index
        const int q = (5 * i) % 29;
        // The b-part of tooth i occupies spine slots q, q+1, q+2, q+4;
        // slot q+4 is the vertex identified with a_i by the i-th handle
        // (a cut vertex when q+4 > 28, i.e. i in {5, 11, 17, 23}).
        Label s0 = spine(q), s1 = spine(q + 1), s2 = spine(q + 2), top = spine(q + 4);
        if (variant == FamilyVariant::M) {
            facets.push_back(Face{U(i - 4), V(i - 3), W(i - 2), top, s0});
            facets.push_back(Face{V(i - 3), W(i - 2), top, s0, s1});
            facets.push_back(Face{W(i - 2), top, s0, s1, s2});
        } else {
            facets.push_back(Face{U(i - 4), V(i - 3), W(i - 2), top, s2});
            facets.push_back(Face{V(i - 3), W(i - 2), top, s2, s1});
            facets.push_back(Face{W(i - 2), top, s2, s1, s0});
        }
    }
    return facets;
}

} // namespace

ReplayData build_replay_data(FamilyVariant variant) {
    ReplayData data;

    std::vector<Face> b1;
    for (int i = 0; i <= 28; ++i)
        b1.push_back(Face{A(i - 4), A(i - 3), A(i - 2), A(i - 1), A(i)});
    data.B1 = Complex::from_facets(b1);
    data.B2 = Complex::from_facets(b2_facets(variant));

    // Glue B1 and B2 along one boundary tetrahedron:
    // u_-4 v_-3 w_-2 b_0  ->  a_-4 a_-3 a_-2 a_0.
    std::map<Label, Label> seam{{U(-4), A(-4)}, {V(-3), A(-3)}, {W(-2), A(-2)}, {Bv(0), A(0)}};
    const Complex b2_glued = relabel(data.B2, seam);
    std::vector<Face> all(b1);
    for (const Face& f : b2_glued.facets()) all.push_back(f);
    data.B = Complex::from_facets(all);
    data.S = boundary(data.B);

    for (int i = 1; i <= 28; ++i) {
        const int q = (5 * i) % 29;
        Face alpha{U(i - 4), V(i - 3), W(i - 2), spine(q + 4)};
        Face beta{A(i - 4), A(i - 3), A(i - 2), A(i)};
        data.handles.push_back(GluingMap::make(alpha, beta,
                                               {{U(i - 4), A(i - 4)},
                                                {V(i - 3), A(i - 3)},
                                                {W(i - 2), A(i - 2)},
                                                {spine(q + 4), A(i)}}));
    }
    data.handles.push_back(GluingMap::make(
        Face{A(-4), A(-3), A(-2), A(-1)}, Face{A(25), A(26), A(27), A(28)},
        {{A(-4), A(25)}, {A(-3), A(26)}, {A(-2), A(27)}, {A(-1), A(28)}}));
    data.handles.push_back(GluingMap::make(
        Face{Bv(34), Bv(40), Bv(46), Bv(52)}, Face{Bv(5), Bv(11), Bv(17), Bv(23)},
        {{Bv(34), Bv(5)}, {Bv(40), Bv(11)}, {Bv(46), Bv(17)}, {Bv(52), Bv(23)}}));
    return data;
}

ReplayOutcome replay_lemma_handles(FamilyVariant variant, int stop_after) {
    if (stop_after < 0 || stop_after > 30)
        throw DimOutOfRange("stop_after must be in 0..30");
    ReplayData data = build_replay_data(variant);

    ReplayOutcome out;
    Certificate& cert = out.certificate;
    cert.subject = variant == FamilyVariant::M ? "replay_M3_29" : "replay_N3_29";
    cert.parameters = {{"variant", variant == FamilyVariant::M ? "M" : "N"},
                       {"stop_after", stop_after}};

    cert.add("B1_stacked_ball", is_stacked_ball(data.B1),
             std::to_string(data.B1.vertex_count()) + " vertices, " +
                 std::to_string(data.B1.facet_count()) + " facets");
    cert.add("B2_stacked_ball", is_stacked_ball(data.B2),
             std::to_string(data.B2.vertex_count()) + " vertices, " +
                 std::to_string(data.B2.facet_count()) + " facets",
             {{"f0", data.B2.vertex_count()}, {"facets", data.B2.facet_count()}});
    cert.add("B_stacked_ball", is_stacked_ball(data.B),
             std::to_string(data.B.vertex_count()) + " vertices");
    cert.add("S_vertex_count", data.S.vertex_count() == 149,
             std::to_string(data.S.vertex_count()) + " vertices");
    SphereReduction red = is_stacked_sphere(data.S);
    cert.add("S_stacked_sphere", red.is_sphere, red.reason);

    Complex current = data.S;
    Merge merge;
    std::vector<std::int64_t> trajectory{
        static_cast<std::int64_t>(current.vertex_count())};
    bool aborted = false;
    for (int step = 1; step <= stop_after; ++step) {
        const GluingMap& g = data.handles[static_cast<std::size_t>(step - 1)];
        // Earlier identifications may have renamed the vertices this handle
        // mentions; translate through the merge history first.
        std::vector<Label> src, tgt;
        std::vector<std::pair<Label, Label>> pairing;
        for (auto [u, t] : g.pairing) {
            src.push_back(merge.find(u));
            tgt.push_back(merge.find(t));
            pairing.emplace_back(merge.find(u), merge.find(t));
        }
        const std::string name = "handle_" + std::to_string(step);
        try {
            GluingMap gi = GluingMap::make(Face{std::vector<Label>(src)},
                                           Face{std::vector<Label>(tgt)}, pairing);
            HandleAddition ha = handle_addition(current, gi);
            nlohmann::json witness = {{"alpha", gi.source.labels()},
                                      {"beta", gi.target.labels()},
                                      {"admissible", ha.admissible}};
            if (!ha.admissible && ha.witness)
                witness["common_neighbor"] = {{"u", ha.witness->source_vertex},
                                              {"psi_u", ha.witness->target_vertex},
                                              {"v", ha.witness->common_neighbor}};
            cert.add(name, ha.admissible, ha.admissible ? "admissible" : "inadmissible",
                     std::move(witness));
            if (!ha.admissible) {
                aborted = true;
                break;
            }
            for (auto [u, t] : pairing) merge.unite(u, t);
            current = ha.complex;
            trajectory.push_back(static_cast<std::int64_t>(current.vertex_count()));
        } catch (const Error& e) {
            cert.add(name, false, e.what());
            aborted = true;
            break;
        }
    }

    {
        CheckResult r;
        r.name = "vertex_trajectory";
        const bool ok = !aborted &&
            trajectory.back() == 149 - 4 * static_cast<std::int64_t>(trajectory.size() - 1);
        r.verdict = ok ? Verdict::Pass : Verdict::Fail;
        r.detail = "149 -> " + std::to_string(trajectory.back()) + " (4 merges per handle)";
        r.witness = {{"vertex_counts", trajectory}};
        cert.add(std::move(r));
    }

    if (!aborted) {
        cert.add("in_K3", in_walkup_K(current).verdict,
                 "all vertex links are stacked 2-spheres");
        if (stop_after == 30) {
            Family fam = variant == FamilyVariant::M ? family_M(3) : family_N(3);
            auto iso = isomorphic(current, fam.manifold);
            nlohmann::json witness = nlohmann::json::object();
            if (iso) witness["isomorphism"] = permutation_json(iso->mapping);
            cert.add("isomorphic_to_boundary", iso.has_value(),
                     iso ? "facet-preserving bijection found" : "no isomorphism found",
                     std::move(witness));
        }
    }

    out.final_complex = std::move(current);
    return out;
}

} // namespace walkup
