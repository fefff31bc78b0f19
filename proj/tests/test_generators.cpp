#include <doctest.h>

#include "test_util.hpp"
#include "walkup/errors.hpp"
#include "walkup/generators.hpp"
#include "walkup/homology.hpp"
#include "walkup/stacked.hpp"
#include "walkup/symmetry.hpp"

using namespace walkup;

TEST_SUITE("generators") {

TEST_CASE("simplex ball and sphere") {
    CHECK(simplex_ball(3).facets().front() == Face{0, 1, 2, 3});
    Complex S2 = simplex_sphere(2);
    CHECK(S2.facet_count() == 4);
    CHECK(S2.vertex_count() == 4);
    for (int d = 1; d <= 5; ++d) {
        FVector fv = f_vector(simplex_sphere(d));
        std::int64_t choose = 1;
        for (int j = 0; j <= d; ++j) {
            choose = 1;
            for (int i = 0; i < j + 1; ++i)
                choose = choose * (d + 2 - i) / (i + 1);
            CHECK(fv.counts[static_cast<std::size_t>(j)] == choose);
        }
    }
}

TEST_CASE("path balls") {
    Complex B = path_ball(3, 2);
    CHECK(B.facet_count() == 2);
    CHECK(B.has_facet(Face{1, 2, 3, 4}));
    CHECK(B.has_facet(Face{2, 3, 4, 5}));

    Complex B1 = path_ball(4, 29);
    CHECK(B1.vertex_count() == 33);
    CHECK(is_stacked_ball(B1));

    for (int D = 1; D <= 4; ++D)
        for (int m = 1; m <= 6; ++m)
            CHECK(is_stacked_ball(path_ball(D, m)));
}

TEST_CASE("explicit facets of the d=2 families") {
    Family M2 = family_M(2);
    CHECK(M2.n == 19);
    CHECK(M2.filling.facet_count() == 76);
    CHECK(M2.filling.has_facet(Face{0, 16, 17, 18})); // sigma_0
    CHECK(M2.filling.has_facet(Face{0, 4, 9, 14}));   // mu_0
    CHECK(M2.filling.has_facet(Face{0, 4, 16, 17}));  // alpha_{1,0}
    CHECK(M2.filling.has_facet(Face{0, 4, 9, 17}));   // alpha_{2,0}

    Family N2 = family_N(2);
    CHECK(N2.filling.has_facet(Face{0, 4, 9, 14}));  // mu_0 = {0,14,9,4} mod 19
    CHECK(N2.filling.has_facet(Face{0, 9, 16, 17})); // alpha_{1,0} uses a_{i-2(d+3)}
    CHECK(N2.filling.has_facet(Face{0, 4, 9, 17}));  // alpha_{2,0}
    // the two fillings differ exactly in their alpha facets
    CHECK_FALSE(family_M(2).filling == N2.filling);
}

TEST_CASE("family counts for d up to 6") {
    for (int d = 2; d <= 6; ++d) {
        const int n = d * d + 5 * d + 5;
        for (FamilyVariant variant : {FamilyVariant::M, FamilyVariant::N}) {
            Family fam = variant == FamilyVariant::M ? family_M(d) : family_N(d);
            CHECK(fam.n == n);
            CHECK(fam.filling.vertex_count() == static_cast<std::size_t>(n));
            CHECK(fam.filling.facet_count() == static_cast<std::size_t>((d + 2) * n));
            for (const Face& f : fam.filling.facets())
                CHECK(static_cast<int>(f.size()) == d + 2);
            CHECK(is_l_neighborly(fam.filling, 2));
        }
    }
    CHECK_THROWS_AS(family_M(1), DimOutOfRange);
}

TEST_CASE("fillings lie in Kbar(d+1), boundaries are closed and neighborly") {
    for (int d = 2; d <= 3; ++d) {
        Family fam = family_M(d);
        CHECK(in_walkup_Kbar(fam.filling).verdict);
        CHECK(boundary(fam.manifold).empty());
        CHECK(is_l_neighborly(fam.manifold, 2));
    }
    Family n3 = family_N(3);
    CHECK(in_walkup_Kbar(n3.filling).verdict);
    CHECK(boundary(n3.manifold).empty());
}

TEST_CASE("vertex count and facet count of the boundaries") {
    for (int d = 2; d <= 4; ++d) {
        Family fam = family_N(d);
        CHECK(fam.manifold.vertex_count() == static_cast<std::size_t>(fam.n));
        FVector fv = f_vector(fam.filling);
        CHECK(fv.counts[0] == fam.n);
        CHECK(fv.counts.back() == static_cast<std::int64_t>((d + 2) * fam.n));
    }
}

TEST_CASE("sphere bundles") {
    Complex T = sphere_bundle(2, 7, identity_permutation(3));
    CHECK(T.vertex_count() == 7);
    CHECK(f_vector(T).euler == 0);
    CHECK(boundary(T).empty());

    Complex X39 = sphere_bundle(3, 9, identity_permutation(4));
    CHECK(X39.vertex_count() == 9);
    CHECK(f_vector(X39).euler == 0);

    CHECK_THROWS_AS(sphere_bundle(2, 6, identity_permutation(3)), InadmissibleGluing);
    try {
        sphere_bundle(2, 6, identity_permutation(3));
    } catch (const InadmissibleGluing& e) {
        // witness names an identified pair and a common neighbor
        CHECK(e.source_vertex >= 1);
        CHECK(e.target_vertex > 6);
        CHECK(e.common_neighbor >= 1);
    }
}

TEST_CASE("bundle admissibility threshold") {
    // at m = 2d+3 only the identity is admissible
    CHECK_NOTHROW(sphere_bundle(2, 7, identity_permutation(3)));
    CHECK_THROWS_AS(sphere_bundle(2, 7, Permutation{2, 1, 3}), InadmissibleGluing);
    CHECK_THROWS_AS(sphere_bundle(3, 9, Permutation{2, 1, 3, 4}), InadmissibleGluing);
    // for m >= 3d+3 every permutation is admissible
    for (int d = 2; d <= 3; ++d) {
        Permutation sigma = identity_permutation(d + 1);
        int count = 0;
        do {
            CHECK_NOTHROW(sphere_bundle(d, 3 * d + 3, sigma));
            CHECK_NOTHROW(sphere_bundle(d, 3 * d + 4, sigma));
            ++count;
        } while (std::next_permutation(sigma.begin(), sigma.end()));
        CHECK(count == (d == 2 ? 6 : 24));
    }
}

TEST_CASE("handle addition") {
    Complex M = boundary(path_ball(3, 9)); // 2-sphere, ends {1,2,3} and {10,11,12}
    GluingMap g = GluingMap::make(Face{1, 2, 3}, Face{10, 11, 12},
                                  {{1, 10}, {2, 11}, {3, 12}});
    HandleAddition ha = handle_addition(M, g);
    CHECK(ha.admissible);
    CHECK(ha.complex.vertex_count() == 9);
    // a surface handle drops the Euler characteristic by 2
    CHECK(f_vector(ha.complex).euler == f_vector(M).euler - 2);
    CHECK(skeleton2(ha.complex).betti1 == skeleton2(M).betti1 + 2);

    // label-stable: identical inputs give identical facet lists
    HandleAddition again = handle_addition(M, g);
    CHECK(again.complex == ha.complex);

    CHECK_THROWS_AS(handle_addition(M, GluingMap::make(Face{1, 2, 5}, Face{10, 11, 12},
                                                       {{1, 10}, {2, 11}, {5, 12}})),
                    NotFacet);
    CHECK_THROWS_AS(GluingMap::make(Face{1, 2, 3}, Face{3, 10, 11}, {{1, 3}, {2, 10}, {3, 11}}),
                    NotDisjoint);
}

TEST_CASE("beta_1 grows by one per admissible handle in the replay") {
    ReplayData data = build_replay_data(FamilyVariant::M);
    Complex current = data.S;
    std::int64_t b1 = skeleton2(current).betti1;
    CHECK(b1 == 0);
    // apply the first three handles, tracking beta_1
    std::map<Label, Label> tr;
    for (int step = 0; step < 3; ++step) {
        const GluingMap& g = data.handles[static_cast<std::size_t>(step)];
        auto find = [&](Label v) { return tr.count(v) ? tr.at(v) : v; };
        std::vector<std::pair<Label, Label>> pairing;
        std::vector<Label> src, tgt;
        for (auto [u, t] : g.pairing) {
            pairing.emplace_back(find(u), find(t));
            src.push_back(find(u));
            tgt.push_back(find(t));
        }
        HandleAddition ha = handle_addition(
            current, GluingMap::make(Face{std::vector<Label>(src)},
                                     Face{std::vector<Label>(tgt)}, pairing));
        REQUIRE(ha.admissible);
        for (auto [u, t] : pairing) tr[std::max(u, t)] = std::min(u, t);
        current = ha.complex;
        CHECK(skeleton2(current).betti1 == ++b1);
    }
}

TEST_CASE("replay data shapes") {
    ReplayData data = build_replay_data(FamilyVariant::M);
    CHECK(data.B1.vertex_count() == 33);
    CHECK(data.B1.facet_count() == 29);
    CHECK(data.B2.vertex_count() == 120);
    CHECK(data.B2.facet_count() == 116);
    CHECK(dual_graph(data.B2).is_tree());
    CHECK(data.B.vertex_count() == 149);
    CHECK(data.B.facet_count() == 145);
    CHECK(data.S.vertex_count() == 149);
    CHECK(data.handles.size() == 30);
}

TEST_CASE("replay truncation keeps class membership") {
    ReplayOutcome one = replay_lemma_handles(FamilyVariant::M, 1);
    CHECK(one.final_complex.vertex_count() == 145);
    CHECK(one.certificate.find("in_K3")->verdict == Verdict::Pass);
    CHECK(one.certificate.find("vertex_trajectory")->verdict == Verdict::Pass);
}

} // TEST_SUITE
