#include <doctest.h>

#include <set>

#include "test_util.hpp"
#include "walkup/errors.hpp"
#include "walkup/generators.hpp"
#include "walkup/symmetry.hpp"

using namespace walkup;

TEST_SUITE("symmetry") {

TEST_CASE("cyclic shift action") {
    CHECK(verify_cyclic_action(family_M(3).manifold, 29));
    CHECK(verify_cyclic_action(family_N(4).filling, 41));
    CHECK_THROWS_AS(verify_cyclic_action(path_ball(3, 2), 5), LabelMismatch);
    // relabel the path ball to {0..4}: still no cyclic symmetry
    std::map<Label, Label> down;
    for (Label v = 1; v <= 5; ++v) down[v] = v - 1;
    CHECK_FALSE(verify_cyclic_action(relabel(path_ball(3, 2), down), 5));
}

TEST_CASE("automorphism group orders") {
    CHECK(automorphism_group(simplex_sphere(2)).order == 24);
    CHECK(automorphism_group(family_M(2).manifold).order == 19);
    CHECK(automorphism_group(family_N(2).manifold).order == 19);
}

TEST_CASE("automorphism group of the 29-vertex manifolds") {
    GroupDescription m = automorphism_group(family_M(3).manifold);
    CHECK(m.order == 29);
    GroupDescription n = automorphism_group(family_N(3).manifold);
    CHECK(n.order == 29);
    // generators really are automorphisms, and the closure has the stated order
    Complex M3 = family_M(3).manifold;
    for (const auto& g : m.generators) CHECK(is_automorphism(M3, g));
    CHECK(group_elements(m.generators).size() == 29);
}

TEST_CASE("cone inputs are rejected") {
    CHECK_THROWS_AS(automorphism_group(simplex_ball(3)), ConeNotSupported);
    CHECK_THROWS_AS(automorphism_group(cone(simplex_sphere(1), 99)), ConeNotSupported);
}

TEST_CASE("order cap") {
    CHECK_THROWS_AS(automorphism_group(simplex_sphere(3), 10), OrderCapExceeded);
}

TEST_CASE("induced dual-graph action is injective") {
    Complex X = family_M(2).manifold;
    GroupDescription g = automorphism_group(X);
    auto elements = group_elements(g.generators);
    CHECK(elements.size() == g.order);
    // map each group element to its facet permutation; all must differ
    std::set<std::vector<int>> facet_perms;
    for (const auto& p : elements) {
        std::vector<int> perm;
        for (const Face& f : X.facets()) {
            std::vector<Label> img;
            for (Label v : f) img.push_back(p.mapping.at(v));
            perm.push_back(X.facet_index(Face{std::move(img)}));
        }
        facet_perms.insert(perm);
    }
    CHECK(facet_perms.size() == elements.size());
}

TEST_CASE("filling automorphisms restrict to boundary automorphisms") {
    for (int d = 2; d <= 4; ++d) {
        Family fam = family_M(d);
        GroupDescription g = automorphism_group(fam.filling);
        CHECK(g.order == static_cast<std::uint64_t>(fam.n));
        for (const auto& p : g.generators) CHECK(is_automorphism(fam.manifold, p));
    }
    // and the d=4 boundary has the same group order as its filling
    CHECK(automorphism_group(family_M(4).manifold).order == 41);
}

TEST_CASE("isomorphic finds relabelings") {
    testutil::Rng rng(4242);
    Complex X = family_M(2).manifold;
    for (int trial = 0; trial < 3; ++trial) {
        Complex Y = relabel(X, testutil::random_relabeling(rng, X, 300));
        auto iso = isomorphic(X, Y);
        REQUIRE(iso.has_value());
        // verify it really maps facets to facets
        for (const Face& f : X.facets()) {
            std::vector<Label> img;
            for (Label v : f) img.push_back(iso->mapping.at(v));
            CHECK(Y.has_facet(Face{std::move(img)}));
        }
    }
    for (int trial = 0; trial < 10; ++trial) {
        Complex R = testutil::random_complex(rng);
        Complex RR = relabel(R, testutil::random_relabeling(rng, R, 300));
        CHECK(isomorphic(R, RR).has_value());
    }
}

TEST_CASE("M and N boundaries are non-isomorphic") {
    CHECK_FALSE(isomorphic(family_M(2).manifold, family_N(2).manifold).has_value());
    CHECK_FALSE(isomorphic(family_M(3).manifold, family_N(3).manifold).has_value());
}

TEST_CASE("edge-in-seven-facets invariant separates the d=3 pair") {
    auto facet_counts_per_edge = [](const Complex& X) {
        std::map<Face, int> count;
        for (const Face& f : X.facets()) {
            const auto& v = f.labels();
            for (std::size_t i = 0; i < v.size(); ++i)
                for (std::size_t j = i + 1; j < v.size(); ++j)
                    ++count[Face{v[i], v[j]}];
        }
        std::multiset<int> values;
        for (const auto& [e, c] : count) values.insert(c);
        return values;
    };
    auto m = facet_counts_per_edge(family_M(3).manifold);
    auto n = facet_counts_per_edge(family_N(3).manifold);
    CHECK(m.count(7) > 0);
    CHECK(n.count(7) == 0);
    // the specific witnesses: edges a_i a_{i+12} lie in seven facets of M
    std::map<Face, int> count;
    Complex M = family_M(3).manifold;
    for (const Face& f : M.facets()) {
        const auto& v = f.labels();
        for (std::size_t i = 0; i < v.size(); ++i)
            for (std::size_t j = i + 1; j < v.size(); ++j)
                ++count[Face{v[i], v[j]}];
    }
    CHECK(count[Face{0, 12}] == 7);
    CHECK(count[Face{3, 15}] == 7);
}

} // TEST_SUITE
