#include <doctest.h>

#include "oracle.hpp"
#include "test_util.hpp"
#include "walkup/complex.hpp"
#include "walkup/errors.hpp"
#include "walkup/generators.hpp"
#include "walkup/io.hpp"

#include <sstream>

using namespace walkup;

namespace {
// 7-vertex 3-pseudomanifold whose dual graph is a tree but which is not a
// ball.
Complex seven_vertex_P() {
    return build_complex({{1, 2, 3, 4}, {2, 3, 4, 5}, {3, 4, 5, 6}, {4, 5, 6, 7}, {1, 5, 6, 7}});
}
} // namespace

TEST_SUITE("complex") {

TEST_CASE("build_complex canonicalizes") {
    Complex X = build_complex({{1, 2, 3}, {2, 3, 4}});
    CHECK(X.dim() == 2);
    CHECK(X.vertex_count() == 4);
    CHECK(X.facet_count() == 2);

    // non-maximal faces dropped, duplicates merged
    Complex Y = build_complex({{1, 2}, {1, 2, 3}, {3, 2, 1}});
    CHECK(Y.facet_count() == 1);
    CHECK(Y.facets().front() == Face{1, 2, 3});

    CHECK_THROWS_AS(build_complex({}), EmptyComplex);
    CHECK_THROWS_AS(build_complex({{1, 2}, {}}), EmptyComplex);
}

TEST_CASE("purity is recorded, not required") {
    Complex X = build_complex({{1, 2, 3}, {4, 5}});
    CHECK_FALSE(X.pure());
    CHECK(X.dim() == 2);
    CHECK_THROWS_AS(dual_graph(X), NotPure);
}

TEST_CASE("f_vector basics") {
    FVector fv = f_vector(simplex_sphere(2));
    CHECK(fv.counts == std::vector<std::int64_t>{4, 6, 4});
    CHECK(fv.euler == 2);

    FVector pb = f_vector(path_ball(3, 2));
    CHECK(pb.counts == std::vector<std::int64_t>{5, 9, 7, 2});
}

TEST_CASE("f_vector of the generated boundaries") {
    FVector m2 = f_vector(family_M(2).manifold);
    CHECK(m2.counts == std::vector<std::int64_t>{19, 171, 114});
    CHECK(m2.euler == -38);

    FVector m3 = f_vector(family_M(3).manifold);
    CHECK(m3.counts == std::vector<std::int64_t>{29, 406, 754, 377});
    CHECK(m3.euler == 0);
}

TEST_CASE("link and star") {
    Complex S = simplex_sphere(2);
    Complex lk = link(S, Face{0});
    CHECK(lk.dim() == 1);
    CHECK(lk.vertex_count() == 3);
    CHECK(lk.facet_count() == 3); // a 3-cycle

    Complex st = star(S, Face{0});
    CHECK(st.facet_count() == 3);
    CHECK_THROWS_AS(link(S, Face{9}), FaceNotFound);

    // star = join of the face with its link: every link facet extends by
    // the face to a star facet.
    for (const Face& f : lk.facets())
        CHECK(st.has_facet(f.unite(Face{0})));
}

TEST_CASE("link of a vertex in the 29-vertex 3-manifold") {
    Complex M = family_M(3).manifold;
    Complex lk = link(M, Face{0});
    CHECK(lk.vertex_count() == 28);
    CHECK(lk.dim() == 2);
    FVector fv = f_vector(lk);
    CHECK(fv.euler == 2); // 2-sphere
    CHECK(classify_pseudo(lk) == PseudoClass::Pseudomanifold);

    // degree-7 vertices a_12 and a_17 in that link
    auto degree = [&](Label v) {
        return static_cast<int>(link(lk, Face{v}).vertex_count());
    };
    CHECK(degree(12) == 7);
    CHECK(degree(17) == 7);
    CHECK(degree(22) == 5);
    CHECK(degree(11) == 6);

    // link of a_6 inside the link is the 9-cycle from the stabilizer
    // argument
    Complex lk6 = link(lk, Face{6});
    CHECK(lk6.vertex_count() == 9);
    CHECK(lk6.facet_count() == 9);
    std::vector<Label> cycle = {11, 17, 12, 22, 21, 24, 18, 16, 23};
    for (std::size_t i = 0; i < cycle.size(); ++i) {
        Face e{cycle[i], cycle[(i + 1) % cycle.size()]};
        CHECK(lk6.has_facet(e));
    }
}

TEST_CASE("dual graph") {
    DualGraph G = dual_graph(path_ball(3, 2));
    CHECK(G.node_count() == 2);
    CHECK(G.edge_count() == 1);
    CHECK(G.is_tree());

    DualGraph P = dual_graph(seven_vertex_P());
    CHECK(P.is_tree());
    CHECK(P.edge_count() == 4); // a path

    for (auto [a, b] : P.edges)
        CHECK(P.nodes[static_cast<std::size_t>(a)].intersection_size(
                  P.nodes[static_cast<std::size_t>(b)]) == 3);

    // node count is the top face count; every edge joins facets sharing a ridge
    Complex M2 = family_M(2).manifold;
    DualGraph DM = dual_graph(M2);
    CHECK(DM.node_count() == static_cast<std::size_t>(f_vector(M2).counts.back()));
    for (auto [a, b] : DM.edges)
        CHECK(DM.nodes[static_cast<std::size_t>(a)].intersection_size(
                  DM.nodes[static_cast<std::size_t>(b)]) == 2);
}

TEST_CASE("dual graph of the d=4 filling matches the host graph size") {
    DualGraph G = dual_graph(family_M(4).filling);
    CHECK(G.node_count() == 246);
    CHECK(G.edge_count() == 287);
}

TEST_CASE("classify_pseudo") {
    CHECK(classify_pseudo(build_complex({{1, 2, 3}, {1, 2, 4}, {1, 2, 5}})) ==
          PseudoClass::NotWeak);
    CHECK(classify_pseudo(simplex_sphere(2)) == PseudoClass::Pseudomanifold);
    CHECK(classify_pseudo(build_complex({{1, 2, 3}, {4, 5, 6}})) ==
          PseudoClass::WeakPseudomanifold);
}

TEST_CASE("boundary") {
    Complex bd = boundary(path_ball(3, 2));
    CHECK(bd == build_complex({{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 5}, {2, 4, 5}, {3, 4, 5}}));
    CHECK(boundary(simplex_sphere(2)).empty());
    CHECK_THROWS_AS(boundary(build_complex({{1, 2, 3}, {1, 2, 4}, {1, 2, 5}})), NotWeak);

    // every ridge of the boundary lies in exactly one facet of X
    Complex X = family_M(2).filling;
    Complex bdX = boundary(X);
    for (const Face& r : bdX.facets()) {
        int carriers = 0;
        for (const Face& f : X.facets())
            if (r.subset_of(f)) ++carriers;
        CHECK(carriers == 1);
    }
}

TEST_CASE("neighborliness") {
    CHECK(is_l_neighborly(family_M(2).manifold, 2));
    CHECK(is_l_neighborly(family_N(4).manifold, 2));
    CHECK_FALSE(is_l_neighborly(build_complex({{1, 2, 3}, {4, 5, 6}}), 2));
    CHECK(is_l_neighborly(simplex_sphere(3), 3));
    CHECK_FALSE(is_l_neighborly(simplex_sphere(3), 5));
}

TEST_CASE("induced subcomplexes") {
    Complex S = simplex_sphere(2);
    Complex tri = induced(S, {0, 1, 2});
    CHECK(tri.facet_count() == 1);
    CHECK(tri.facets().front() == Face{0, 1, 2});
    CHECK(induced(S, {}).empty());
    CHECK_THROWS_AS(induced(S, {0, 9}), UnknownVertex);

    Complex M = family_M(2).manifold;
    Complex e = induced(M, {3, 11});
    CHECK(e.facet_count() == 1);
    CHECK(e.dim() == 1);
}

TEST_CASE("downward closure count identity") {
    testutil::Rng rng(2024);
    for (int trial = 0; trial < 40; ++trial) {
        Complex X = testutil::random_complex(rng);
        std::uint64_t bound = 0;
        bool disjoint = true;
        const auto& fs = X.facets();
        for (std::size_t i = 0; i < fs.size(); ++i) {
            bound += (1ULL << fs[i].size()) - 1;
            for (std::size_t j = i + 1; j < fs.size(); ++j)
                if (!fs[i].disjoint_from(fs[j])) disjoint = false;
        }
        const auto total = static_cast<std::uint64_t>(oracle::naive_faces(X).size());
        CHECK(total <= bound);
        CHECK((total == bound) == disjoint);
    }
}

TEST_CASE("star f-vector reconstructible from link") {
    Complex M = family_M(2).manifold;
    Face v{4};
    FVector st = f_vector(star(M, v));
    FVector lk = f_vector(link(M, v));
    // star = cone over link here, so f_j(star) = f_j(link) + f_{j-1}(link) (+1 for the apex)
    CHECK(st.counts[0] == lk.counts[0] + 1);
    for (std::size_t j = 1; j < st.counts.size(); ++j) {
        std::int64_t expected = lk.counts[j - 1];
        if (j < lk.counts.size()) expected += lk.counts[j];
        CHECK(st.counts[j] == expected);
    }
}

TEST_CASE("facet-list round trip") {
    Complex X = family_N(2).manifold;
    std::stringstream buf;
    write_facet_list(buf, X, "round trip");
    Complex Y = read_facet_list(buf);
    CHECK(X == Y);

    std::stringstream bad("1 2\n3 x\n");
    CHECK_THROWS_AS(read_facet_list(bad), ParseError);
    try {
        std::stringstream again("1 2\n3 x\n");
        read_facet_list(again);
    } catch (const ParseError& e) {
        CHECK(e.line == 2);
    }

    std::stringstream comments("# only comments\n\n");
    CHECK_THROWS_AS(read_facet_list(comments), ParseError);

    std::stringstream overflow("1 2\n1 99999999999999999999999\n");
    CHECK_THROWS_AS(read_facet_list(overflow), ParseError);
    std::stringstream negative("1 2\n-3 4\n");
    CHECK_THROWS_AS(read_facet_list(negative), ParseError);
}

} // TEST_SUITE
