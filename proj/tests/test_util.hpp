#pragma once

// Seeded generators for randomized tests.

#include <algorithm>
#include <map>
#include <random>
#include <vector>

#include "walkup/complex.hpp"
#include "walkup/generators.hpp"

namespace walkup::testutil {

using Rng = std::mt19937_64;

inline int uniform(Rng& rng, int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

// Random small complex: a handful of random vertex subsets.
inline Complex random_complex(Rng& rng, int max_vertices = 8, int max_facet_size = 4,
                              int max_facets = 8) {
    const int n = uniform(rng, 1, max_vertices);
    const int count = uniform(rng, 1, max_facets);
    std::vector<std::vector<Label>> facets;
    for (int i = 0; i < count; ++i) {
        const int size = uniform(rng, 1, std::min(n, max_facet_size));
        std::vector<Label> f;
        for (int j = 0; j < size; ++j) f.push_back(uniform(rng, 0, n - 1));
        facets.push_back(std::move(f));
    }
    return build_complex(facets);
}

// Random stacked d-ball grown by gluing fresh-apex facets onto boundary
// ridges.
inline Complex random_stacked_ball(Rng& rng, int d, int extra_facets) {
    std::vector<Face> facets = simplex_ball(d).facets();
    Label next = d + 1;
    for (int step = 0; step < extra_facets; ++step) {
        // boundary ridges of the current complex
        std::map<Face, int> ridge_count;
        for (const Face& f : facets)
            for (Label v : f) ++ridge_count[f.without(v)];
        std::vector<Face> boundary_ridges;
        for (const auto& [r, c] : ridge_count)
            if (c == 1) boundary_ridges.push_back(r);
        const Face& ridge =
            boundary_ridges[static_cast<std::size_t>(uniform(
                rng, 0, static_cast<int>(boundary_ridges.size()) - 1))];
        std::vector<Label> f(ridge.begin(), ridge.end());
        f.push_back(next++);
        facets.emplace_back(f);
    }
    return Complex::from_facets(std::move(facets));
}

// Random vertex relabeling onto fresh labels.
inline std::map<Label, Label> random_relabeling(Rng& rng, const Complex& X, Label offset) {
    std::vector<Label> targets;
    for (std::size_t i = 0; i < X.vertex_count(); ++i)
        targets.push_back(offset + static_cast<Label>(i));
    std::shuffle(targets.begin(), targets.end(), rng);
    std::map<Label, Label> m;
    std::size_t i = 0;
    for (Label v : X.vertices()) m[v] = targets[i++];
    return m;
}

} // namespace walkup::testutil
