#pragma once

#include <cstdint>
#include <vector>

#include "walkup/certificate.hpp"
#include "walkup/complex.hpp"
#include "walkup/generators.hpp"

namespace walkup {

// Per-facet sign relative to the facet's sorted vertex order. Coherent when
// every ridge receives opposite induced orientations from its two facets.
struct OrientationAssignment {
    int basepoint = 0;              // facet index the propagation started from
    std::vector<int> sign;          // +1 / -1 per facet, facet-list order
};

struct OrientabilityResult {
    bool orientable = false;
    OrientationAssignment assignment;   // valid when orientable
    std::vector<int> witness_cycle;     // facet indices of a flipping dual cycle
};

// Sign induced on `ridge` by `facet` carrying `facet_sign`: the usual
// (-1)^position rule for the omitted vertex in the sorted facet.
int induced_sign(const Face& facet, int facet_sign, const Face& ridge);

// Decides orientability of a closed weak pseudomanifold with connected dual
// graph by sign propagation over the dual graph. `basepoint` picks the start
// facet; `traversal_seed` permutes neighbor visit order (the verdict must
// not depend on either).
OrientabilityResult orientability(const Complex& X, int basepoint = 0,
                                  std::uint64_t traversal_seed = 0);

// Compares orientability of the sphere bundle X^d_m(sigma) against the
// parity law: orientable iff (md even and sigma even) or (md odd and sigma
// odd).
Certificate bundle_parity_check(int d, int m, const Permutation& sigma);

} // namespace walkup
