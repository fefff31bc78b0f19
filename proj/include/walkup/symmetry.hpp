#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "walkup/complex.hpp"

namespace walkup {

// Bijection on a complex's vertex set, stored as label -> image.
struct VertexPermutation {
    std::map<Label, Label> mapping;

    Label operator()(Label v) const { return mapping.at(v); }
};

struct GroupDescription {
    std::vector<VertexPermutation> generators;
    std::uint64_t order = 1;
};

// True iff the label shift i -> i+1 (mod n) maps facets to facets.
// Requires the label set to be exactly {0..n-1}.
bool verify_cyclic_action(const Complex& X, int n);

// Facet-preserving vertex bijection between X and Y, if one exists.
// Backtracking over vertex images with iterated invariant refinement
// (degree, facet counts through vertex pairs); first hit is returned.
std::optional<VertexPermutation> isomorphic(const Complex& X, const Complex& Y);

// Full automorphism group via a point-stabilizer chain: generators found by
// the same pruned backtracking, exact order as the product of orbit sizes.
// Rejects cones (the dual-graph embedding of the group degenerates there).
GroupDescription automorphism_group(const Complex& X,
                                    std::uint64_t order_cap = 10'000'000);

// Post-hoc validation: every facet maps to a facet, bijectively.
bool is_automorphism(const Complex& X, const VertexPermutation& p);

VertexPermutation compose(const VertexPermutation& outer, const VertexPermutation& inner);
bool is_identity(const VertexPermutation& p);

// All group elements generated by `gens` (breadth-first closure), capped.
std::vector<VertexPermutation> group_elements(const std::vector<VertexPermutation>& gens,
                                              std::uint64_t cap = 1'000'000);

} // namespace walkup
