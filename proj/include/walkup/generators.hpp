#pragma once

#include <optional>
#include <vector>

#include "walkup/certificate.hpp"
#include "walkup/complex.hpp"
#include "walkup/errors.hpp"

namespace walkup {

// Bijection between two disjoint faces, used for combinatorial handle
// additions and sphere-bundle gluings.
struct GluingMap {
    Face source;
    Face target;
    std::vector<std::pair<Label, Label>> pairing; // source vertex -> target vertex

    // Validates totality, injectivity and disjointness.
    static GluingMap make(const Face& source, const Face& target,
                          std::vector<std::pair<Label, Label>> pairing);
};

Complex simplex_ball(int d);
Complex simplex_sphere(int d);

// Stacked D-ball on vertices {1..m+D} with the m facets {k, ..., k+D}.
Complex path_ball(int D, int m);

struct Family {
    Complex filling;  // (d+1)-dimensional, (d+2)n facets
    Complex manifold; // its boundary, the n-vertex d-manifold
    int d = 0;
    int n = 0;
};

// n = d^2+5d+5 vertex families, d >= 2. Facets sigma_i, mu_i, alpha_{k,i}
// with subscripts mod n; the two families differ in their alpha facets.
Family family_M(int d);
Family family_N(int d);

// The subcomplexes of the M filling spanned by the sigma facets (E1), the
// mu facets (E2) and the per-index alpha path balls F_i. Used by the
// orientation tests.
struct FamilyDecomposition {
    Complex E1;
    Complex E2;
    std::vector<Complex> F; // F[i], i = 0..n-1
};
FamilyDecomposition family_M_decomposition(int d);

// Result of a combinatorial handle addition: the quotient complex plus the
// admissibility report (a common neighbor of an identified pair, if any).
struct HandleAddition {
    Complex complex;
    bool admissible = false;
    std::optional<InadmissibleGluing> witness;
};
HandleAddition handle_addition(const Complex& X, const GluingMap& g);

// Permutation of {1..d+1} as its image list; sigma[i-1] = sigma(i).
using Permutation = std::vector<int>;
Permutation identity_permutation(int size);
bool permutation_is_even(const Permutation& sigma);

// The quotient X^d_m(sigma): boundary of the path (d+1)-ball with the end
// simplices A = {1..d+1}, B = {m+1..m+d+1} removed and identified via
// i -> m + sigma(i). Throws InadmissibleGluing when the identification map
// has a common-neighbor obstruction; admissibility forces m >= 2d+3.
Complex sphere_bundle(int d, int m, const Permutation& sigma);

// --- Lemma-replay machinery ---------------------------------------------

enum class FamilyVariant { M, N };

// The stacked 4-ball B = B1 u B2, its boundary 3-sphere S, and the 30
// gluing maps that collapse S onto the 29-vertex 3-manifold.
struct ReplayData {
    Complex B1;
    Complex B2;
    Complex B;
    Complex S;
    std::vector<GluingMap> handles; // applied in order
};
ReplayData build_replay_data(FamilyVariant variant);

// Replays the handle-addition construction of the 29-vertex 3-manifold:
// checks the stacked-ball/sphere claims, applies the 30 handles verifying
// admissibility at each step, and tests isomorphism with the boundary of
// the corresponding d=3 filling. `stop_after` < 30 truncates the run (the
// final isomorphism check is then skipped).
struct ReplayOutcome {
    Certificate certificate;
    Complex final_complex;
};
ReplayOutcome replay_lemma_handles(FamilyVariant variant = FamilyVariant::M,
                                   int stop_after = 30);

} // namespace walkup
