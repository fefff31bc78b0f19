#pragma once

#include <map>
#include <string>
#include <vector>

#include "walkup/certificate.hpp"
#include "walkup/complex.hpp"

namespace walkup {

// Stacked-ball criterion: the dual graph is a tree and f_0 = f_d + d.
bool is_stacked_ball(const Complex& X);

// Iterated reverse 0-move reduction. `removed` records the vertex removal
// order; on rejection `reason` says why.
struct SphereReduction {
    bool is_sphere = false;
    std::vector<Label> removed;
    std::string reason;
};
SphereReduction is_stacked_sphere(const Complex& X);

struct VertexEvidence {
    bool ok = false;
    std::string note;
};

// Verdict for membership in a Walkup class, with one sub-verdict per vertex
// link.
struct ClassVerdict {
    bool verdict = false;
    std::map<Label, VertexEvidence> per_vertex;
};

// Every vertex link is a stacked (d-1)-sphere.
ClassVerdict in_walkup_K(const Complex& X);
// Every vertex link is a stacked (d-1)-ball.
ClassVerdict in_walkup_Kbar(const Complex& X);

// Evaluates the tight-neighborly equality
//   C(d+2,2) * beta_1(X; Z_2) == C(f_0 - d - 1, 2)
// and reports both sides. Requires dim >= 3.
Certificate tight_neighborly(const Complex& X);

// Sufficient-condition tightness certificate. Routes:
//   d != 3: 2-neighborly and member of K(d)            (tight)
//   d == 3: additionally beta_1 = (f_0-4)(f_0-5)/20    (tight)
// Anything else is INCONCLUSIVE; the criteria are one-directional, so the
// certificate never claims NOT TIGHT.
Certificate tightness_certificate(const Complex& X);

} // namespace walkup
