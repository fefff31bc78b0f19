#pragma once

#include <cstdint>
#include <vector>

#include "walkup/certificate.hpp"
#include "walkup/complex.hpp"
#include "walkup/gf2.hpp"

namespace walkup {

// Betti numbers over the two-element field.
struct BettiVector {
    std::vector<std::int64_t> beta; // beta_0 .. beta_d

    std::int64_t euler() const {
        std::int64_t e = 0;
        for (std::size_t i = 0; i < beta.size(); ++i)
            e += (i % 2 == 0) ? beta[i] : -beta[i];
        return e;
    }
    friend bool operator==(const BettiVector& a, const BettiVector& b) {
        return a.beta == b.beta;
    }
};

// Boundary operator of X in degree k: rows indexed by (k-1)-faces, columns
// by k-faces, both lexicographic; entry 1 iff the row face is a subset of
// the column face. 1 <= k <= dim(X).
gf2::Matrix boundary_matrix(const Complex& X, int k);

BettiVector betti(const Complex& X);

// Cached chain-level data for one complex: face lists per dimension plus
// boundary ranks. Reused by the induced-subcomplex injectivity checks so
// the global matrices are built only once.
//
// Cost model: homology works from full face enumeration, so memory grows
// with the total face count (for the neighborly boundary manifolds: ~300
// faces at d=2, ~1.6k at d=3, ~6.1k at d=4, ~20.4k at d=5; elimination is
// bit-packed, so even d=5 stays in tens of MB and well under a second).
// The constructor refuses inputs whose middle-dimension binomial
// C(f_0, ceil(dim/2)) exceeds `cap` before enumerating anything.
class ChainContext {
  public:
    explicit ChainContext(const Complex& X, std::uint64_t cap = 50'000'000);

    const Complex& complex() const { return X_; }
    const std::vector<std::vector<Face>>& faces() const { return faces_; }
    int dim() const { return static_cast<int>(faces_.size()) - 1; }
    std::int64_t face_count(int k) const {
        return (k < 0 || k > dim()) ? 0
               : static_cast<std::int64_t>(faces_[static_cast<std::size_t>(k)].size());
    }
    // rank of the degree-k boundary operator (0 outside 1..dim).
    std::size_t boundary_rank(int k) const;
    BettiVector betti() const;

    // For each k-face of the induced subcomplex on W, its index into the
    // global k-face list; also the complement indices.
    struct Split {
        std::vector<std::int64_t> inside;
        std::vector<std::int64_t> outside;
    };
    Split split_faces(int k, const std::vector<Label>& W) const;

    // Per-degree summary of the map H_j(Y) -> H_j(X) for Y induced on W.
    struct InducedMapRank {
        int degree = 0;
        std::int64_t betti_y = 0;
        std::int64_t map_rank = 0;
        bool injective() const { return map_rank == betti_y; }
    };
    std::vector<InducedMapRank> induced_map_ranks(const std::vector<Label>& W) const;

  private:
    const Complex& X_;
    std::vector<std::vector<Face>> faces_;
    std::vector<std::size_t> ranks_; // ranks_[k] = rank of boundary_k
};

// Face counts and first Betti number computed from the 2-skeleton alone;
// avoids full face enumeration when only beta_1 is wanted.
struct Skeleton2 {
    std::int64_t f0 = 0, f1 = 0, f2 = 0;
    std::int64_t rank1 = 0, rank2 = 0;
    std::int64_t betti1 = 0;
};
Skeleton2 skeleton2(const Complex& X);

// Seeded spot check of the tightness condition: for `samples` pseudo-random
// vertex subsets, verifies that induced homology injects into H_*(X).
// Reproducible: the subset stream is a pure function of the seed.
Certificate tightness_spotcheck(const Complex& X, int samples, std::uint64_t seed);

} // namespace walkup
