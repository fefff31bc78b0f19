#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace walkup::gf2 {

// ---- kernel dispatch ----------------------------------------------------
//
// Row operations run through a function pointer selected at startup from
// CPU capabilities (AVX2 on x86-64, NEON on aarch64, scalar otherwise).
// The variants are bit-identical by contract and equivalence-tested; the
// scalar kernel is the reference.

enum class Kernel { Auto, Scalar, Avx2, Neon };

// dst[i] ^= src[i] for i < n.
using XorWordsFn = void (*)(std::uint64_t* dst, const std::uint64_t* src, std::size_t n);

Kernel active_kernel();
std::string kernel_name(Kernel k);
bool kernel_available(Kernel k);

// Force a specific kernel (tests); Kernel::Auto restores CPU detection.
// Throws walkup::Error if the kernel is not available on this machine.
void force_kernel(Kernel k);

XorWordsFn xor_words_fn();

namespace detail {
void xor_words_scalar(std::uint64_t* dst, const std::uint64_t* src, std::size_t n);
#if defined(__x86_64__) || defined(_M_X64)
void xor_words_avx2(std::uint64_t* dst, const std::uint64_t* src, std::size_t n);
#endif
#if defined(__aarch64__)
void xor_words_neon(std::uint64_t* dst, const std::uint64_t* src, std::size_t n);
#endif
} // namespace detail

// ---- dense bit-packed matrix --------------------------------------------

class Matrix {
  public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), wpr_((cols + 63) / 64),
          data_(rows * wpr_, 0) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t words_per_row() const { return wpr_; }

    void set(std::size_t r, std::size_t c, bool value = true) {
        auto& w = data_[r * wpr_ + c / 64];
        const std::uint64_t bit = 1ULL << (c % 64);
        if (value) w |= bit;
        else w &= ~bit;
    }
    bool get(std::size_t r, std::size_t c) const {
        return (data_[r * wpr_ + c / 64] >> (c % 64)) & 1;
    }

    std::uint64_t* row(std::size_t r) { return data_.data() + r * wpr_; }
    const std::uint64_t* row(std::size_t r) const { return data_.data() + r * wpr_; }

    void xor_row(std::size_t dst, std::size_t src) {
        xor_words_fn()(row(dst), row(src), wpr_);
    }

    Matrix transposed() const;

    // Rank over GF(2); does not modify the matrix.
    std::size_t rank() const;

    // Reduced row echelon form, in place. The result is canonical for the
    // row space, which is what the kernel-equivalence tests compare.
    void reduce();

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

  private:
    std::size_t rows_ = 0, cols_ = 0, wpr_ = 0;
    std::vector<std::uint64_t> data_;
};

// Incremental row-echelon accumulator over GF(2). Rows are reduced against
// the pivots found so far; independent rows are kept. Deterministic: the
// pivot of each stored row is the first set bit after reduction.
class Echelon {
  public:
    explicit Echelon(std::size_t cols)
        : cols_(cols), wpr_((cols + 63) / 64) {}

    std::size_t cols() const { return cols_; }
    std::size_t rank() const { return rows_.size(); }

    // Reduces `row` (wpr words) against the basis; if a nonzero remainder
    // survives it joins the basis. Returns true when the row was new.
    bool add_row(const std::uint64_t* row);
    bool add_row(const std::vector<std::uint64_t>& row) { return add_row(row.data()); }

    // True iff `row` lies in the span of the rows added so far.
    bool in_span(const std::uint64_t* row) const;

  private:
    std::size_t cols_, wpr_;
    std::vector<std::vector<std::uint64_t>> rows_;
    std::vector<std::size_t> pivots_;
    std::vector<int> slot_; // pivot column -> row index, -1 if free
    mutable std::vector<std::uint64_t> scratch_;
};

} // namespace walkup::gf2
