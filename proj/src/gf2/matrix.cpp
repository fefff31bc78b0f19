#include "walkup/gf2.hpp"

#include <bit>

namespace walkup::gf2 {

namespace {

constexpr std::size_t npos = static_cast<std::size_t>(-1);

// First set bit at or after `from`, or npos.
std::size_t first_set_bit(const std::uint64_t* row, std::size_t nwords, std::size_t from) {
    std::size_t w = from / 64;
    if (w >= nwords) return npos;
    std::uint64_t masked = row[w] & (~0ULL << (from % 64));
    while (true) {
        if (masked) return w * 64 + static_cast<std::size_t>(std::countr_zero(masked));
        if (++w == nwords) return npos;
        masked = row[w];
    }
}

} // namespace

Matrix Matrix::transposed() const {
    Matrix T(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        const std::uint64_t* src = row(r);
        for (std::size_t w = 0; w < wpr_; ++w) {
            std::uint64_t bits = src[w];
            while (bits) {
                auto b = static_cast<std::size_t>(std::countr_zero(bits));
                T.set(w * 64 + b, r);
                bits &= bits - 1;
            }
        }
    }
    return T;
}

std::size_t Matrix::rank() const {
    Echelon e(cols_);
    for (std::size_t r = 0; r < rows_; ++r) e.add_row(row(r));
    return e.rank();
}

void Matrix::reduce() {
    XorWordsFn xw = xor_words_fn();
    std::size_t next = 0; // next pivot row slot
    for (std::size_t col = 0; col < cols_ && next < rows_; ++col) {
        std::size_t pivot = npos;
        for (std::size_t r = next; r < rows_; ++r) {
            if (get(r, col)) {
                pivot = r;
                break;
            }
        }
        if (pivot == npos) continue;
        if (pivot != next)
            for (std::size_t w = 0; w < wpr_; ++w)
                std::swap(row(pivot)[w], row(next)[w]);
        for (std::size_t r = 0; r < rows_; ++r)
            if (r != next && get(r, col)) xw(row(r), row(next), wpr_);
        ++next;
    }
}

// Reduction loop: xor away the leading bit against the basis row holding
// that pivot until the leading bit lands on a free column (new pivot) or
// the row vanishes. The leading bit strictly increases, so this terminates
// and is insensitive to what the basis rows look like past their pivots.
bool Echelon::add_row(const std::uint64_t* row) {
    XorWordsFn xw = xor_words_fn();
    if (slot_.empty()) slot_.assign(cols_, -1);
    scratch_.assign(row, row + wpr_);
    std::size_t pivot = first_set_bit(scratch_.data(), wpr_, 0);
    while (pivot != npos) {
        const int s = slot_[pivot];
        if (s < 0) {
            slot_[pivot] = static_cast<int>(rows_.size());
            rows_.push_back(scratch_);
            pivots_.push_back(pivot);
            return true;
        }
        xw(scratch_.data(), rows_[static_cast<std::size_t>(s)].data(), wpr_);
        pivot = first_set_bit(scratch_.data(), wpr_, pivot + 1);
    }
    return false;
}

bool Echelon::in_span(const std::uint64_t* row) const {
    if (rows_.empty()) return first_set_bit(row, wpr_, 0) == npos;
    XorWordsFn xw = xor_words_fn();
    scratch_.assign(row, row + wpr_);
    std::size_t pivot = first_set_bit(scratch_.data(), wpr_, 0);
    while (pivot != npos) {
        const int s = slot_[pivot];
        if (s < 0) return false;
        xw(scratch_.data(), rows_[static_cast<std::size_t>(s)].data(), wpr_);
        pivot = first_set_bit(scratch_.data(), wpr_, pivot + 1);
    }
    return true;
}

} // namespace walkup::gf2
