// NEON variant of the GF(2) row kernel (aarch64 only).

#if defined(__aarch64__)

#include <arm_neon.h>

#include "walkup/gf2.hpp"

namespace walkup::gf2::detail {

void xor_words_neon(std::uint64_t* dst, const std::uint64_t* src, std::size_t n) {
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        uint64x2_t a = vld1q_u64(dst + i);
        uint64x2_t b = vld1q_u64(src + i);
        vst1q_u64(dst + i, veorq_u64(a, b));
    }
    for (; i < n; ++i) dst[i] ^= src[i];
}

} // namespace walkup::gf2::detail

#endif
