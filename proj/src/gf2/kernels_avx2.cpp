// AVX2 variant of the GF(2) row kernel. Compiled with -mavx2 in its own
// translation unit; selected at runtime only when the CPU reports AVX2.

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include "walkup/gf2.hpp"

namespace walkup::gf2::detail {

void xor_words_avx2(std::uint64_t* dst, const std::uint64_t* src, std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
        __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_xor_si256(a, b));
    }
    for (; i < n; ++i) dst[i] ^= src[i];
}

} // namespace walkup::gf2::detail

#endif
