#include "walkup/gf2.hpp"

#include "walkup/errors.hpp"

namespace walkup::gf2 {

namespace detail {

void xor_words_scalar(std::uint64_t* dst, const std::uint64_t* src, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) dst[i] ^= src[i];
}

} // namespace detail

namespace {

bool cpu_has_avx2() {
#if defined(__x86_64__) || defined(_M_X64)
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
}

Kernel detect_kernel() {
#if defined(__aarch64__)
    return Kernel::Neon;
#else
    return cpu_has_avx2() ? Kernel::Avx2 : Kernel::Scalar;
#endif
}

XorWordsFn fn_for(Kernel k) {
    switch (k) {
#if defined(__x86_64__) || defined(_M_X64)
        case Kernel::Avx2: return detail::xor_words_avx2;
#endif
#if defined(__aarch64__)
        case Kernel::Neon: return detail::xor_words_neon;
#endif
        default: return detail::xor_words_scalar;
    }
}

struct Dispatch {
    Kernel kernel;
    XorWordsFn fn;
};

Dispatch& dispatch() {
    static Dispatch d = [] {
        Kernel k = detect_kernel();
        return Dispatch{k, fn_for(k)};
    }();
    return d;
}

} // namespace

Kernel active_kernel() { return dispatch().kernel; }

std::string kernel_name(Kernel k) {
    switch (k) {
        case Kernel::Auto: return "auto";
        case Kernel::Scalar: return "scalar";
        case Kernel::Avx2: return "avx2";
        case Kernel::Neon: return "neon";
    }
    return "?";
}

bool kernel_available(Kernel k) {
    switch (k) {
        case Kernel::Auto:
        case Kernel::Scalar: return true;
        case Kernel::Avx2: return cpu_has_avx2();
        case Kernel::Neon:
#if defined(__aarch64__)
            return true;
#else
            return false;
#endif
    }
    return false;
}

void force_kernel(Kernel k) {
    if (!kernel_available(k)) throw Error("kernel not available: " + kernel_name(k));
    Kernel chosen = (k == Kernel::Auto) ? detect_kernel() : k;
    dispatch() = Dispatch{chosen, fn_for(chosen)};
}

XorWordsFn xor_words_fn() { return dispatch().fn; }

} // namespace walkup::gf2
