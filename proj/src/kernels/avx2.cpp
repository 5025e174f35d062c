// AVX2 kernel. Entries live in the low n bytes of a zero-padded image, so
// shifted unaligned loads compare a_i against a_{i+s} lane-wise; movemask
// bits outside the valid range are cleared before popcount. The inversion
// scan handles two shift distances per 256-bit compare.

#if defined(__x86_64__) || defined(__i386__) || defined(_M_X64)

#include <immintrin.h>

#include <algorithm>
#include <bit>
#include <cstring>

#include "pap/kernels.hpp"

namespace pap::kern {

const Kernel* avx2_kernel();

namespace {

struct Padded {
    alignas(32) std::uint8_t b[48];
};

inline __m128i load128(const std::uint8_t* p) {
    return _mm_loadu_si128(reinterpret_cast<const __m128i*>(p));
}

inline std::uint32_t inversions_padded(const Padded& s, int n) {
    const __m256i both = _mm256_broadcastsi128_si256(load128(s.b));
    std::uint32_t inversions = 0;
    for (int shift = 1; shift < n; shift += 2) {
        const __m256i shifted =
            _mm256_set_m128i(load128(s.b + shift + 1), load128(s.b + shift));
        const auto mm = static_cast<std::uint32_t>(
            _mm256_movemask_epi8(_mm256_cmpgt_epi8(both, shifted)));
        const std::uint32_t lo = (1u << (n - shift)) - 1;
        const std::uint32_t hi = (shift + 1 < n) ? (1u << (n - shift - 1)) - 1 : 0;
        inversions += static_cast<std::uint32_t>(std::popcount(mm & (lo | (hi << 16))));
    }
    return inversions;
}

inline PermClass classify_padded(const Padded& s, int n) {
    const __m128i p = load128(s.b);
    const __m128i next = load128(s.b + 1);
    const std::uint32_t adjacent = n > 1 ? (1u << (n - 1)) - 1 : 0;

    const auto ascent_mask =
        static_cast<std::uint32_t>(_mm_movemask_epi8(_mm_cmpgt_epi8(next, p)));

    const __m128i one = _mm_set1_epi8(1);
    const __m128i alternates =
        _mm_cmpeq_epi8(_mm_and_si128(_mm_xor_si128(p, next), one), one);
    const auto alt_mask = static_cast<std::uint32_t>(_mm_movemask_epi8(alternates));

    PermClass c;
    c.ascents = static_cast<std::uint8_t>(std::popcount(ascent_mask & adjacent));
    c.pap = (alt_mask & adjacent) == adjacent;
    c.odd = (inversions_padded(s, n) & 1u) != 0;
    return c;
}

PermClass classify_avx2(const std::uint8_t* a, int n) {
    Padded s{};
    std::memcpy(s.b, a, static_cast<std::size_t>(n));
    return classify_padded(s, n);
}

std::uint32_t inversions_avx2(const std::uint8_t* a, int n) {
    Padded s{};
    std::memcpy(s.b, a, static_cast<std::size_t>(n));
    return inversions_padded(s, n);
}

void tally_avx2(const std::uint8_t* first, int n, std::uint64_t count,
                std::uint64_t* counts) {
    Padded s{};
    std::memcpy(s.b, first, static_cast<std::size_t>(n));
    for (std::uint64_t i = 0; i < count; ++i) {
        const PermClass c = classify_padded(s, n);
        ++counts[tally_slot(c.ascents, c.odd, c.pap)];
        std::next_permutation(s.b, s.b + n);
    }
}

}  // namespace

const Kernel* avx2_kernel() {
    if (!__builtin_cpu_supports("avx2")) return nullptr;
    static constexpr Kernel k{"avx2", classify_avx2, inversions_avx2, tally_avx2};
    return &k;
}

}  // namespace pap::kern

#endif
