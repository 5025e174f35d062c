// NEON (aarch64) kernel, structured exactly like the AVX2 one: compares
// run on a zero-padded image of the permutation, one shift distance per
// 128-bit compare, with a lane mask of ones marking the valid positions.

#if defined(__aarch64__)

#include <arm_neon.h>

#include <algorithm>
#include <cstring>

#include "pap/kernels.hpp"

namespace pap::kern {

const Kernel* neon_kernel();

namespace {

struct Padded {
    alignas(16) std::uint8_t b[48];
};

// kLaneOnes + (16 - v) loads a vector whose first v lanes are 1.
alignas(16) constexpr std::uint8_t kLaneOnes[32] = {
    1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1,
    0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0,
};

inline std::uint32_t count_lanes(uint8x16_t cmp, int valid) {
    const uint8x16_t mask = vld1q_u8(kLaneOnes + (16 - valid));
    return vaddvq_u8(vandq_u8(vandq_u8(cmp, vdupq_n_u8(1)), mask));
}

inline std::uint32_t inversions_padded(const Padded& s, int n) {
    const uint8x16_t p = vld1q_u8(s.b);
    std::uint32_t inversions = 0;
    for (int shift = 1; shift < n; ++shift) {
        const uint8x16_t shifted = vld1q_u8(s.b + shift);
        inversions += count_lanes(vcgtq_u8(p, shifted), n - shift);
    }
    return inversions;
}

inline PermClass classify_padded(const Padded& s, int n) {
    const uint8x16_t p = vld1q_u8(s.b);
    const uint8x16_t next = vld1q_u8(s.b + 1);
    const int adjacent = n - 1;

    PermClass c;
    c.ascents = static_cast<std::uint8_t>(
        adjacent > 0 ? count_lanes(vcgtq_u8(next, p), adjacent) : 0);

    const uint8x16_t one = vdupq_n_u8(1);
    const uint8x16_t alternates = vceqq_u8(vandq_u8(veorq_u8(p, next), one), one);
    c.pap = adjacent <= 0 ||
            count_lanes(alternates, adjacent) == static_cast<std::uint32_t>(adjacent);

    c.odd = (inversions_padded(s, n) & 1u) != 0;
    return c;
}

PermClass classify_neon(const std::uint8_t* a, int n) {
    Padded s{};
    std::memcpy(s.b, a, static_cast<std::size_t>(n));
    return classify_padded(s, n);
}

std::uint32_t inversions_neon(const std::uint8_t* a, int n) {
    Padded s{};
    std::memcpy(s.b, a, static_cast<std::size_t>(n));
    return inversions_padded(s, n);
}

void tally_neon(const std::uint8_t* first, int n, std::uint64_t count,
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

const Kernel* neon_kernel() {
    static constexpr Kernel k{"neon", classify_neon, inversions_neon, tally_neon};
    return &k;
}

}  // namespace pap::kern

#endif
