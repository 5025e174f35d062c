#include <algorithm>
#include <cstring>

#include "pap/kernels.hpp"

// Reference kernel: plain pair scans. All SIMD variants must reproduce
// this one bit for bit.

namespace pap::kern {

namespace {

PermClass classify_scalar(const std::uint8_t* a, int n) {
    PermClass c{0, false, true};
    std::uint32_t inversions = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) inversions += a[i] > a[j];
    for (int i = 0; i + 1 < n; ++i) {
        c.ascents = static_cast<std::uint8_t>(c.ascents + (a[i] < a[i + 1]));
        if (((a[i] ^ a[i + 1]) & 1u) == 0) c.pap = false;
    }
    c.odd = (inversions & 1u) != 0;
    return c;
}

std::uint32_t inversions_scalar(const std::uint8_t* a, int n) {
    std::uint32_t inversions = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) inversions += a[i] > a[j];
    return inversions;
}

void tally_scalar(const std::uint8_t* first, int n, std::uint64_t count,
                  std::uint64_t* counts) {
    std::uint8_t a[kMaxKernelSize];
    std::memcpy(a, first, static_cast<std::size_t>(n));
    for (std::uint64_t i = 0; i < count; ++i) {
        const PermClass c = classify_scalar(a, n);
        ++counts[tally_slot(c.ascents, c.odd, c.pap)];
        std::next_permutation(a, a + n);
    }
}

}  // namespace

const Kernel& scalar_kernel() {
    static constexpr Kernel k{"scalar", classify_scalar, inversions_scalar, tally_scalar};
    return k;
}

}  // namespace pap::kern
