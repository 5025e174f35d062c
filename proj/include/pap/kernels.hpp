#pragma once

#include <cstdint>
#include <vector>

// Statistics kernels for the exhaustive permutation scans. A scalar
// reference kernel is always present; SIMD variants (AVX2 on x86-64,
// NEON on aarch64) are compiled in where the toolchain supports them and
// selected at runtime. All variants are equivalence-tested against the
// scalar kernel.

namespace pap::kern {

/// Per-permutation classification produced by a kernel.
struct PermClass {
    std::uint8_t ascents = 0;
    bool odd = false;  // odd number of inversions
    bool pap = false;  // entries alternate between odd and even values
};

/// Slot layout used by tally_range: counts[4*ascents + 2*odd + pap].
/// A tally buffer for size n therefore has 4*n slots.
inline int tally_slot(int ascents, bool odd, bool pap) {
    return 4 * ascents + 2 * static_cast<int>(odd) + static_cast<int>(pap);
}

/// Kernels handle permutations up to this size.
inline constexpr int kMaxKernelSize = 16;

/// A statistics kernel. `classify` and `inversions` read exactly n bytes
/// holding values 1..n (implementations copy into padded scratch as
/// needed). `tally_range` starts from the permutation in `first` and walks
/// `count` successive permutations in lexicographic order, incrementing
/// the matching tally slot for each.
struct Kernel {
    const char* name;
    PermClass (*classify)(const std::uint8_t* a, int n);
    std::uint32_t (*inversions)(const std::uint8_t* a, int n);
    void (*tally_range)(const std::uint8_t* first, int n, std::uint64_t count,
                        std::uint64_t* counts);
};

const Kernel& scalar_kernel();

/// Kernels usable on this machine, scalar first, fastest last.
const std::vector<const Kernel*>& available_kernels();

/// The fastest available kernel, or the one named by the PAP_KERNEL
/// environment variable ("scalar", "avx2", "neon"). Naming an unavailable
/// kernel raises std::invalid_argument.
const Kernel& active_kernel();

}  // namespace pap::kern
