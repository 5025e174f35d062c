#pragma once

#include <cstdint>
#include <map>
#include <utility>

#include "pap/triangle.hpp"

// Brute-force enumeration oracle: exhaustive tallies over all n!
// permutations (chunked and data-parallel over disjoint rank ranges) and
// over all parity-alternate permutations, plus the tau-orbit census.

namespace pap {

/// Hard cap for the full n! scan (~4.0e7 permutations at the cap).
inline constexpr int kFullScanCap = 11;
/// Cap for PAP-only enumeration.
inline constexpr int kPapScanCap = 14;

struct TriangleSet {
    Triangle a, b, c, d, s, p, q, r;
};

/// Scans all n! permutations for every n <= n_max, partitioned into
/// parallel_chunks disjoint lexicographic rank ranges whose private tallies
/// are merged by addition; the result does not depend on the chunk count.
TriangleSet enumerate_triangles(int n_max, int parallel_chunks = 1);

struct PapTriangleSet {
    Triangle s, p, q, r;
};

/// Same S, P, Q, R values as enumerate_triangles, but walks only the
/// parity-alternate permutations and therefore reaches larger n.
PapTriangleSet enumerate_pap_triangles(int n_max);

/// tau-orbit census over the canonical PAPs with k ascents, for even n:
/// for every divisor d of n, the number of period-d orbits among even
/// (alpha) and odd (beta) canonical PAPs.
struct OrbitCensus {
    int n = 0;
    int k = 0;
    std::map<std::int64_t, std::pair<std::int64_t, std::int64_t>> by_period;

    std::int64_t alpha_weighted_sum() const;  // sum over d of d * alpha_d
    std::int64_t beta_weighted_sum() const;   // sum over d of d * beta_d
};

OrbitCensus orbit_census(int n, int k);

/// (even, odd) counts of canonical PAPs with k ascents, n even, by direct
/// enumeration.
std::pair<std::int64_t, std::int64_t> canonical_pap_counts(int n, int k);

/// (even, odd) counts of the non-PAP permutations with k ascents; n odd.
std::pair<std::int64_t, std::int64_t> nonpap_parity_balance(int n, int k);

}  // namespace pap
