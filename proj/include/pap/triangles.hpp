#pragma once

#include <cstdint>
#include <span>
#include <utility>

#include "pap/report.hpp"
#include "pap/triangle.hpp"

// Recurrence and closed-form construction of the statistics triangles,
// entrywise derivations between them, and the reflection symmetry laws.

namespace pap {

/// A(n,k) = (n-k) A(n-1,k-1) + (k+1) A(n-1,k), base A(1,0) = 1.
Triangle eulerian_recurrence(int n_max);

/// D(n,k) = (n-k) D(n-1,k-1) + (k+1) D(n-1,k) for odd n,
///          D(n-1,k-1) - D(n-1,k)             for even n, base D(1,0) = 1.
Triangle signed_recurrence(int n_max);

/// Same recursion as signed_recurrence with base R(1,0) = 1.
Triangle r_recurrence(int n_max);

/// B = (A + D) / 2 and C = (A - D) / 2, exact. Throws std::logic_error
/// when A and D disagree mod 2 anywhere.
std::pair<Triangle, Triangle> bc_from_ad(const Triangle& a, const Triangle& d);

/// P = (S + R) / 2 and Q = (S - R) / 2, exact.
std::pair<Triangle, Triangle> pq_from_sr(const Triangle& s, const Triangle& r);

/// Number of PAPs of [n]: 2((n/2)!)^2 for even n,
/// ((n+1)/2)! ((n-1)/2)! for odd n.
std::uint64_t pap_total(int n);

/// Number of even PAPs of [n]: half of pap_total for n >= 2, 1 for n = 1.
std::uint64_t even_pap_total(int n);

/// (n-k) S(n-1,k-1) + (k+1) S(n-1,k) from the supplied row for n-1.
/// Valid only for even n (there is no such relation for odd rows).
std::int64_t s_recurrence_even(std::span<const std::int64_t> s_prev, int n, int k);

/// Checks S(n,k) = S(n,n-k-1) for all rows, plus the P/Q reflection laws:
/// P and Q are palindromic when n = 0,1 (mod 4) and swap under reflection
/// when n = 2,3 (mod 4). Violations are report items, not errors.
CheckReport check_symmetries(const Triangle& s, const Triangle& p, const Triangle& q);

}  // namespace pap
