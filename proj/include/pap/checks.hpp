#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pap/census.hpp"
#include "pap/report.hpp"
#include "pap/triangle.hpp"

// Identity- and divisibility-level verification passes. Every function is
// pure given its input triangles/censuses and enumerates each checked
// tuple deterministically.

namespace pap {

struct DivisibilityCheck {
    std::string statistic;
    std::int64_t value = 0;
    bool divisible = false;
};

/// A checked (p, m, n, k) divisibility instance over several statistics.
struct DivisibilityReport {
    std::int64_t p = 0;
    int m = 0;
    int n = 0;
    int k = 0;
    std::int64_t modulus = 0;  // p^m
    std::vector<DivisibilityCheck> checked;
    bool overall = false;
};

/// Entrywise D(n,k) == R(n,k).
CheckReport verify_d_equals_r(const Triangle& d, const Triangle& r);

/// R(n,k) = R(n-1,k-1) - R(n-1,k) for even n and 1 <= k <= n-2.
CheckReport verify_even_row_recurrence(const Triangle& r);

/// alpha_d = beta_d = 0 for every divisor d of n with gcd(k, n/d) > 1.
CheckReport verify_orbit_vanishing(const OrbitCensus& census);

/// p^m | n (n even), p | k implies p^m divides each of S, P, Q, R, D at
/// (n-1, k-1). Precondition violations raise std::invalid_argument naming
/// the failed condition.
DivisibilityReport verify_prime_power_divisibility(std::int64_t p, int m, int n, int k,
                                                   const Triangle& s, const Triangle& pt,
                                                   const Triangle& q, const Triangle& r,
                                                   const Triangle& d);

/// For odd primes p with p^m | n (n of either parity) and p | k, p^m
/// divides B and C at (n-1, k-1).
DivisibilityReport verify_bc_divisibility(std::int64_t p, int m, int n, int k,
                                          const Triangle& b, const Triangle& c);

/// Directly counts the PAPs of [n] with k ascents split by a_1 < a_n
/// versus a_1 > a_n and checks the counts equal (n-k) S(n-1,k-1) and
/// (k+1) S(n-1,k). n must be even.
CheckReport verify_canonical_count_identity(int n, int k, const Triangle& s);

/// Even rows of S from the odd rows below them, all k.
CheckReport verify_pap_recurrence_even(const Triangle& s);

CheckReport to_report(const DivisibilityReport& r);

struct DivisibilityTuple {
    std::int64_t p = 0;
    int m = 0;
    int n = 0;
    int k = 0;
};

/// All (p, m, n, k) with p prime, p^m | n, p | k, 1 <= k <= n-1 and
/// n_min <= n <= n_max, optionally restricted to even n or odd p.
std::vector<DivisibilityTuple> divisibility_tuples(int n_min, int n_max, bool even_n_only,
                                                   bool odd_primes_only);

bool is_prime(std::int64_t p);

}  // namespace pap
