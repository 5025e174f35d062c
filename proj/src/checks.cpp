#include "pap/checks.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "pap/kernels.hpp"
#include "pap/permutation.hpp"
#include "pap/triangles.hpp"

namespace pap {

namespace {

std::string cell(const char* name, int n, int k) {
    return std::string(name) + "(" + std::to_string(n) + "," + std::to_string(k) + ")";
}

std::int64_t ipow(std::int64_t base, int exp) {
    std::int64_t v = 1;
    for (int i = 0; i < exp; ++i) v *= base;
    return v;
}

void require(bool condition, const std::string& what) {
    if (!condition) throw std::invalid_argument(what);
}

}  // namespace

bool is_prime(std::int64_t p) {
    if (p < 2) return false;
    for (std::int64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

CheckReport verify_d_equals_r(const Triangle& d, const Triangle& r) {
    CheckReport report{"d-eq-r", {}};
    const int n_max = std::min(d.n_max, r.n_max);
    for (int n = 1; n <= n_max; ++n)
        for (int k = 0; k < n; ++k)
            report.expect_eq(cell("D", n, k) + " = " + cell("R", n, k), d.at(n, k), r.at(n, k));
    return report;
}

CheckReport verify_even_row_recurrence(const Triangle& r) {
    CheckReport report{"even-row-recurrence", {}};
    for (int n = 2; n <= r.n_max; n += 2) {
        for (int k = 1; k <= n - 2; ++k) {
            report.expect_eq(cell("R", n, k) + " = " + cell("R", n - 1, k - 1) + " - " +
                                 cell("R", n - 1, k),
                             r.at(n, k), r.at(n - 1, k - 1) - r.at(n - 1, k));
        }
    }
    return report;
}

CheckReport verify_orbit_vanishing(const OrbitCensus& census) {
    CheckReport report{"orbit-vanishing", {}};
    for (const auto& [d, ab] : census.by_period) {
        if (std::gcd(static_cast<std::int64_t>(census.k), census.n / d) <= 1) continue;
        const std::string where = "n=" + std::to_string(census.n) +
                                  " k=" + std::to_string(census.k) + " d=" + std::to_string(d);
        report.expect_eq("alpha vanishes at " + where, ab.first, 0);
        report.expect_eq("beta vanishes at " + where, ab.second, 0);
    }
    return report;
}

DivisibilityReport verify_prime_power_divisibility(std::int64_t p, int m, int n, int k,
                                                   const Triangle& s, const Triangle& pt,
                                                   const Triangle& q, const Triangle& r,
                                                   const Triangle& d) {
    require(is_prime(p), "p must be prime");
    require(m >= 1, "m must be >= 1");
    require(n % 2 == 0, "n must be even");
    const std::int64_t modulus = ipow(p, m);
    require(n % modulus == 0, "p^m must divide n");
    require(k % p == 0, "p must divide k");
    require(1 <= k && k <= n - 1, "k must be in 1..n-1");

    DivisibilityReport report{p, m, n, k, modulus, {}, true};
    auto check = [&](const char* name, const Triangle& t) {
        const std::int64_t value = t.at(n - 1, k - 1);
        const bool divisible = value % modulus == 0;
        report.checked.push_back({name, value, divisible});
        report.overall = report.overall && divisible;
    };
    check("S", s);
    check("P", pt);
    check("Q", q);
    check("R", r);
    check("D", d);
    return report;
}

DivisibilityReport verify_bc_divisibility(std::int64_t p, int m, int n, int k,
                                          const Triangle& b, const Triangle& c) {
    require(p != 2, "p must be an odd prime");
    require(is_prime(p), "p must be prime");
    require(m >= 1, "m must be >= 1");
    const std::int64_t modulus = ipow(p, m);
    require(n % modulus == 0, "p^m must divide n");
    require(k % p == 0, "p must divide k");
    require(1 <= k && k <= n - 1, "k must be in 1..n-1");

    DivisibilityReport report{p, m, n, k, modulus, {}, true};
    auto check = [&](const char* name, const Triangle& t) {
        const std::int64_t value = t.at(n - 1, k - 1);
        const bool divisible = value % modulus == 0;
        report.checked.push_back({name, value, divisible});
        report.overall = report.overall && divisible;
    };
    check("B", b);
    check("C", c);
    return report;
}

CheckReport verify_canonical_count_identity(int n, int k, const Triangle& s) {
    if (n < 2 || n % 2 != 0) throw std::invalid_argument("expected an even n >= 2");
    if (k < 0 || k > n - 1) throw std::invalid_argument("k must be in 0..n-1");

    const auto& kernel = kern::active_kernel();
    std::int64_t first_below_last = 0, first_above_last = 0;
    for_each_pap(n, [&](std::span<const Entry> a) {
        const kern::PermClass c = kernel.classify(a.data(), n);
        if (c.ascents != k) return;
        (a.front() < a.back() ? first_below_last : first_above_last) += 1;
    });

    CheckReport report{"canonical-count", {}};
    const std::string where = "n=" + std::to_string(n) + " k=" + std::to_string(k);
    report.expect_eq("|PAPs with a1<an| = (n-k) " + cell("S", n - 1, k - 1) + " at " + where,
                     first_below_last, (n - k) * s.at_or_zero(n - 1, k - 1));
    report.expect_eq("|PAPs with a1>an| = (k+1) " + cell("S", n - 1, k) + " at " + where,
                     first_above_last, (k + 1) * s.at_or_zero(n - 1, k));
    return report;
}

CheckReport verify_pap_recurrence_even(const Triangle& s) {
    CheckReport report{"pap-recurrence", {}};
    for (int n = 2; n <= s.n_max; n += 2) {
        for (int k = 0; k < n; ++k) {
            report.expect_eq(cell("S", n, k) + " from row " + std::to_string(n - 1),
                             s.at(n, k), s_recurrence_even(s.row(n - 1), n, k));
        }
    }
    return report;
}

CheckReport to_report(const DivisibilityReport& r) {
    CheckReport report{"divisibility", {}};
    const std::string where = "p=" + std::to_string(r.p) + " m=" + std::to_string(r.m) +
                              " n=" + std::to_string(r.n) + " k=" + std::to_string(r.k);
    for (const DivisibilityCheck& c : r.checked) {
        report.expect_divisible(
            c.statistic + "(" + std::to_string(r.n - 1) + "," + std::to_string(r.k - 1) +
                ") divisible by " + std::to_string(r.modulus) + " at " + where,
            c.value, r.modulus);
    }
    return report;
}

std::vector<DivisibilityTuple> divisibility_tuples(int n_min, int n_max, bool even_n_only,
                                                   bool odd_primes_only) {
    std::vector<DivisibilityTuple> tuples;
    for (int n = std::max(2, n_min); n <= n_max; ++n) {
        if (even_n_only && n % 2 != 0) continue;
        for (std::int64_t p = odd_primes_only ? 3 : 2; p <= n; ++p) {
            if (!is_prime(p) || n % p != 0) continue;
            for (int m = 1; ipow(p, m) <= n && n % ipow(p, m) == 0; ++m) {
                for (int k = static_cast<int>(p); k <= n - 1; k += static_cast<int>(p)) {
                    tuples.push_back({p, m, n, k});
                }
            }
        }
    }
    return tuples;
}

}  // namespace pap
