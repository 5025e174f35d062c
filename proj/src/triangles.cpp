#include "pap/triangles.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "pap/permutation.hpp"

namespace pap {

namespace {

std::string cell(const char* name, int n, int k) {
    return std::string(name) + "(" + std::to_string(n) + "," + std::to_string(k) + ")";
}

enum class Recursion { Eulerian, SignedAlternating };

// Rows build upward from a single base entry of 1; indices outside a row
// contribute 0. The signed variant switches to the difference form on
// even rows.
Triangle build_recurrence(TriangleKind kind, Recursion recursion, int n_max) {
    if (n_max < 1) throw std::invalid_argument("n_max must be >= 1");
    Triangle t{kind, n_max, Provenance::Recurrence, {}};
    t.rows.resize(static_cast<std::size_t>(n_max));
    t.rows[0] = {1};
    for (int n = 2; n <= n_max; ++n) {
        auto& row = t.rows[static_cast<std::size_t>(n - 1)];
        row.assign(static_cast<std::size_t>(n), 0);
        const auto& prev = t.rows[static_cast<std::size_t>(n - 2)];
        auto prev_at = [&](int k) -> std::int64_t {
            return (k < 0 || k >= n - 1) ? 0 : prev[static_cast<std::size_t>(k)];
        };
        const bool difference_row = recursion == Recursion::SignedAlternating && n % 2 == 0;
        for (int k = 0; k < n; ++k) {
            row[static_cast<std::size_t>(k)] =
                difference_row ? prev_at(k - 1) - prev_at(k)
                               : (n - k) * prev_at(k - 1) + (k + 1) * prev_at(k);
        }
    }
    return t;
}

std::pair<Triangle, Triangle> halve(const Triangle& sum, const Triangle& diff,
                                    TriangleKind plus_kind, TriangleKind minus_kind) {
    if (sum.n_max != diff.n_max)
        throw std::invalid_argument("triangles must share n_max");
    Triangle plus{plus_kind, sum.n_max, sum.provenance, sum.rows};
    Triangle minus{minus_kind, sum.n_max, sum.provenance, sum.rows};
    for (int n = 1; n <= sum.n_max; ++n) {
        for (int k = 0; k < n; ++k) {
            const std::int64_t s = sum.at(n, k);
            const std::int64_t d = diff.at(n, k);
            if ((s - d) % 2 != 0) {
                throw std::logic_error("parity mismatch between " +
                                       std::string(1, to_letter(sum.kind)) + " and " +
                                       std::string(1, to_letter(diff.kind)) + " at " +
                                       cell("", n, k));
            }
            plus.rows[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(k)] = (s + d) / 2;
            minus.rows[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(k)] = (s - d) / 2;
        }
    }
    return {std::move(plus), std::move(minus)};
}

}  // namespace

Triangle eulerian_recurrence(int n_max) {
    return build_recurrence(TriangleKind::A, Recursion::Eulerian, n_max);
}

Triangle signed_recurrence(int n_max) {
    return build_recurrence(TriangleKind::D, Recursion::SignedAlternating, n_max);
}

Triangle r_recurrence(int n_max) {
    return build_recurrence(TriangleKind::R, Recursion::SignedAlternating, n_max);
}

std::pair<Triangle, Triangle> bc_from_ad(const Triangle& a, const Triangle& d) {
    return halve(a, d, TriangleKind::B, TriangleKind::C);
}

std::pair<Triangle, Triangle> pq_from_sr(const Triangle& s, const Triangle& r) {
    return halve(s, r, TriangleKind::P, TriangleKind::Q);
}

std::uint64_t pap_total(int n) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    if (n % 2 == 0) {
        const std::uint64_t half = factorial(n / 2);
        return 2 * half * half;
    }
    return factorial((n + 1) / 2) * factorial((n - 1) / 2);
}

std::uint64_t even_pap_total(int n) {
    if (n == 1) return 1;  // the permutation "1" is even; the halving swap needs n >= 3
    return pap_total(n) / 2;
}

std::int64_t s_recurrence_even(std::span<const std::int64_t> s_prev, int n, int k) {
    if (n < 2 || n % 2 != 0)
        throw std::invalid_argument("the ascent recurrence for S holds only for even n");
    if (static_cast<int>(s_prev.size()) != n - 1)
        throw std::invalid_argument("expected the S row for n-1");
    auto prev_at = [&](int j) -> std::int64_t {
        return (j < 0 || j >= n - 1) ? 0 : s_prev[static_cast<std::size_t>(j)];
    };
    return (n - k) * prev_at(k - 1) + (k + 1) * prev_at(k);
}

CheckReport check_symmetries(const Triangle& s, const Triangle& p, const Triangle& q) {
    CheckReport report{"symmetry", {}};
    for (int n = 1; n <= s.n_max; ++n) {
        for (int k = 0; k < n; ++k) {
            report.expect_eq(cell("S", n, k) + " = " + cell("S", n, n - k - 1),
                             s.at(n, k), s.at(n, n - k - 1));
        }
    }
    const int pq_max = std::min(p.n_max, q.n_max);
    for (int n = 1; n <= pq_max; ++n) {
        const bool palindromic = (n % 4 == 0 || n % 4 == 1);
        for (int k = 0; k < n; ++k) {
            if (palindromic) {
                report.expect_eq(cell("P", n, k) + " = " + cell("P", n, n - k - 1),
                                 p.at(n, k), p.at(n, n - k - 1));
                report.expect_eq(cell("Q", n, k) + " = " + cell("Q", n, n - k - 1),
                                 q.at(n, k), q.at(n, n - k - 1));
            } else {
                report.expect_eq(cell("P", n, k) + " = " + cell("Q", n, n - k - 1),
                                 p.at(n, k), q.at(n, n - k - 1));
            }
        }
    }
    return report;
}

}  // namespace pap
