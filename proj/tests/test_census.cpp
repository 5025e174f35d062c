#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "pap/census.hpp"
#include "pap/operators.hpp"
#include "pap/permutation.hpp"
#include "pap/triangles.hpp"
#include "reference_rows.hpp"

using namespace pap;

TEST_SUITE("census") {

TEST_CASE("full scan reproduces the reference rows") {
    const TriangleSet ts = enumerate_triangles(8);
    for (int n = 1; n <= 8; ++n) {
        CAPTURE(n);
        CHECK(ts.d.row(n) == ref::kD[std::size_t(n - 1)]);
        CHECK(ts.s.row(n) == ref::kS[std::size_t(n - 1)]);
        CHECK(ts.p.row(n) == ref::kP[std::size_t(n - 1)]);
        CHECK(ts.q.row(n) == ref::kQ[std::size_t(n - 1)]);
    }
}

TEST_CASE("recurrence triangles agree with the enumeration oracle") {
    const TriangleSet ts = enumerate_triangles(10, 2);
    CHECK(eulerian_recurrence(10).rows == ts.a.rows);
    CHECK(signed_recurrence(10).rows == ts.d.rows);
    CHECK(r_recurrence(10).rows == ts.r.rows);
}

TEST_CASE("full scan internal identities") {
    const TriangleSet ts = enumerate_triangles(8);
    for (int n = 1; n <= 8; ++n) {
        CHECK(ts.a.row_sum(n) == std::int64_t(factorial(n)));
        if (n >= 2) CHECK(ts.d.row_sum(n) == 0);
        for (int k = 0; k < n; ++k) {
            CHECK(ts.a.at(n, k) == ts.b.at(n, k) + ts.c.at(n, k));
            CHECK(ts.d.at(n, k) == ts.b.at(n, k) - ts.c.at(n, k));
            CHECK(ts.s.at(n, k) == ts.p.at(n, k) + ts.q.at(n, k));
            CHECK(ts.r.at(n, k) == ts.p.at(n, k) - ts.q.at(n, k));
            // the six raw counting triangles are nonnegative
            for (const Triangle* t : {&ts.a, &ts.b, &ts.c, &ts.s, &ts.p, &ts.q})
                CHECK(t->at(n, k) >= 0);
        }
    }
}

TEST_CASE("scan results do not depend on the chunk count") {
    const TriangleSet one = enumerate_triangles(6, 1);
    for (int chunks : {2, 3, 8, 64}) {
        const TriangleSet many = enumerate_triangles(6, chunks);
        CHECK(one.a.rows == many.a.rows);
        CHECK(one.b.rows == many.b.rows);
        CHECK(one.c.rows == many.c.rows);
        CHECK(one.d.rows == many.d.rows);
        CHECK(one.s.rows == many.s.rows);
        CHECK(one.p.rows == many.p.rows);
        CHECK(one.q.rows == many.q.rows);
        CHECK(one.r.rows == many.r.rows);
    }
}

TEST_CASE("scan caps are enforced") {
    CHECK_THROWS_AS(enumerate_triangles(0), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_triangles(12), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_triangles(5, 0), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_pap_triangles(15), std::invalid_argument);
}

TEST_CASE("PAP-only enumeration matches the full scan and the references") {
    const PapTriangleSet ps = enumerate_pap_triangles(10);
    const TriangleSet full = enumerate_triangles(9);
    for (int n = 1; n <= 9; ++n) {
        CHECK(ps.s.row(n) == full.s.row(n));
        CHECK(ps.p.row(n) == full.p.row(n));
        CHECK(ps.q.row(n) == full.q.row(n));
        CHECK(ps.r.row(n) == full.r.row(n));
    }
    for (int n = 1; n <= 10; ++n) {
        CHECK(ps.s.row(n) == ref::kS[std::size_t(n - 1)]);
        CHECK(ps.p.row(n) == ref::kP[std::size_t(n - 1)]);
        CHECK(ps.q.row(n) == ref::kQ[std::size_t(n - 1)]);
    }
    CHECK(ps.s.row_sum(6) == 72);
}

TEST_CASE("orbit census at n=6 k=2") {
    const OrbitCensus census = orbit_census(6, 2);
    std::int64_t alpha_total = 0, beta_total = 0;
    for (const auto& [d, ab] : census.by_period) {
        CHECK(6 % d == 0);
        if (d == 2) {
            CHECK(ab.first == 1);
        } else {
            CHECK(ab.first == 0);
        }
        beta_total += ab.second;
        alpha_total += ab.first;
    }
    CHECK(alpha_total == 1);
    CHECK(beta_total == 0);
    CHECK(census.alpha_weighted_sum() == 2);  // P(5,1)
    CHECK(census.beta_weighted_sum() == 0);   // Q(5,1)
}

TEST_CASE("census weighted sums hit the P and Q targets") {
    const PapTriangleSet ps = enumerate_pap_triangles(9);
    for (int n = 2; n <= 10; n += 2) {
        for (int k = 1; k <= n - 1; ++k) {
            CAPTURE(n);
            CAPTURE(k);
            const OrbitCensus census = orbit_census(n, k);
            CHECK(census.alpha_weighted_sum() == ps.p.at_or_zero(n - 1, k - 1));
            CHECK(census.beta_weighted_sum() == ps.q.at_or_zero(n - 1, k - 1));
            CHECK(census.alpha_weighted_sum() + census.beta_weighted_sum() ==
                  ps.s.at_or_zero(n - 1, k - 1));
        }
    }
}

TEST_CASE("census input validation and the empty k=0 cell") {
    CHECK_THROWS_AS(orbit_census(5, 2), std::invalid_argument);
    CHECK_THROWS_AS(orbit_census(6, 6), std::invalid_argument);
    CHECK_THROWS_AS(orbit_census(6, -1), std::invalid_argument);
    const OrbitCensus empty = orbit_census(6, 0);
    for (const auto& [d, ab] : empty.by_period) {
        CHECK(ab.first == 0);
        CHECK(ab.second == 0);
    }
}

TEST_CASE("parity is constant along tau orbits of canonical PAPs") {
    for (int n : {6, 8}) {
        for_each_pap(n - 1, [&](std::span<const Entry> a) {
            std::vector<Entry> c(a.begin(), a.end());
            c.push_back(static_cast<Entry>(n));
            const Permutation base(std::move(c));
            const Parity base_parity = parity(base);
            for (const Permutation& e : orbit_tau(base).elements)
                CHECK(parity(e) == base_parity);
        });
    }
}

TEST_CASE("canonical PAP counts") {
    CHECK(canonical_pap_counts(10, 5) == std::pair<std::int64_t, std::int64_t>{610, 420});
    CHECK(canonical_pap_counts(4, 1) == std::pair<std::int64_t, std::int64_t>{0, 1});
    CHECK(canonical_pap_counts(6, 1) == std::pair<std::int64_t, std::int64_t>{1, 0});
    const PapTriangleSet ps = enumerate_pap_triangles(7);
    for (int n = 2; n <= 8; n += 2) {
        for (int k = 1; k <= n - 1; ++k) {
            const auto [even, odd] = canonical_pap_counts(n, k);
            CHECK(even == ps.p.at_or_zero(n - 1, k - 1));
            CHECK(odd == ps.q.at_or_zero(n - 1, k - 1));
        }
    }
}

TEST_CASE("non-PAP permutations split evenly by parity for odd n") {
    CHECK(nonpap_parity_balance(5, 2) == std::pair<std::int64_t, std::int64_t>{30, 30});
    CHECK(nonpap_parity_balance(1, 0) == std::pair<std::int64_t, std::int64_t>{0, 0});
    for (int n : {3, 5, 7}) {
        for (int k = 0; k < n; ++k) {
            const auto [even, odd] = nonpap_parity_balance(n, k);
            CHECK(even == odd);
        }
    }
    CHECK_THROWS_AS(nonpap_parity_balance(4, 1), std::invalid_argument);
}

}  // TEST_SUITE
