#include <algorithm>
#include <numeric>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "pap/operators.hpp"
#include "pap/permutation.hpp"

using namespace pap;

namespace {

Permutation perm(const std::string& s) { return parse_permutation(s); }

// 1-based position of the largest entry.
int top_position(const Permutation& p) {
    for (int i = 0; i < p.size(); ++i)
        if (p[i] == p.size()) return i + 1;
    return 0;
}

}  // namespace

TEST_SUITE("operators") {

TEST_CASE("sigma worked examples") {
    CHECK(apply_sigma(perm("145236")) == perm("125634"));
    CHECK(apply_sigma(perm("125634")) == perm("236145"));
    CHECK(apply_sigma(perm("236145")) == perm("341256"));
    for (int n : {1, 2, 5, 9}) CHECK(apply_sigma(Permutation::identity(n)) == Permutation::identity(n));
    CHECK(apply_sigma(perm("321")) == perm("321"));
}

TEST_CASE("sigma matches the rotation formulation") {
    for (int n = 1; n <= 8; ++n)
        for (const Permutation& p : oracle::all_perms(n))
            CHECK(apply_sigma(p) == oracle::sigma_by_rotation(p));
}

TEST_CASE("sigma preserves the ascent count") {
    for (int n = 2; n <= 8; ++n)
        for (const Permutation& p : oracle::all_perms(n))
            CHECK(ascent_count(apply_sigma(p)) == ascent_count(p));
}

TEST_CASE("sigma preserves membership in E<") {
    for (int n = 2; n <= 8; ++n)
        for (const Permutation& p : oracle::all_perms(n))
            CHECK(left_less_right(apply_sigma(p)) == left_less_right(p));
}

TEST_CASE("inversion delta follows the interior-position law") {
    CHECK(inversion_delta(perm("145236")) == 0);       // largest entry at the right end
    CHECK(inversion_delta(perm("125634")) == 2 * 4 - 7);
    CHECK(inversion_delta(perm("236145")) == 2 * 3 - 7);  // top at position 3
    CHECK(inversion_delta(perm("263145")) == 2 * 2 - 7);  // top at position 2
    // pair-scan cross-check of the 236145 instance
    CHECK(oracle::pair_scan_inversions(apply_sigma(perm("236145"))) -
              oracle::pair_scan_inversions(perm("236145")) ==
          -1);

    for (int n = 2; n <= 8; ++n) {
        for (const Permutation& p : oracle::all_perms(n)) {
            const int i = top_position(p);
            const std::int64_t expected = (i == 1 || i == n) ? 0 : 2 * i - (n + 1);
            CHECK(inversion_delta(p) == expected);
        }
    }
}

TEST_CASE("sigma preserves parity for every permutation of odd size") {
    for (int n : {3, 5, 7})
        for (const Permutation& p : oracle::all_perms(n))
            CHECK(parity(apply_sigma(p)) == parity(p));
}

TEST_CASE("PAP membership is sigma-invariant for even sizes") {
    for (int n : {4, 6, 8})
        for (const Permutation& p : oracle::all_perms(n))
            CHECK(is_pap(apply_sigma(p)) == is_pap(p));
}

TEST_CASE("sigma breaks parity alternation at interior tops for odd sizes") {
    for (int n : {5, 7}) {
        for (const Permutation& p : oracle::all_perms(n)) {
            const int i = top_position(p);
            if (!is_pap(p) || i == 1 || i == n) continue;
            CHECK_FALSE(is_pap(apply_sigma(p)));
        }
    }
}

TEST_CASE("sigma periods") {
    CHECK(period_sigma(perm("12")) == 1);
    CHECK(period_sigma(perm("145236")) == 4);
    for (int n : {1, 3, 6}) CHECK(period_sigma(Permutation::identity(n)) == 1);
}

TEST_CASE("period relation on E< members") {
    // period = (n - k) * gcd(n, period) whenever the first entry is below the last
    for (int n = 2; n <= 8; ++n) {
        for (const Permutation& p : oracle::all_perms(n)) {
            if (!left_less_right(p)) continue;
            const std::int64_t period = period_sigma(p);
            const std::int64_t k = ascent_count(p);
            CHECK(period == (n - k) * std::gcd(std::int64_t(n), period));
        }
    }
}

TEST_CASE("sigma orbit records") {
    const OrbitRecord identity_orbit = orbit_sigma(Permutation::identity(4));
    CHECK(identity_orbit.period == 1);
    CHECK(identity_orbit.elements.size() == 1);

    const OrbitRecord orbit = orbit_sigma(perm("145236"));
    CHECK(orbit.period == 4);
    CHECK(orbit.elements.size() == 4);
    CHECK(orbit.elements.back() == orbit.base);
    CHECK(std::count(orbit.elements.begin(), orbit.elements.end(), perm("125634")) == 1);
    const std::set<std::string> distinct{orbit.elements[0].str(), orbit.elements[1].str(),
                                         orbit.elements[2].str(), orbit.elements[3].str()};
    CHECK(distinct.size() == 4);
    for (const Permutation& e : orbit.elements)
        CHECK(ascent_count(e) == ascent_count(orbit.base));
}

TEST_CASE("canonical predicate") {
    CHECK(is_canonical(perm("145236")));
    CHECK(is_canonical(perm("341256")));
    CHECK_FALSE(is_canonical(perm("236145")));
    CHECK(is_canonical(Permutation::identity(1)));
}

TEST_CASE("tau worked example and preconditions") {
    CHECK(apply_tau(perm("145236")) == perm("341256"));
    CHECK(apply_tau(perm("341256")) == perm("145236"));
    for (int n : {2, 6, 10}) CHECK(apply_tau(Permutation::identity(n)) == Permutation::identity(n));
    CHECK_THROWS_AS(apply_tau(perm("12345")), std::invalid_argument);  // odd size
    CHECK_THROWS_AS(apply_tau(perm("1243")), std::invalid_argument);   // not canonical
}

TEST_CASE("tau periods") {
    CHECK(period_tau(perm("145236")) == 2);
    CHECK(period_tau(Permutation::identity(8)) == 1);

    // every canonical PAP of size 6 has a period dividing 6
    for_each_pap(5, [&](std::span<const Entry> a) {
        std::vector<Entry> c(a.begin(), a.end());
        c.push_back(6);
        const std::int64_t d = period_tau(Permutation(std::move(c)));
        CHECK(6 % d == 0);
    });
}

TEST_CASE("tau and sigma periods are linked through the canonical elements") {
    // For a canonical p of even size N with k ascents and tau-period d:
    // the sigma period is d * (N - k) and the sigma orbit holds exactly d
    // canonical permutations.
    for (int n : {6, 8}) {
        for_each_pap(n - 1, [&](std::span<const Entry> a) {
            std::vector<Entry> c(a.begin(), a.end());
            c.push_back(static_cast<Entry>(n));
            const Permutation p(std::move(c));
            const std::int64_t d = period_tau(p);
            const std::int64_t k = ascent_count(p);
            CHECK(period_sigma(p) == d * (n - k));
            std::int64_t canonical_count = 0;
            for (const Permutation& e : orbit_sigma(p).elements)
                canonical_count += is_canonical(e);
            CHECK(canonical_count == d);
        });
    }
}

TEST_CASE("tau preserves ascents, parity and parity alternation on canonical PAPs") {
    for (int n : {6, 8}) {
        for_each_pap(n - 1, [&](std::span<const Entry> a) {
            std::vector<Entry> c(a.begin(), a.end());
            c.push_back(static_cast<Entry>(n));
            const Permutation p(std::move(c));
            const Permutation image = apply_tau(p);
            CHECK(is_canonical(image));
            CHECK(is_pap(image));
            CHECK(ascent_count(image) == ascent_count(p));
            CHECK(parity(image) == parity(p));
        });
    }
}

TEST_CASE("tau orbit records") {
    const OrbitRecord orbit = orbit_tau(perm("145236"));
    CHECK(orbit.period == 2);
    REQUIRE(orbit.elements.size() == 2);
    CHECK(orbit.elements[0] == perm("341256"));
    CHECK(orbit.elements[1] == perm("145236"));
    for (const Permutation& e : orbit.elements) CHECK(is_canonical(e));
}

}  // TEST_SUITE
