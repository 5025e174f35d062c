#include "pap/operators.hpp"

#include <cassert>
#include <stdexcept>

namespace pap {

namespace detail {

void sigma_inplace(std::span<Entry> a) {
    const int n = static_cast<int>(a.size());
    if (n <= 1) return;
    const Entry top = static_cast<Entry>(n);
    if (a[static_cast<std::size_t>(n - 1)] == top) {
        // top at the right end: the new 1 enters on the left
        for (int i = n - 1; i > 0; --i)
            a[static_cast<std::size_t>(i)] = static_cast<Entry>(a[static_cast<std::size_t>(i - 1)] + 1);
        a[0] = 1;
    } else if (a[0] == top) {
        // top at the left end: the new 1 enters on the right
        for (int i = 0; i + 1 < n; ++i)
            a[static_cast<std::size_t>(i)] = static_cast<Entry>(a[static_cast<std::size_t>(i + 1)] + 1);
        a[static_cast<std::size_t>(n - 1)] = 1;
    } else {
        for (auto& v : a) v = (v == top) ? Entry{1} : static_cast<Entry>(v + 1);
    }
}

void tau_inplace(std::span<Entry> a) {
    const int n = static_cast<int>(a.size());
    assert(n >= 2 && n % 2 == 0 && a[static_cast<std::size_t>(n - 1)] == n);
    const int steps = n - a[static_cast<std::size_t>(n - 2)];
    for (int i = 0; i < steps; ++i) sigma_inplace(a);
}

}  // namespace detail

Permutation apply_sigma(const Permutation& p) {
    std::vector<Entry> a(p.entries().begin(), p.entries().end());
    detail::sigma_inplace(a);
    return Permutation(std::move(a));
}

std::int64_t inversion_delta(const Permutation& p) {
    return inversion_count(apply_sigma(p)) - inversion_count(p);
}

std::int64_t period_sigma(const Permutation& p) {
    const int n = p.size();
    // Members of E<(n,k) (first entry below last) have period at most
    // n*(n-k); any permutation cycles within the full group order.
    const std::uint64_t cap = left_less_right(p)
        ? static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(n - ascent_count(p))
        : (n <= 18 ? static_cast<std::uint64_t>(n) * factorial(n) : UINT64_MAX);
    std::vector<Entry> cur(p.entries().begin(), p.entries().end());
    const std::vector<Entry> base = cur;
    std::uint64_t steps = 0;
    do {
        detail::sigma_inplace(cur);
        ++steps;
        if (steps > cap) throw std::logic_error("sigma period exceeded its theoretical bound");
    } while (cur != base);
    return static_cast<std::int64_t>(steps);
}

bool is_canonical(const Permutation& p) {
    return p[p.size() - 1] == p.size();
}

namespace {

void require_tau_input(const Permutation& p) {
    if (p.size() % 2 != 0)
        throw std::invalid_argument("tau requires a permutation of even size");
    if (!is_canonical(p))
        throw std::invalid_argument("tau requires a canonical permutation (last entry = n)");
}

}  // namespace

Permutation apply_tau(const Permutation& p) {
    require_tau_input(p);
    std::vector<Entry> a(p.entries().begin(), p.entries().end());
    detail::tau_inplace(a);
    assert(a.back() == static_cast<Entry>(a.size()));
    return Permutation(std::move(a));
}

std::int64_t period_tau(const Permutation& p) {
    require_tau_input(p);
    const int n = p.size();
    std::vector<Entry> cur(p.entries().begin(), p.entries().end());
    const std::vector<Entry> base = cur;
    std::int64_t steps = 0;
    do {
        detail::tau_inplace(cur);
        ++steps;
        if (steps > n) throw std::logic_error("tau period exceeded the size bound");
    } while (cur != base);
    return steps;
}

namespace {

OrbitRecord collect_orbit(const Permutation& p, OperatorTag op) {
    OrbitRecord record{p, op, 0, {}};
    const int base_ascents = ascent_count(p);
    Permutation cur = p;
    while (true) {
        cur = (op == OperatorTag::Sigma) ? apply_sigma(cur) : apply_tau(cur);
        record.elements.push_back(cur);
        ++record.period;
        if (ascent_count(cur) != base_ascents)
            throw std::logic_error("orbit element changed its ascent count");
        if (cur == p) break;
        const std::int64_t cap = (op == OperatorTag::Sigma)
            ? (p.size() <= 18 ? static_cast<std::int64_t>(p.size()) *
                                    static_cast<std::int64_t>(factorial(p.size()))
                              : INT64_MAX)
            : static_cast<std::int64_t>(p.size());
        if (record.period > cap) throw std::logic_error("orbit walk exceeded its period bound");
    }
    return record;
}

}  // namespace

OrbitRecord orbit_sigma(const Permutation& p) {
    return collect_orbit(p, OperatorTag::Sigma);
}

OrbitRecord orbit_tau(const Permutation& p) {
    require_tau_input(p);
    return collect_orbit(p, OperatorTag::Tau);
}

}  // namespace pap
