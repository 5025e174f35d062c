#include "pap/census.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <future>
#include <numeric>
#include <stdexcept>
#include <unordered_set>
#include <vector>

#include "pap/kernels.hpp"
#include "pap/operators.hpp"
#include "pap/permutation.hpp"

namespace pap {

namespace {

Triangle make_triangle(TriangleKind kind, int n_max, Provenance prov) {
    Triangle t{kind, n_max, prov, {}};
    t.rows.resize(static_cast<std::size_t>(n_max));
    for (int n = 1; n <= n_max; ++n)
        t.rows[static_cast<std::size_t>(n - 1)].assign(static_cast<std::size_t>(n), 0);
    return t;
}

// Tally of all n! permutations of [n] into the kernel slot layout
// (4*ascents + 2*odd + pap), split into disjoint lexicographic rank ranges
// that run as independent tasks and merge by addition.
std::vector<std::uint64_t> scan_counts(int n, int chunks) {
    const std::uint64_t total = factorial(n);
    const auto& kernel = kern::active_kernel();
    const std::uint64_t parts =
        std::min<std::uint64_t>(static_cast<std::uint64_t>(chunks), total);

    std::vector<std::future<std::vector<std::uint64_t>>> tasks;
    const std::uint64_t width = total / parts;
    for (std::uint64_t c = 0; c < parts; ++c) {
        const std::uint64_t begin = c * width;
        const std::uint64_t end = (c + 1 == parts) ? total : begin + width;
        tasks.push_back(std::async(std::launch::async, [n, begin, end, &kernel] {
            std::vector<std::uint64_t> counts(static_cast<std::size_t>(4 * n), 0);
            const Permutation start = unrank(n, begin);
            std::array<std::uint8_t, kern::kMaxKernelSize> buf{};
            std::copy(start.entries().begin(), start.entries().end(), buf.begin());
            kernel.tally_range(buf.data(), n, end - begin, counts.data());
            return counts;
        }));
    }

    std::vector<std::uint64_t> merged(static_cast<std::size_t>(4 * n), 0);
    for (auto& task : tasks) {
        const std::vector<std::uint64_t> part = task.get();
        for (std::size_t i = 0; i < merged.size(); ++i) merged[i] += part[i];
    }
    return merged;
}

std::uint64_t slot(const std::vector<std::uint64_t>& counts, int k, bool odd, bool pap) {
    return counts[static_cast<std::size_t>(kern::tally_slot(k, odd, pap))];
}

}  // namespace

TriangleSet enumerate_triangles(int n_max, int parallel_chunks) {
    if (n_max < 1 || n_max > kFullScanCap) {
        throw std::invalid_argument("n_max must be in 1.." + std::to_string(kFullScanCap) +
                                    " for the full factorial scan");
    }
    if (parallel_chunks < 1) throw std::invalid_argument("parallel_chunks must be >= 1");

    TriangleSet ts{
        make_triangle(TriangleKind::A, n_max, Provenance::Enumeration),
        make_triangle(TriangleKind::B, n_max, Provenance::Enumeration),
        make_triangle(TriangleKind::C, n_max, Provenance::Enumeration),
        make_triangle(TriangleKind::D, n_max, Provenance::Enumeration),
        make_triangle(TriangleKind::S, n_max, Provenance::Enumeration),
        make_triangle(TriangleKind::P, n_max, Provenance::Enumeration),
        make_triangle(TriangleKind::Q, n_max, Provenance::Enumeration),
        make_triangle(TriangleKind::R, n_max, Provenance::Enumeration),
    };
    for (int n = 1; n <= n_max; ++n) {
        const std::vector<std::uint64_t> counts = scan_counts(n, parallel_chunks);
        for (int k = 0; k < n; ++k) {
            const auto even_plain = static_cast<std::int64_t>(slot(counts, k, false, false));
            const auto even_pap = static_cast<std::int64_t>(slot(counts, k, false, true));
            const auto odd_plain = static_cast<std::int64_t>(slot(counts, k, true, false));
            const auto odd_pap = static_cast<std::int64_t>(slot(counts, k, true, true));
            const std::size_t row = static_cast<std::size_t>(n - 1);
            const std::size_t col = static_cast<std::size_t>(k);
            ts.b.rows[row][col] = even_plain + even_pap;
            ts.c.rows[row][col] = odd_plain + odd_pap;
            ts.a.rows[row][col] = ts.b.rows[row][col] + ts.c.rows[row][col];
            ts.d.rows[row][col] = ts.b.rows[row][col] - ts.c.rows[row][col];
            ts.p.rows[row][col] = even_pap;
            ts.q.rows[row][col] = odd_pap;
            ts.s.rows[row][col] = even_pap + odd_pap;
            ts.r.rows[row][col] = even_pap - odd_pap;
        }
    }
    return ts;
}

PapTriangleSet enumerate_pap_triangles(int n_max) {
    if (n_max < 1 || n_max > kPapScanCap) {
        throw std::invalid_argument("n_max must be in 1.." + std::to_string(kPapScanCap) +
                                    " for PAP-only enumeration");
    }
    PapTriangleSet ts{
        make_triangle(TriangleKind::S, n_max, Provenance::Enumeration),
        make_triangle(TriangleKind::P, n_max, Provenance::Enumeration),
        make_triangle(TriangleKind::Q, n_max, Provenance::Enumeration),
        make_triangle(TriangleKind::R, n_max, Provenance::Enumeration),
    };
    const auto& kernel = kern::active_kernel();
    for (int n = 1; n <= n_max; ++n) {
        const std::size_t row = static_cast<std::size_t>(n - 1);
        for_each_pap(n, [&](std::span<const Entry> a) {
            const kern::PermClass c = kernel.classify(a.data(), n);
            assert(c.pap);
            const std::size_t col = c.ascents;
            ts.s.rows[row][col] += 1;
            (c.odd ? ts.q : ts.p).rows[row][col] += 1;
        });
        for (int k = 0; k < n; ++k) {
            const std::size_t col = static_cast<std::size_t>(k);
            ts.r.rows[row][col] = ts.p.rows[row][col] - ts.q.rows[row][col];
        }
    }
    return ts;
}

std::int64_t OrbitCensus::alpha_weighted_sum() const {
    std::int64_t sum = 0;
    for (const auto& [d, ab] : by_period) sum += d * ab.first;
    return sum;
}

std::int64_t OrbitCensus::beta_weighted_sum() const {
    std::int64_t sum = 0;
    for (const auto& [d, ab] : by_period) sum += d * ab.second;
    return sum;
}

namespace {

std::uint64_t pack_key(const std::uint8_t* a, int n) {
    std::uint64_t key = 0;
    for (int i = 0; i < n; ++i)
        key |= static_cast<std::uint64_t>(a[i] - 1) << (4 * i);
    return key;
}

struct CanonicalMember {
    std::array<Entry, kern::kMaxKernelSize> perm;
    bool odd;
};

// Canonical PAPs with k ascents are exactly the PAPs of [n-1] with k-1
// ascents suffixed by n; the suffix adds one ascent and no inversions.
std::vector<CanonicalMember> canonical_members(int n, int k) {
    std::vector<CanonicalMember> members;
    if (k < 1) return members;
    const auto& kernel = kern::active_kernel();
    for_each_pap(n - 1, [&](std::span<const Entry> a) {
        const kern::PermClass c = kernel.classify(a.data(), n - 1);
        if (c.ascents != k - 1) return;
        CanonicalMember m{{}, c.odd};
        std::copy(a.begin(), a.end(), m.perm.begin());
        m.perm[static_cast<std::size_t>(n - 1)] = static_cast<Entry>(n);
        members.push_back(m);
    });
    return members;
}

void require_census_cell(int n, int k) {
    if (n < 2 || n % 2 != 0)
        throw std::invalid_argument("orbit census requires an even n >= 2");
    if (n > kPapScanCap)
        throw std::invalid_argument("orbit census capped at n = " + std::to_string(kPapScanCap));
    if (k < 0 || k > n - 1) throw std::invalid_argument("k must be in 0..n-1");
}

}  // namespace

OrbitCensus orbit_census(int n, int k) {
    require_census_cell(n, k);
    OrbitCensus census{n, k, {}};
    for (std::int64_t d = 1; d <= n; ++d)
        if (n % d == 0) census.by_period[d] = {0, 0};

    const std::vector<CanonicalMember> members = canonical_members(n, k);
    std::unordered_set<std::uint64_t> visited;
    visited.reserve(members.size() * 2);

    for (const CanonicalMember& m : members) {
        if (visited.contains(pack_key(m.perm.data(), n))) continue;
        std::array<Entry, kern::kMaxKernelSize> cur = m.perm;
        const std::uint64_t start = pack_key(cur.data(), n);
        std::int64_t period = 0;
        do {
            visited.insert(pack_key(cur.data(), n));
            assert(kern::scalar_kernel().classify(cur.data(), n).odd == m.odd);
            detail::tau_inplace(std::span<Entry>(cur.data(), static_cast<std::size_t>(n)));
            ++period;
            if (period > n) throw std::logic_error("tau orbit period exceeded the size bound");
        } while (pack_key(cur.data(), n) != start);
        if (n % period != 0) throw std::logic_error("tau orbit period does not divide n");
        auto& [alpha, beta] = census.by_period[period];
        (m.odd ? beta : alpha) += 1;
    }
    return census;
}

std::pair<std::int64_t, std::int64_t> canonical_pap_counts(int n, int k) {
    require_census_cell(n, k);
    std::int64_t even = 0, odd = 0;
    for (const CanonicalMember& m : canonical_members(n, k)) (m.odd ? odd : even) += 1;
    return {even, odd};
}

std::pair<std::int64_t, std::int64_t> nonpap_parity_balance(int n, int k) {
    if (n < 1 || n % 2 == 0) throw std::invalid_argument("expected an odd n");
    if (n > kFullScanCap)
        throw std::invalid_argument("full scan capped at n = " + std::to_string(kFullScanCap));
    if (k < 0 || k > n - 1) throw std::invalid_argument("k must be in 0..n-1");
    const std::vector<std::uint64_t> counts = scan_counts(n, 1);
    return {static_cast<std::int64_t>(slot(counts, k, false, false)),
            static_cast<std::int64_t>(slot(counts, k, true, false))};
}

}  // namespace pap
