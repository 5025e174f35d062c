#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace pap {

/// One entry of a permutation in one-line notation. Values run 1..n.
using Entry = std::uint8_t;

enum class Parity { Even, Odd };

/// A permutation of {1,..,n} in one-line notation a_1 a_2 ... a_n.
/// Construction validates that the entries are a bijection on 1..n.
class Permutation {
public:
    explicit Permutation(std::vector<Entry> entries);

    static Permutation identity(int n);

    int size() const { return static_cast<int>(entries_.size()); }

    /// 0-based access: (*this)[i] is a_{i+1} in 1-based notation.
    Entry operator[](int i) const { return entries_[static_cast<std::size_t>(i)]; }

    std::span<const Entry> entries() const { return entries_; }

    bool operator==(const Permutation&) const = default;

    /// Compact "14523" when n <= 9, space-separated otherwise.
    std::string str() const;

private:
    std::vector<Entry> entries_;
};

/// Parses "1 4 5 2 3" (space- or comma-separated) or, for n <= 9 only,
/// the compact digit form "14523".
Permutation parse_permutation(const std::string& text);

/// Number of indices i with a_i < a_{i+1}; zero for n = 1.
int ascent_count(const Permutation& p);

/// Number of pairs (i, j), i < j, with a_i > a_j. Merge-based O(n log n).
std::int64_t inversion_count(const Permutation& p);

Parity parity(const Permutation& p);

/// True when consecutive entries alternate between odd and even values.
/// The single permutation of [1] counts as parity-alternate.
bool is_pap(const Permutation& p);

/// a_1 < a_n. Recorded as false for n = 1.
bool left_less_right(const Permutation& p);

/// Entries reversed: a_n ... a_2 a_1.
Permutation reflect(const Permutation& p);

struct PermStats {
    int n = 0;
    int ascents = 0;
    std::int64_t inversions = 0;
    Parity parity = Parity::Even;
    bool is_pap = false;
    bool left_less_right = false;
};

PermStats compute_stats(const Permutation& p);

/// Exact n! for n <= 20.
std::uint64_t factorial(int n);

/// Lexicographic rank in 0..n!-1.
std::uint64_t rank(const Permutation& p);

/// Inverse of rank(): the r-th permutation of [n] in lexicographic order.
Permutation unrank(int n, std::uint64_t r);

/// Calls fn once per parity-alternate permutation of [n]. The span is a
/// view into a reused buffer and is valid only for the duration of the call.
void for_each_pap(int n, const std::function<void(std::span<const Entry>)>& fn);

std::vector<Permutation> all_paps(int n);

}  // namespace pap
