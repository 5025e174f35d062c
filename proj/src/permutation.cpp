#include "pap/permutation.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace pap {

Permutation::Permutation(std::vector<Entry> entries) : entries_(std::move(entries)) {
    const std::size_t n = entries_.size();
    if (n < 1) throw std::invalid_argument("permutation must have at least one entry");
    if (n > 255) throw std::invalid_argument("permutation too large (n > 255)");
    std::array<bool, 256> seen{};
    for (Entry v : entries_) {
        if (v < 1 || v > n) {
            throw std::invalid_argument("entry " + std::to_string(int(v)) +
                                        " outside 1.." + std::to_string(n));
        }
        if (seen[v]) throw std::invalid_argument("duplicate entry " + std::to_string(int(v)));
        seen[v] = true;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<Entry> e(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) e[static_cast<std::size_t>(i)] = static_cast<Entry>(i + 1);
    return Permutation(std::move(e));
}

std::string Permutation::str() const {
    std::string out;
    const bool compact = size() <= 9;
    for (int i = 0; i < size(); ++i) {
        if (i > 0 && !compact) out += ' ';
        out += std::to_string(int(entries_[static_cast<std::size_t>(i)]));
    }
    return out;
}

Permutation parse_permutation(const std::string& text) {
    std::vector<Entry> entries;
    const bool has_separator =
        text.find_first_of(" ,\t") != std::string::npos;
    if (has_separator) {
        std::string normalized = text;
        std::replace(normalized.begin(), normalized.end(), ',', ' ');
        std::istringstream in(normalized);
        long v = 0;
        while (in >> v) {
            if (v < 1 || v > 255) throw std::invalid_argument("permutation entry out of range");
            entries.push_back(static_cast<Entry>(v));
        }
        if (!in.eof()) throw std::invalid_argument("malformed permutation literal: " + text);
    } else {
        if (text.empty()) throw std::invalid_argument("empty permutation literal");
        if (text.size() > 9) {
            throw std::invalid_argument(
                "compact digit form is only valid for n <= 9; separate entries with spaces");
        }
        for (char ch : text) {
            if (!std::isdigit(static_cast<unsigned char>(ch)) || ch == '0')
                throw std::invalid_argument("malformed permutation literal: " + text);
            entries.push_back(static_cast<Entry>(ch - '0'));
        }
    }
    return Permutation(std::move(entries));
}

int ascent_count(const Permutation& p) {
    int count = 0;
    for (int i = 0; i + 1 < p.size(); ++i) count += p[i] < p[i + 1];
    return count;
}

std::int64_t inversion_count(const Permutation& p) {
    std::vector<Entry> a(p.entries().begin(), p.entries().end());
    std::vector<Entry> buf(a.size());
    std::int64_t inversions = 0;
    for (std::size_t width = 1; width < a.size(); width *= 2) {
        for (std::size_t lo = 0; lo + width < a.size(); lo += 2 * width) {
            const std::size_t mid = lo + width;
            const std::size_t hi = std::min(lo + 2 * width, a.size());
            std::size_t i = lo, j = mid, out = lo;
            while (i < mid && j < hi) {
                if (a[j] < a[i]) {
                    inversions += static_cast<std::int64_t>(mid - i);
                    buf[out++] = a[j++];
                } else {
                    buf[out++] = a[i++];
                }
            }
            while (i < mid) buf[out++] = a[i++];
            while (j < hi) buf[out++] = a[j++];
            std::copy(buf.begin() + static_cast<std::ptrdiff_t>(lo),
                      buf.begin() + static_cast<std::ptrdiff_t>(hi),
                      a.begin() + static_cast<std::ptrdiff_t>(lo));
        }
    }
    return inversions;
}

Parity parity(const Permutation& p) {
    return inversion_count(p) % 2 == 0 ? Parity::Even : Parity::Odd;
}

bool is_pap(const Permutation& p) {
    for (int i = 0; i + 1 < p.size(); ++i) {
        if (((p[i] ^ p[i + 1]) & 1) == 0) return false;
    }
    return true;
}

bool left_less_right(const Permutation& p) {
    return p.size() >= 2 && p[0] < p[p.size() - 1];
}

Permutation reflect(const Permutation& p) {
    std::vector<Entry> e(p.entries().rbegin(), p.entries().rend());
    return Permutation(std::move(e));
}

PermStats compute_stats(const Permutation& p) {
    PermStats s;
    s.n = p.size();
    s.ascents = ascent_count(p);
    s.inversions = inversion_count(p);
    s.parity = s.inversions % 2 == 0 ? Parity::Even : Parity::Odd;
    s.is_pap = is_pap(p);
    s.left_less_right = left_less_right(p);
    return s;
}

std::uint64_t factorial(int n) {
    if (n < 0 || n > 20) throw std::invalid_argument("factorial defined here for 0 <= n <= 20");
    std::uint64_t f = 1;
    for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
    return f;
}

std::uint64_t rank(const Permutation& p) {
    const int n = p.size();
    if (n > 20) throw std::invalid_argument("rank defined here for n <= 20");
    std::uint64_t r = 0;
    for (int i = 0; i < n; ++i) {
        std::uint64_t smaller_later = 0;
        for (int j = i + 1; j < n; ++j) smaller_later += p[j] < p[i];
        r += smaller_later * factorial(n - 1 - i);
    }
    return r;
}

Permutation unrank(int n, std::uint64_t r) {
    if (n < 1 || n > 20) throw std::invalid_argument("unrank defined here for 1 <= n <= 20");
    if (r >= factorial(n)) {
        throw std::invalid_argument("rank " + std::to_string(r) + " out of range 0.." +
                                    std::to_string(factorial(n) - 1));
    }
    std::vector<Entry> avail;
    avail.reserve(static_cast<std::size_t>(n));
    for (int v = 1; v <= n; ++v) avail.push_back(static_cast<Entry>(v));
    std::vector<Entry> out;
    out.reserve(static_cast<std::size_t>(n));
    for (int i = n; i >= 1; --i) {
        const std::uint64_t f = factorial(i - 1);
        const std::size_t idx = static_cast<std::size_t>(r / f);
        r %= f;
        out.push_back(avail[idx]);
        avail.erase(avail.begin() + static_cast<std::ptrdiff_t>(idx));
    }
    return Permutation(std::move(out));
}

void for_each_pap(int n, const std::function<void(std::span<const Entry>)>& fn) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    std::vector<Entry> odds, evens;
    for (int v = 1; v <= n; v += 2) odds.push_back(static_cast<Entry>(v));
    for (int v = 2; v <= n; v += 2) evens.push_back(static_cast<Entry>(v));
    std::vector<Entry> buf(static_cast<std::size_t>(n));

    // Odd values sit at 0-based indices with i % 2 == pattern. An odd n has
    // one more odd value than even values, so only pattern 0 is feasible.
    const int patterns = (n % 2 == 0) ? 2 : 1;
    for (int pattern = 0; pattern < patterns; ++pattern) {
        std::vector<Entry> ov = odds;
        do {
            std::vector<Entry> ev = evens;
            do {
                std::size_t io = 0, ie = 0;
                for (int i = 0; i < n; ++i) {
                    buf[static_cast<std::size_t>(i)] =
                        ((i & 1) == pattern) ? ov[io++] : ev[ie++];
                }
                fn(std::span<const Entry>(buf.data(), buf.size()));
            } while (std::next_permutation(ev.begin(), ev.end()));
        } while (std::next_permutation(ov.begin(), ov.end()));
    }
}

std::vector<Permutation> all_paps(int n) {
    std::vector<Permutation> out;
    for_each_pap(n, [&](std::span<const Entry> a) {
        out.emplace_back(std::vector<Entry>(a.begin(), a.end()));
    });
    return out;
}

}  // namespace pap
