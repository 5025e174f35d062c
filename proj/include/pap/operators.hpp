#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "pap/permutation.hpp"

namespace pap {

enum class OperatorTag { Sigma, Tau };

/// The cyclic-increment operator. Every entry gains one, n+1 wraps to 1;
/// when n sits at the right (left) end the new 1 enters at the left
/// (right) end instead. Preserves the ascent count. Identity on [1].
Permutation apply_sigma(const Permutation& p);

/// inversion_count(sigma p) - inversion_count(p).
std::int64_t inversion_delta(const Permutation& p);

/// Smallest l >= 1 with sigma^l p = p.
std::int64_t period_sigma(const Permutation& p);

/// Last entry equals n.
bool is_canonical(const Permutation& p);

/// The power of sigma that carries a canonical permutation of even size
/// to the next canonical permutation in its sigma-orbit: sigma^(N - a_{N-1}).
/// Throws std::invalid_argument for non-canonical or odd-size input.
Permutation apply_tau(const Permutation& p);

/// Smallest d >= 1 with tau^d p = p; divides the size of p.
std::int64_t period_tau(const Permutation& p);

struct OrbitRecord {
    Permutation base;
    OperatorTag op;
    std::int64_t period = 0;
    /// Elements in application order: op(p), op^2(p), ..., op^period(p) = p.
    std::vector<Permutation> elements;
};

OrbitRecord orbit_sigma(const Permutation& p);
OrbitRecord orbit_tau(const Permutation& p);

namespace detail {
// In-place variants used by the orbit census hot paths.
void sigma_inplace(std::span<Entry> a);
// Precondition (unchecked): canonical, even size.
void tau_inplace(std::span<Entry> a);
}  // namespace detail

}  // namespace pap
