#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace pap {

/// The eight per-(n,k) statistics:
///   A  permutations with k ascents          B  even ones   C  odd ones
///   S  parity-alternate ones                P  even PAPs   Q  odd PAPs
///   D = B - C                               R = P - Q
enum class TriangleKind { A, B, C, D, S, P, Q, R };

enum class Provenance { Recurrence, Enumeration, ClosedForm };

char to_letter(TriangleKind kind);
TriangleKind triangle_kind_from(std::string_view text);
std::string to_string(Provenance p);
Provenance provenance_from(std::string_view text);

/// An (n,k)-indexed integer table with rows n = 1..n_max, k = 0..n-1.
struct Triangle {
    TriangleKind kind = TriangleKind::A;
    int n_max = 0;
    Provenance provenance = Provenance::Enumeration;
    std::vector<std::vector<std::int64_t>> rows;  // rows[n-1] has n entries

    std::int64_t at(int n, int k) const;          // throws std::out_of_range
    std::int64_t at_or_zero(int n, int k) const;  // 0 outside the table
    const std::vector<std::int64_t>& row(int n) const;
    std::int64_t row_sum(int n) const;
};

}  // namespace pap
