#include "pap/triangle.hpp"

#include <numeric>
#include <stdexcept>

namespace pap {

char to_letter(TriangleKind kind) {
    switch (kind) {
        case TriangleKind::A: return 'A';
        case TriangleKind::B: return 'B';
        case TriangleKind::C: return 'C';
        case TriangleKind::D: return 'D';
        case TriangleKind::S: return 'S';
        case TriangleKind::P: return 'P';
        case TriangleKind::Q: return 'Q';
        case TriangleKind::R: return 'R';
    }
    throw std::logic_error("unknown triangle kind");
}

TriangleKind triangle_kind_from(std::string_view text) {
    if (text.size() == 1) {
        switch (text[0]) {
            case 'A': case 'a': return TriangleKind::A;
            case 'B': case 'b': return TriangleKind::B;
            case 'C': case 'c': return TriangleKind::C;
            case 'D': case 'd': return TriangleKind::D;
            case 'S': case 's': return TriangleKind::S;
            case 'P': case 'p': return TriangleKind::P;
            case 'Q': case 'q': return TriangleKind::Q;
            case 'R': case 'r': return TriangleKind::R;
        }
    }
    throw std::invalid_argument("unknown triangle kind '" + std::string(text) +
                                "' (expected one of A B C D S P Q R)");
}

std::string to_string(Provenance p) {
    switch (p) {
        case Provenance::Recurrence: return "recurrence";
        case Provenance::Enumeration: return "enumeration";
        case Provenance::ClosedForm: return "closed-form";
    }
    throw std::logic_error("unknown provenance");
}

Provenance provenance_from(std::string_view text) {
    if (text == "recurrence") return Provenance::Recurrence;
    if (text == "enumeration") return Provenance::Enumeration;
    if (text == "closed-form") return Provenance::ClosedForm;
    throw std::invalid_argument("unknown provenance '" + std::string(text) + "'");
}

std::int64_t Triangle::at(int n, int k) const {
    if (n < 1 || n > n_max || k < 0 || k >= n)
        throw std::out_of_range("triangle index (" + std::to_string(n) + ", " +
                                std::to_string(k) + ") out of range");
    return rows[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(k)];
}

std::int64_t Triangle::at_or_zero(int n, int k) const {
    if (n < 1 || n > n_max || k < 0 || k >= n) return 0;
    return rows[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(k)];
}

const std::vector<std::int64_t>& Triangle::row(int n) const {
    if (n < 1 || n > n_max) throw std::out_of_range("triangle row " + std::to_string(n));
    return rows[static_cast<std::size_t>(n - 1)];
}

std::int64_t Triangle::row_sum(int n) const {
    const auto& r = row(n);
    return std::accumulate(r.begin(), r.end(), std::int64_t{0});
}

}  // namespace pap
