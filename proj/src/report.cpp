#include "pap/report.hpp"

#include <algorithm>

namespace pap {

bool CheckReport::ok() const {
    return std::all_of(items.begin(), items.end(), [](const CheckItem& i) { return i.pass; });
}

std::size_t CheckReport::failure_count() const {
    return static_cast<std::size_t>(
        std::count_if(items.begin(), items.end(), [](const CheckItem& i) { return !i.pass; }));
}

void CheckReport::expect_eq(std::string label, std::int64_t lhs, std::int64_t rhs) {
    items.push_back({std::move(label), lhs, rhs, lhs == rhs});
}

void CheckReport::expect_divisible(std::string label, std::int64_t value, std::int64_t modulus) {
    items.push_back({std::move(label), value, modulus, modulus != 0 && value % modulus == 0});
}

void CheckReport::merge(CheckReport other) {
    items.insert(items.end(), std::make_move_iterator(other.items.begin()),
                 std::make_move_iterator(other.items.end()));
}

}  // namespace pap
