#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace pap {

/// One checked fact. For equality checks lhs/rhs are the two sides; for
/// divisibility checks lhs is the value and rhs the modulus.
struct CheckItem {
    std::string label;
    std::int64_t lhs = 0;
    std::int64_t rhs = 0;
    bool pass = false;
};

struct CheckReport {
    std::string name;
    std::vector<CheckItem> items;

    bool ok() const;
    std::size_t failure_count() const;

    void expect_eq(std::string label, std::int64_t lhs, std::int64_t rhs);
    void expect_divisible(std::string label, std::int64_t value, std::int64_t modulus);
    void merge(CheckReport other);
};

}  // namespace pap
