#pragma once

// Every numeric constant of the explicit bounds, in one table. Values are
// exact rationals written as decimal strings.

#include "tmeasure/numerics.hpp"

#include <string_view>
#include <vector>

namespace tmeasure {

struct ConstantEntry {
    std::string_view key;
    std::string_view value;
    std::string_view role;
};

const std::vector<ConstantEntry>& constants_table();

/// Exact value of a table entry; throws DomainError for an unknown key.
const Rational& K(std::string_view key);

}  // namespace tmeasure
