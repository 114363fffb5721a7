#pragma once

#include <optional>
#include <span>
#include <string_view>

#include "tropdesc/invariant_key.hpp"
#include "tropdesc/rational.hpp"

namespace tropdesc::aux {

/// A transcribed special-degree count and where it was read off.
struct ConstantEntry {
    SpecialDegree degree;
    Rational value;
    std::string_view citation;
};

/// All compiled-in constants, in a fixed order.
std::span<const ConstantEntry> entries();

/// Table value for a special-degree key; absent for anything else.
std::optional<Rational> lookup(const InvariantKey& key);

}  // namespace tropdesc::aux
