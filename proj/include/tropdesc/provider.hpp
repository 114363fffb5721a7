#pragma once

#include <optional>
#include <string_view>

#include "tropdesc/context.hpp"
#include "tropdesc/invariant_key.hpp"
#include "tropdesc/rational.hpp"

namespace tropdesc {

enum class Provenance { Computed, Table, Oracle };

std::string_view to_string(Provenance p);

struct Sourced {
    Rational value;
    Provenance provenance = Provenance::Computed;
};

/// Evaluates any key: engines first, then the constant tables, then the polygon
/// oracle when enabled. Throws DomainError/ProfileError for invalid parameters and
/// InsufficientDataError when no source knows a special-degree count.
Sourced compute(Context& ctx, const InvariantKey& key);

/// Like compute, but every failure is reported as absence.
std::optional<Sourced> provider_lookup(Context& ctx, const InvariantKey& key);

/// Special-degree counts only. Keys that reduce to N(d) are answered as computed;
/// an invalid degree throws DomainError; unknown counts are absent.
std::optional<Sourced> special_value(Context& ctx, const SpecialDegree& degree);

}  // namespace tropdesc
