#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "tropdesc/context.hpp"

/// Self-checks of the engines against reference values and against each other.
namespace tropdesc::validate {

enum class Status { Pass, Fail, Skip, Note };

std::string_view to_string(Status s);

struct Check {
    std::string name;
    Status status = Status::Pass;
    std::string expected;
    std::string actual;
    std::string detail;
};

struct Report {
    std::vector<Check> checks;

    /// No check failed; skips and notes do not count.
    bool ok() const;
    std::size_t count(Status s) const;
};

enum class Suite { Paper, Cross, All };

/// Accepts "paper", "cross" and "all"; throws ParseError otherwise.
Suite parse_suite(std::string_view name);

/// Reference values: point counts, relative counts, point and line descendants.
Report run_reference(Context& ctx);

/// Agreement between independent formulas, recursions and the polygon oracle.
Report run_cross(Context& ctx);

Report run(Context& ctx, Suite suite);

/// One line: status, name, then expected/actual or the detail text.
std::string format(const Check& c);

}  // namespace tropdesc::validate
