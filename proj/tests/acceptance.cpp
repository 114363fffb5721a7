#include <chrono>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "tropdesc/context.hpp"
#include "tropdesc/validate.hpp"

using namespace tropdesc;
using validate::Check;
using validate::Status;

namespace {

bool mentions_oracle(const Check& c) { return c.name.find("oracle") != std::string::npos; }
bool is_nw32(const Check& c) { return c.name.rfind("N_w(d=3,w=2)", 0) == 0; }

struct Criterion {
    std::string title;
    std::vector<Check> checks;
    bool skipped = false;
    std::string extra_failure;
};

int report(const std::vector<Criterion>& criteria) {
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto& c = criteria[i];
        std::size_t bad = 0;
        for (const auto& ch : c.checks)
            if (ch.status == Status::Fail) ++bad;
        const bool fail = bad > 0 || !c.extra_failure.empty() || (!c.skipped && c.checks.empty());
        const char* tag = fail ? "FAIL" : c.skipped ? "SKIP" : "PASS";
        std::cout << tag << "  criterion " << i + 1 << ": " << c.title << " (" << c.checks.size() << " checks)\n";
        for (const auto& ch : c.checks)
            if (ch.status == Status::Fail) std::cout << "      " << validate::format(ch) << "\n";
        if (!c.extra_failure.empty()) std::cout << "      " << c.extra_failure << "\n";
        if (fail) ++failures;
    }
    return failures;
}

}  // namespace

int main() {
    const auto start = std::chrono::steady_clock::now();
    Context ctx;
    const auto reference = validate::run_reference(ctx);
    const auto cross = validate::run_cross(ctx);

    ContextOptions plain;
    plain.use_oracle = false;
    Context no_oracle(plain);
    const auto cross_plain = validate::run_cross(no_oracle);

    Criterion exact{"exact reference values", {}, false, {}};
    Criterion divergence{"documented N_w(3,2) divergence", {}, false, {}};
    Criterion crossed{"cross-formula properties", {}, false, {}};
    Criterion oracle{"polygon oracle calibration", {}, !kPolygonOracleBuilt, {}};

    for (const auto& c : reference.checks) (is_nw32(c) ? divergence : exact).checks.push_back(c);
    bool noted = false;
    for (const auto& c : divergence.checks)
        if (c.status == Status::Note && c.detail.find("22") != std::string::npos) noted = true;
    if (!noted) divergence.extra_failure = "no note about the printed value 22";

    for (const auto& c : cross.checks) {
        if (c.status == Status::Skip) continue;
        (mentions_oracle(c) ? oracle : crossed).checks.push_back(c);
    }
    for (const auto& c : cross_plain.checks)
        if (c.status == Status::Fail)
            oracle.extra_failure = "cross suite without the oracle is not green: " + c.name;

    const int failures = report({exact, divergence, crossed, oracle});
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
    std::cout << (failures ? "FAIL" : "PASS") << "  all criteria, " << ms.count() << " ms\n";
    return failures ? 1 : 0;
}
