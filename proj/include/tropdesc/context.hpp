#pragma once

#include "tropdesc/cache_store.hpp"
#include "tropdesc/rational.hpp"

namespace tropdesc {

#ifdef TROPDESC_HAS_POLYGON_ORACLE
inline constexpr bool kPolygonOracleBuilt = true;
#else
inline constexpr bool kPolygonOracleBuilt = false;
#endif

/// Base values of the line recursions. Never recomputed; overridable only to
/// exercise the validation suite.
struct Seeds {
    Rational psi_line_degree1 = 2;       // <psi L>_1
    Rational psi_line_line_degree1 = 2;  // <psi L, psi L>_1
};

struct ContextOptions {
    bool use_oracle = kPolygonOracleBuilt;
    Seeds seeds;
};

/// Shared state of one computation session: the memo store and options.
class Context {
public:
    explicit Context(ContextOptions options = {}) : options_(std::move(options)) {
        if (!kPolygonOracleBuilt) options_.use_oracle = false;
    }

    CacheStore& cache() { return cache_; }
    const CacheStore& cache() const { return cache_; }
    const ContextOptions& options() const { return options_; }

private:
    ContextOptions options_;
    CacheStore cache_;
};

}  // namespace tropdesc
