#pragma once

#include <cstddef>

#include "tropdesc/context.hpp"
#include "tropdesc/invariant_key.hpp"
#include "tropdesc/rational.hpp"

/// Genus-0 descendant invariants of the plane, reconstructed from the
/// all-primary point counts N_d with the dimension constraint, the degree-0
/// closed form, the string, dilaton and divisor equations and the topological
/// recursion relation.
namespace tropdesc::points {

/// Value of a correlator, memoized on its canonical form.
Rational descendant(Context& ctx, const Correlator& c);

/// One topological-recursion expansion of `c` (in canonical order) with insertion
/// `first` carrying the lowered psi power and `second`, `third` the companions.
/// Requires c.insertions[first].psi >= 1 and three distinct indices.
Rational descendant_trr(Context& ctx, const Correlator& c, std::size_t first, std::size_t second, std::size_t third);

/// <psi^k P>_d: one psi^k point insertion plus 3d - 2 - k plain points. psiP(d, 0) = N_d.
Rational psiP(Context& ctx, int d, int k);

/// Convenience builder: (psi^k T2) together with `points` plain point insertions.
Correlator point_correlator(int d, int k, int points);

}  // namespace tropdesc::points
