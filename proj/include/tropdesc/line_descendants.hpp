#pragma once

#include <vector>

#include "tropdesc/context.hpp"
#include "tropdesc/rational.hpp"

/// Descendant invariants with line constraints: <psi^k L>_d and <psi L, psi L>_d.
namespace tropdesc::lines {

/// A curve component attached to the psi^k L vertex after it escapes along an
/// end of the line: degree d and the weight w of the edge joining the vertex.
struct Component {
    int d = 0;
    int w = 0;
    auto operator<=>(const Component&) const = default;
};

/// One summand of the correction sum. `plain` components hang on strings that
/// leave towards the left and are counted with a free end (N_d(w)); `tilde`
/// components sit on vertical strings and are counted with a fixed end (Ñ_d(w)).
/// Both lists are sorted.
struct CorrectionDatum {
    int r = 0;
    int l = 0;
    int s = 0;
    std::vector<Component> plain;
    std::vector<Component> tilde;

    int component_count() const { return static_cast<int>(plain.size() + tilde.size()); }
    /// Number of splitting automorphisms: product of factorials of repeated components.
    BigInt sigma() const;
    /// Points needed to fix each component: 3d - w (plain), 3d - w - 1 (tilde); plain first.
    std::vector<long> marks() const;

    bool operator==(const CorrectionDatum&) const = default;
};

/// All data with 2r + l + s = k + 2, s <= S, s + r <= l <= d, 1 <= w <= d per
/// component, S <= sum w = l - r and sum d = d - r. Data with r = 0 and plain
/// components are omitted: they carry the factor 0^(S-s) = 0.
std::vector<CorrectionDatum> enumerate_correction_data(int d, int k);

/// Contribution of a single datum, including the overall factor 3.
Rational correction_datum_term(Context& ctx, int d, int k, const CorrectionDatum& datum);

/// Sum of correction_datum_term over enumerate_correction_data(d, k).
Rational correction_term(Context& ctx, int d, int k);

/// <psi^k L>_d. Seeds: k = 0 gives d N_d, <psi L>_1 from the context, <psi^k L>_1 = 0
/// for k >= 2, and zero whenever k > 3d - 1. Otherwise the splitting recursion (six
/// terms per splitting) plus the correction term.
Rational psi_line(Context& ctx, int d, int k);

/// The recursion step in its six-term form, for d >= 2 and k >= 1, without the
/// dimension cut-off. Lower-degree values come from psi_line.
Rational psi_line_form_a(Context& ctx, int d, int k);

/// The same recursion step with the binomial coefficients factored into three terms.
Rational psi_line_form_b(Context& ctx, int d, int k);

/// Closed recursions specialized to k = 1, 2, 3.
Rational psi_line_corollary(Context& ctx, int d, int k);

/// k = 1: 2 N_d + N_d(2). k = 2: 3 N_Box(d) + N_d(3)/2 + (1/2) sum C(3d-3, 3d1-1) d1 N_d1 N_d2.
/// Throws InsufficientDataError when N_Box(d) has no provider.
Rational psi_line_explicit(Context& ctx, int d, int k);

/// <psi L, psi L>_d by its splitting recursion from <psi L, psi L>_1.
Rational psi_line_line(Context& ctx, int d);

/// <psi L, psi L>_d from point and relative counts. Throws InsufficientDataError naming
/// every special-degree count no provider can supply.
Rational two_lines_explicit(Context& ctx, int d);

/// <L, psi^k L>_d = d <psi^k L>_d + <psi^(k-1) P>_d.
Rational line_psi_line(Context& ctx, int d, int k);

/// Degree-d curves through 3d - 1 points meeting m further lines: N_d d^m.
Rational curve_insertion_count(Context& ctx, int d, int m);

}  // namespace tropdesc::lines
