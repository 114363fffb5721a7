#include "tropdesc/line_descendants.hpp"

#include <map>

#include "tropdesc/combinatorics.hpp"
#include "tropdesc/descendants.hpp"
#include "tropdesc/errors.hpp"
#include "tropdesc/floor_count.hpp"
#include "tropdesc/provider.hpp"

namespace tropdesc::lines {

namespace {

void check_degree(int d) {
    if (d < 1) throw DomainError("d must be >= 1 (got " + std::to_string(d) + ")");
}

Rational C(long n, long k) { return Rational(binomial(n, k)); }

// <psi^j P>_d with the convention <psi^-1 P> = 0.
Rational point_term(Context& ctx, int d, int j) { return j < 0 ? Rational(0) : points::psiP(ctx, d, j); }

BigInt multiplicity_factorials(const std::vector<Component>& components) {
    std::map<Component, int> counts;
    for (const auto& c : components) ++counts[c];
    BigInt r = 1;
    for (const auto& [c, n] : counts) r *= factorial(n);
    return r;
}

// Appends every sorted list of `count` components, each 1 <= w <= d <= max_degree,
// whose weights and degrees sum to the given totals.
void component_multisets(int count, int weight_total, int degree_total, int max_degree, Component floor_bound,
                         std::vector<Component>& current, std::vector<std::vector<Component>>& out) {
    if (count == 0) {
        if (weight_total == 0 && degree_total == 0) out.push_back(current);
        return;
    }
    for (int d = floor_bound.d; d <= std::min(max_degree, degree_total); ++d) {
        for (int w = d == floor_bound.d ? floor_bound.w : 1; w <= std::min(d, weight_total); ++w) {
            // Every remaining component needs degree >= 1 and weight >= 1.
            if (degree_total - d < count - 1 || weight_total - w < count - 1) continue;
            current.push_back({d, w});
            component_multisets(count - 1, weight_total - w, degree_total - d, max_degree, {d, w}, current, out);
            current.pop_back();
        }
    }
}

std::vector<std::vector<Component>> component_multisets(int count, int weight_total, int degree_total) {
    std::vector<std::vector<Component>> out;
    std::vector<Component> current;
    component_multisets(count, weight_total, degree_total, degree_total, {1, 1}, current, out);
    return out;
}

// Splits a weight and degree budget between the plain and the tilde lists.
std::vector<CorrectionDatum> data_for(int d, int r, int l, int s, int S) {
    std::vector<CorrectionDatum> out;
    const int weight_total = l - r;
    const int degree_total = d - r;
    const int plain_count = S - s;
    for (int wt = s; wt <= weight_total - plain_count; ++wt) {
        for (int dt = s; dt <= degree_total - plain_count; ++dt) {
            const auto tildes = component_multisets(s, wt, dt);
            if (tildes.empty()) continue;
            const auto plains = component_multisets(plain_count, weight_total - wt, degree_total - dt);
            for (const auto& t : tildes)
                for (const auto& p : plains) out.push_back(CorrectionDatum{r, l, s, p, t});
        }
    }
    return out;
}

}  // namespace

BigInt CorrectionDatum::sigma() const { return multiplicity_factorials(plain) * multiplicity_factorials(tilde); }

std::vector<long> CorrectionDatum::marks() const {
    std::vector<long> k;
    for (const auto& c : plain) k.push_back(3L * c.d - c.w);
    for (const auto& c : tilde) k.push_back(3L * c.d - c.w - 1);
    return k;
}

std::vector<CorrectionDatum> enumerate_correction_data(int d, int k) {
    check_degree(d);
    if (k < 1) throw DomainError("k must be >= 1");
    std::vector<CorrectionDatum> out;
    for (int r = 0; 2 * r <= k + 2; ++r) {
        for (int l = 1; l <= d; ++l) {
            const int s = k + 2 - 2 * r - l;
            if (s < 0 || s + r > l) continue;
            for (int S = std::max(s, 1); S <= l - r; ++S) {
                if (r == 0 && S > s) continue;
                auto part = data_for(d, r, l, s, S);
                out.insert(out.end(), part.begin(), part.end());
            }
        }
    }
    return out;
}

Rational correction_datum_term(Context& ctx, int d, int k, const CorrectionDatum& datum) {
    const long n = 3L * d - k - 2;
    if (n <= 0) return 0;
    const int S = datum.component_count();
    const auto marks = datum.marks();

    Rational inner_marks = 0, inner_squares = 0, product = 1;
    std::size_t i = 0;
    auto visit = [&](const Component& c, bool tilde) {
        const Rational w(c.w);
        inner_marks += Rational(marks[i]) * Rational(c.d) / w;
        inner_squares += Rational(c.d) * Rational(c.d) / w;
        product *= w * (tilde ? floors::N_tilde(ctx, c.d, c.w) : floors::N_w(ctx, c.d, c.w));
        ++i;
    };
    for (const auto& c : datum.plain) visit(c, false);
    for (const auto& c : datum.tilde) visit(c, true);

    const Rational prefactor =
        Rational(power(datum.r, static_cast<unsigned long>(S - datum.s))) /
        Rational(factorial(datum.r) * factorial(datum.r) * factorial(datum.l) * datum.sigma());
    const Rational bracket = Rational(d) / Rational(n) * inner_marks - inner_squares;
    return Rational(3) * prefactor * Rational(multinomial(n, marks)) * bracket * product;
}

Rational correction_term(Context& ctx, int d, int k) {
    Rational total = 0;
    for (const auto& datum : enumerate_correction_data(d, k)) total += correction_datum_term(ctx, d, k, datum);
    return total;
}

Rational psi_line(Context& ctx, int d, int k) {
    check_degree(d);
    if (k < 0) throw DomainError("k must be >= 0");
    if (k == 0) return Rational(d) * floors::N(ctx, d);
    if (k > 3 * d - 1) return 0;
    if (d == 1) return k == 1 ? ctx.options().seeds.psi_line_degree1 : Rational(0);
    return ctx.cache().get_or_compute(InvariantKey::psi_l(d, k), [&] { return psi_line_form_a(ctx, d, k); });
}

Rational psi_line_form_a(Context& ctx, int d, int k) {
    if (d < 2 || k < 1) throw DomainError("the recursion step needs d >= 2 and k >= 1");
    const long n = 3L * d - 3 - k;
    Rational total = 0;
    for (int d1 = 1; d1 < d; ++d1) {
        const int d2 = d - d1;
        const Rational a(d1), b(d2);
        const Rational N1 = floors::N(ctx, d1);
        const Rational Lk = psi_line(ctx, d2, k);
        const Rational Lk1 = psi_line(ctx, d2, k - 1);
        const Rational Pk1 = point_term(ctx, d2, k - 1);
        const Rational Pk2 = point_term(ctx, d2, k - 2);

        total += C(n, 3 * d1 - 2) * a * a * b * N1 * (b * Lk + Pk1);
        total -= C(n, 3 * d1 - 1) * a * a * a * b * N1 * Lk;
        total += C(n, 3 * d1 - 2) * a * a * b * N1 * Pk1;
        total -= C(n, 3 * d1 - 1) * a * a * a * N1 * Pk1;
        total += C(n, 3 * d1 - 3) * a * N1 * (b * Lk1 + Pk2);
        total -= C(n, 3 * d1 - 2) * a * a * N1 * Lk1;
    }
    return total + correction_term(ctx, d, k);
}

Rational psi_line_form_b(Context& ctx, int d, int k) {
    if (d < 2 || k < 1) throw DomainError("the recursion step needs d >= 2 and k >= 1");
    const long n = 3L * d - 3 - k;
    Rational total = 0;
    for (int d1 = 1; d1 < d; ++d1) {
        const int d2 = d - d1;
        const Rational a(d1), b(d2);
        const Rational N1 = floors::N(ctx, d1);
        const Rational Lk = psi_line(ctx, d2, k);
        const Rational Lk1 = psi_line(ctx, d2, k - 1);
        const Rational Pk1 = point_term(ctx, d2, k - 1);
        const Rational Pk2 = point_term(ctx, d2, k - 2);

        total -= C(n, 3 * d1 - 1) * a * a * a * N1 * (b * Lk + Pk1);
        total += C(n, 3 * d1 - 2) * a * a * N1 * (b * b * Lk + Rational(2) * b * Pk1 - Lk1);
        total += C(n, 3 * d1 - 3) * a * N1 * (b * Lk1 + Pk2);
    }
    return total + correction_term(ctx, d, k);
}

Rational psi_line_corollary(Context& ctx, int d, int k) {
    check_degree(d);
    if (k < 1 || k > 3) throw DomainError("corollary recursions exist for k = 1, 2, 3 only");
    if (k > 3 * d - 1) return 0;
    if (d == 1) return k == 1 ? ctx.options().seeds.psi_line_degree1 : Rational(0);

    auto N = [&](int e) { return floors::N(ctx, e); };
    Rational total = 0;
    const Rational half(1, 2);
    const Rational dd(d);

    if (k == 1) {
        for (int d1 = 1; d1 < d; ++d1) {
            const int d2 = d - d1;
            const Rational a(d1), b(d2), N1 = N(d1), N2 = N(d2);
            const Rational L1 = psi_line_corollary(ctx, d2, 1);
            total -= C(3L * d - 4, 3 * d1 - 1) * a * a * a * N1 * (b * L1 + N2);
            total += C(3L * d - 4, 3 * d1 - 2) * a * a * b * N1 * (b * L1 + N2);
            total += C(3L * d - 4, 3 * d1 - 3) * a * b * b * N1 * N2;
        }
        return total;
    }

    if (k == 2) {
        Rational correction = (dd - 1) * (dd - 1) * N(d - 1);
        for (int d1 = 1; d1 < d; ++d1) {
            const int d2 = d - d1;
            const Rational a(d1), b(d2), N1 = N(d1), N2 = N(d2);
            const Rational L2 = psi_line_corollary(ctx, d2, 2);
            const Rational L1 = psi_line_corollary(ctx, d2, 1);
            const Rational P1 = points::psiP(ctx, d2, 1);
            total -= C(3L * d - 5, 3 * d1 - 1) * a * a * a * N1 * (b * L2 + P1);
            total += C(3L * d - 5, 3 * d1 - 2) * a * a * N1 * (b * b * L2 + Rational(2) * b * P1 - L1);
            total += C(3L * d - 5, 3 * d1 - 3) * a * N1 * (b * L1 + N2);
            // Printed with lower index 3d1 - 1; 3d1 - 3 is the index that matches the general recursion.
            correction += C(3L * d - 5, 3 * d1 - 3) * b * (a - b) * N1 * N2;
        }
        return total + Rational(3, 2) * correction;
    }

    for (int d1 = 1; d1 < d; ++d1) {
        const int d2 = d - d1;
        const Rational a(d1), b(d2), N1 = N(d1);
        const Rational L3 = psi_line_corollary(ctx, d2, 3);
        const Rational L2 = psi_line_corollary(ctx, d2, 2);
        const Rational P2 = points::psiP(ctx, d2, 2);
        const Rational P1 = points::psiP(ctx, d2, 1);
        total -= C(3L * d - 6, 3 * d1 - 1) * a * a * a * N1 * (b * L3 + P2);
        total += C(3L * d - 6, 3 * d1 - 2) * a * a * N1 * (b * b * L3 + Rational(2) * b * P2 - L2);
        total += C(3L * d - 6, 3 * d1 - 3) * a * N1 * (b * L2 + P1);
        // Two vertical strings, weights 2 (degree d1) and 1 (degree d2), split by which one holds P_1.
        // The printed version uses the unweighted factor d2 (d1 - d2) for both cases.
        total += half *
                 (C(3L * d - 6, 3 * d1 - 3) * a * (Rational(2) * b - a) +
                  C(3L * d - 6, 3 * d1 - 4) * b * (a - Rational(2) * b)) *
                 floors::N_tilde(ctx, d1, 2) * N(d2);
    }
    total += half * (dd - 1) * (floors::N_w(ctx, d - 1, 2) + Rational(3) * N(d - 1));
    for (int d1 = 1; d1 < d - 1; ++d1) {
        const int d2 = d - 1 - d1;
        const Rational a(d1), b(d2);
        total += half * C(3L * d - 6, 3 * d1 - 2) * a * b * N(d1) * N(d2) * (a * (b + 1) - b * b);
    }
    return total;
}

Rational psi_line_explicit(Context& ctx, int d, int k) {
    check_degree(d);
    if (k == 1) return Rational(2) * floors::N(ctx, d) + floors::N_w(ctx, d, 2);
    if (k != 2) throw DomainError("closed formulas exist for k = 1, 2 only");

    const auto box = special_value(ctx, SpecialDegree::box(d));
    if (!box) throw InsufficientDataError({InvariantKey::special(SpecialDegree::box(d)).str()});
    Rational sum = 0;
    for (int d1 = 1; d1 < d; ++d1) {
        const int d2 = d - d1;
        sum += C(3L * d - 3, 3 * d1 - 1) * Rational(d1) * floors::N(ctx, d1) * floors::N(ctx, d2);
    }
    return Rational(3) * box->value + Rational(1, 2) * floors::N_w(ctx, d, 3) + Rational(1, 2) * sum;
}

Rational psi_line_line(Context& ctx, int d) {
    check_degree(d);
    if (d == 1) return ctx.options().seeds.psi_line_line_degree1;
    return ctx.cache().get_or_compute(InvariantKey::psi_ll(d), [&] {
        const long n = 3L * d - 4;
        Rational total = 0;
        for (int d1 = 1; d1 < d; ++d1) {
            const int d2 = d - d1;
            const Rational a(d1), b(d2);
            const Rational N1 = floors::N(ctx, d1), N2 = floors::N(ctx, d2);
            const Rational L1 = psi_line(ctx, d1, 1), L2 = psi_line(ctx, d2, 1);
            const Rational LL2 = psi_line_line(ctx, d2);
            const Rational divisor2 = b * L2 + N2;

            total -= C(n, 3 * d1 - 1) * a * a * a * N1 * (b * LL2 + Rational(2) * L2);
            total -= Rational(2) * C(n, 3 * d1 - 2) * a * a * N1 * divisor2;
            total += C(n, 3 * d1 - 2) * a * b * (a * L1 + N1) * divisor2;
            total += Rational(2) * C(n, 3 * d1 - 1) * a * a * N1 * divisor2;
            total += Rational(2) * C(n, 3 * d1 - 2) * a * b * N1 * divisor2;
            total += C(n, 3 * d1 - 2) * a * b * N1 * N2;
        }
        const Rational dm1(d - 1);
        return total - Rational(3) * dm1 * dm1 * dm1 * floors::N(ctx, d - 1);
    });
}

Rational two_lines_explicit(Context& ctx, int d) {
    if (d < 2) throw DomainError("d must be >= 2 (got " + std::to_string(d) + ")");
    const auto minus_2e = special_value(ctx, SpecialDegree::minus_ke(d, 2));
    const auto minus_e_rel2 = special_value(ctx, SpecialDegree::minus_e_rel2(d));
    const auto box = special_value(ctx, SpecialDegree::box(d));
    std::vector<std::string> missing;
    if (!minus_2e) missing.push_back(InvariantKey::special(SpecialDegree::minus_ke(d, 2)).str());
    if (!minus_e_rel2) missing.push_back(InvariantKey::special(SpecialDegree::minus_e_rel2(d)).str());
    if (!box) missing.push_back(InvariantKey::special(SpecialDegree::box(d)).str());
    if (!missing.empty()) throw InsufficientDataError(std::move(missing));

    Rational sum = 0;
    for (int d1 = 1; d1 < d; ++d1) {
        sum += C(3L * d - 3, 3 * d1 - 1) * Rational(d1) * floors::N(ctx, d1) * floors::N(ctx, d - d1);
    }
    return Rational(4) * minus_2e->value + Rational(2) * floors::N_two_twos(ctx, d) +
           Rational(4) * minus_e_rel2->value + Rational(2) * floors::N(ctx, d) + Rational(10) * box->value +
           Rational(3) * floors::N_w(ctx, d, 3) + sum + Rational(2) * points::psiP(ctx, d, 1);
}

Rational line_psi_line(Context& ctx, int d, int k) {
    check_degree(d);
    if (k < 0) throw DomainError("k must be >= 0");
    return Rational(d) * psi_line(ctx, d, k) + point_term(ctx, d, k - 1);
}

Rational curve_insertion_count(Context& ctx, int d, int m) {
    check_degree(d);
    if (m < 0) throw DomainError("m must be >= 0");
    return floors::N(ctx, d) * Rational(power(d, static_cast<unsigned long>(m)));
}

}  // namespace tropdesc::lines
