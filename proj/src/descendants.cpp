#include "tropdesc/descendants.hpp"

#include <algorithm>
#include <map>

#include "tropdesc/combinatorics.hpp"
#include "tropdesc/errors.hpp"
#include "tropdesc/floor_count.hpp"

namespace tropdesc::points {

namespace {

bool dimension_matches(const Correlator& c) {
    long total = 0;
    for (const auto& ins : c.insertions) total += ins.psi + ins.codim();
    return total == 3L * c.d + static_cast<long>(c.insertions.size()) - 1;
}

Correlator without(const Correlator& c, std::size_t index) {
    Correlator r = c;
    r.insertions.erase(r.insertions.begin() + static_cast<std::ptrdiff_t>(index));
    return r;
}

std::ptrdiff_t find(const Correlator& c, Insertion target) {
    auto it = std::find(c.insertions.begin(), c.insertions.end(), target);
    return it == c.insertions.end() ? -1 : it - c.insertions.begin();
}

Rational degree_zero(const Correlator& c) {
    const auto n = static_cast<long>(c.insertions.size());
    if (n < 3) return 0;
    long psi_sum = 0, codim_sum = 0;
    std::vector<long> psis;
    for (const auto& ins : c.insertions) {
        psi_sum += ins.psi;
        codim_sum += ins.codim();
        psis.push_back(ins.psi);
    }
    if (psi_sum != n - 3 || codim_sum != 2) return 0;
    return Rational(multinomial(n - 3, psis));
}

// Sum over j of the correlator with insertion j replaced by (psi_j - 1, class_j + raise).
// Insertions with psi 0, or whose class would exceed the point class, contribute nothing.
Rational lowered_sum(Context& ctx, const Correlator& c, int raise) {
    Rational total = 0;
    for (std::size_t j = 0; j < c.insertions.size(); ++j) {
        const auto& ins = c.insertions[j];
        if (ins.psi < 1 || ins.codim() + raise > 2) continue;
        Correlator next = c;
        next.insertions[j] = Insertion{ins.psi - 1, static_cast<Codim>(ins.codim() + raise)};
        total += descendant(ctx, next);
    }
    return total;
}

std::size_t first_descendant(const Correlator& c) {
    for (std::size_t i = 0; i < c.insertions.size(); ++i)
        if (c.insertions[i].psi >= 1) return i;
    return c.insertions.size();
}

Rational evaluate_without_divisor(Context& ctx, const Correlator& c);

// Removing a line insertion with the divisor equation runs the wrong way when
// fewer than three insertions remain for the recursion relation; instead add a
// line insertion and solve the divisor equation for the original correlator.
Rational lift(Context& ctx, const Correlator& c) {
    Correlator lifted = c;
    lifted.insertions.insert(lifted.insertions.begin(), Insertion{0, Codim::T1});
    const Rational with_line = evaluate_without_divisor(ctx, lifted.canonical());
    return (with_line - lowered_sum(ctx, c, 1)) / Rational(c.d);
}

Rational evaluate_without_divisor(Context& ctx, const Correlator& c) {
    if (c.insertions.size() >= 3) {
        const std::size_t first = first_descendant(c);
        std::vector<std::size_t> others;
        for (std::size_t i = 0; i < c.insertions.size() && others.size() < 2; ++i)
            if (i != first) others.push_back(i);
        return descendant_trr(ctx, c, first, others[0], others[1]);
    }
    return lift(ctx, c);
}

Rational evaluate(Context& ctx, const Correlator& c) {
    const auto n = static_cast<long>(c.insertions.size());
    if (c.d == 0) return degree_zero(c);

    if (auto i = find(c, {0, Codim::T0}); i >= 0) return lowered_sum(ctx, without(c, i), 0);
    if (auto i = find(c, {1, Codim::T0}); i >= 0) return Rational(n - 3) * descendant(ctx, without(c, i));
    if (auto i = find(c, {0, Codim::T1}); i >= 0) {
        const Correlator rest = without(c, i);
        return Rational(c.d) * descendant(ctx, rest) + lowered_sum(ctx, rest, 1);
    }

    const bool all_points = std::all_of(c.insertions.begin(), c.insertions.end(),
                                        [](const Insertion& ins) { return ins == Insertion{0, Codim::T2}; });
    if (all_points) return floors::N(ctx, c.d);
    return evaluate_without_divisor(ctx, c);
}

}  // namespace

Rational descendant(Context& ctx, const Correlator& raw) {
    if (raw.d < 0) return 0;
    const Correlator c = raw.canonical();
    if (!dimension_matches(c)) return 0;
    return ctx.cache().get_or_compute(InvariantKey::correlator(c), [&] { return evaluate(ctx, c); });
}

Rational descendant_trr(Context& ctx, const Correlator& raw, std::size_t first, std::size_t second, std::size_t third) {
    const Correlator c = raw.canonical();
    const auto n = c.insertions.size();
    if (first >= n || second >= n || third >= n || first == second || first == third || second == third)
        throw DomainError("recursion relation needs three distinct insertions");
    const Insertion head = c.insertions[first];
    if (head.psi < 1) throw DomainError("recursion relation needs a descendant insertion");
    if (!dimension_matches(c)) return 0;

    // Remaining insertions grouped by type so that identical ones are split with binomials.
    std::map<Insertion, int> groups;
    for (std::size_t i = 0; i < n; ++i)
        if (i != first && i != second && i != third) ++groups[c.insertions[i]];
    std::vector<std::pair<Insertion, int>> types(groups.begin(), groups.end());

    Rational total = 0;
    std::vector<int> take(types.size(), 0);
    auto split = [&](auto&& self, std::size_t t, BigInt ways) -> void {
        if (t < types.size()) {
            for (int m = 0; m <= types[t].second; ++m) {
                take[t] = m;
                self(self, t + 1, ways * binomial(types[t].second, m));
            }
            return;
        }
        Correlator left_base{0, {Insertion{head.psi - 1, head.cls}}};
        Correlator right_base{0, {c.insertions[second], c.insertions[third]}};
        std::size_t left_size = 0;
        for (std::size_t i = 0; i < types.size(); ++i) {
            left_base.insertions.insert(left_base.insertions.end(), take[i], types[i].first);
            right_base.insertions.insert(right_base.insertions.end(), types[i].second - take[i], types[i].first);
            left_size += take[i];
        }
        for (int d1 = 0; d1 <= c.d; ++d1) {
            if (d1 == 0 && left_size + 2 < 3) continue;
            for (int e = 0; e <= 2; ++e) {
                Correlator left = left_base;
                left.d = d1;
                left.insertions.push_back({0, static_cast<Codim>(e)});
                if (!dimension_matches(left)) continue;
                Correlator right = right_base;
                right.d = c.d - d1;
                right.insertions.push_back({0, static_cast<Codim>(2 - e)});
                if (!dimension_matches(right)) continue;
                const Rational l = descendant(ctx, left);
                if (l.is_zero()) continue;
                total += Rational(ways) * l * descendant(ctx, right);
            }
        }
    };
    split(split, 0, BigInt(1));
    return total;
}

Correlator point_correlator(int d, int k, int points) {
    Correlator c{d, {Insertion{k, Codim::T2}}};
    c.insertions.insert(c.insertions.end(), points, Insertion{0, Codim::T2});
    return c.canonical();
}

Rational psiP(Context& ctx, int d, int k) {
    if (d < 1) throw DomainError("d must be >= 1 (got " + std::to_string(d) + ")");
    if (k < 0 || 3 * d - 2 - k < 0) return 0;
    if (k == 0) return floors::N(ctx, d);
    return ctx.cache().get_or_compute(InvariantKey::psi_p(d, k),
                                      [&] { return descendant(ctx, point_correlator(d, k, 3 * d - 2 - k)); });
}

}  // namespace tropdesc::points
