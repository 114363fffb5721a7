#include "tropdesc/aux_tables.hpp"

#include <array>

namespace tropdesc::aux {

namespace {

const std::array<ConstantEntry, 7>& table() {
    static const std::array<ConstantEntry, 7> rows{{
        {SpecialDegree::minus_ke(2, 2), Rational(0), "two-line closed formula at d=2: 0+0+0+2, first term"},
        {SpecialDegree::minus_ke(3, 2), Rational(1), "blow-up counts for cubics: N_{3L-2E}=1"},
        {SpecialDegree::minus_e1e2(3, 2, 1), Rational(1), "blow-up counts for cubics: N_{3L-2E_1-E_2}=1"},
        {SpecialDegree::minus_e_rel2(2), Rational(0), "two-line closed formula at d=2: 0+0+0+2, third term"},
        {SpecialDegree::minus_e_rel2(3), Rational(16), "two-line closed formula at d=3: 4*16"},
        {SpecialDegree::box(2), Rational(1),
         "k=2 closed formula inverted at d=2: 9/2 = 3*N_Box(2) + 0 + 3/2"},
        {SpecialDegree::box(3), Rational(10), "two-line closed formula at d=3: 10*10"},
    }};
    return rows;
}

}  // namespace

std::span<const ConstantEntry> entries() { return table(); }

std::optional<Rational> lookup(const InvariantKey& key) {
    const auto* special = std::get_if<key::Special>(&key.value());
    if (!special) return std::nullopt;
    for (const auto& row : table()) {
        if (row.degree == special->degree) return row.value;
    }
    return std::nullopt;
}

}  // namespace tropdesc::aux
