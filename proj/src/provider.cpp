#include "tropdesc/provider.hpp"

#include "tropdesc/aux_tables.hpp"
#include "tropdesc/descendants.hpp"
#include "tropdesc/errors.hpp"
#include "tropdesc/floor_count.hpp"
#include "tropdesc/line_descendants.hpp"

#ifdef TROPDESC_HAS_POLYGON_ORACLE
#include "tropdesc/polygon_oracle.hpp"
#endif

namespace tropdesc {

namespace {

void check_special(const SpecialDegree& s) {
    auto fail = [&](const char* what) {
        throw DomainError(std::string(what) + " in " + InvariantKey::special(s).str());
    };
    if (s.d < 1) fail("d must be >= 1");
    switch (s.tag) {
        case SpecialTag::LineMinusKE:
            if (s.k1 < 0 || s.k1 > s.d) fail("k must satisfy 0 <= k <= d");
            break;
        case SpecialTag::LineMinusE1E2:
            if (s.k1 < 0 || s.k2 < 0 || s.k1 + s.k2 > s.d) fail("k1, k2 must be >= 0 with k1 + k2 <= d");
            break;
        case SpecialTag::Box:
        case SpecialTag::LineMinusERel2:
            break;
    }
}

// Degrees whose count equals N_d: at most one blow-up of multiplicity one per point.
bool reduces_to_plain(const SpecialDegree& s) {
    if (s.tag == SpecialTag::LineMinusKE) return s.k1 <= 1;
    if (s.tag == SpecialTag::LineMinusE1E2) return s.k1 <= 1 && s.k2 <= 1;
    return false;
}

}  // namespace

std::string_view to_string(Provenance p) {
    switch (p) {
        case Provenance::Computed: return "computed";
        case Provenance::Table: return "table";
        case Provenance::Oracle: return "oracle";
    }
    return "computed";
}

std::optional<Sourced> special_value(Context& ctx, const SpecialDegree& degree) {
    check_special(degree);
    if (reduces_to_plain(degree)) return Sourced{floors::N(ctx, degree.d), Provenance::Computed};
    if (degree.tag == SpecialTag::Box && degree.d < 2) return Sourced{Rational(0), Provenance::Computed};

    SpecialDegree mirrored = degree;
    if (degree.tag == SpecialTag::LineMinusE1E2) std::swap(mirrored.k1, mirrored.k2);
    for (const auto& s : {degree, mirrored}) {
        if (auto v = aux::lookup(InvariantKey::special(s))) return Sourced{*v, Provenance::Table};
    }

#ifdef TROPDESC_HAS_POLYGON_ORACLE
    if (ctx.options().use_oracle && degree.tag != SpecialTag::LineMinusERel2 && oracle::calibrated()) {
        const auto key = InvariantKey::special(degree);
        const Rational v = ctx.cache().get_or_compute(
            key, [&] { return oracle::count_genus0(oracle::polygon_for_degree(degree)); });
        return Sourced{v, Provenance::Oracle};
    }
#endif
    return std::nullopt;
}

Sourced compute(Context& ctx, const InvariantKey& key) {
    return std::visit(
        [&](const auto& k) -> Sourced {
            using T = std::decay_t<decltype(k)>;
            if constexpr (std::is_same_v<T, key::N>) {
                return {floors::N(ctx, k.d)};
            } else if constexpr (std::is_same_v<T, key::Rel>) {
                return {floors::relative_invariant(ctx, k.d, k.profile)};
            } else if constexpr (std::is_same_v<T, key::Special>) {
                auto v = special_value(ctx, k.degree);
                if (!v) throw InsufficientDataError({key.str()});
                return *v;
            } else if constexpr (std::is_same_v<T, key::PsiP>) {
                return {points::psiP(ctx, k.d, k.k)};
            } else if constexpr (std::is_same_v<T, key::PsiL>) {
                return {lines::psi_line(ctx, k.d, k.k)};
            } else if constexpr (std::is_same_v<T, key::PsiLL>) {
                return {lines::psi_line_line(ctx, k.d)};
            } else {
                return {points::descendant(ctx, k.correlator)};
            }
        },
        key.value());
}

std::optional<Sourced> provider_lookup(Context& ctx, const InvariantKey& key) {
    try {
        return compute(ctx, key);
    } catch (const Error&) {
        return std::nullopt;
    }
}

}  // namespace tropdesc
