#include <doctest.h>

#include "tropdesc/aux_tables.hpp"
#include "tropdesc/errors.hpp"
#include "tropdesc/provider.hpp"

using namespace tropdesc;

namespace {

Context no_oracle() {
    ContextOptions o;
    o.use_oracle = false;
    return Context(o);
}

}  // namespace

TEST_CASE("table lookups") {
    CHECK(aux::lookup(InvariantKey::special(SpecialDegree::minus_e_rel2(3))) == Rational(16));
    CHECK(aux::lookup(InvariantKey::special(SpecialDegree::box(2))) == Rational(1));
    CHECK(aux::lookup(InvariantKey::special(SpecialDegree::minus_ke(2, 2))) == Rational(0));
    CHECK(aux::lookup(InvariantKey::special(SpecialDegree::box(3))) == Rational(10));
    CHECK_FALSE(aux::lookup(InvariantKey::special(SpecialDegree::box(7))).has_value());
    CHECK_FALSE(aux::lookup(InvariantKey::n(3)).has_value());
    for (const auto& row : aux::entries()) {
        CHECK_FALSE(row.citation.empty());
        // Degrees that reduce to N(d) never appear in the table.
        if (row.degree.tag == SpecialTag::LineMinusKE) CHECK(row.degree.k1 >= 2);
        if (row.degree.tag == SpecialTag::LineMinusE1E2) CHECK(row.degree.k1 + row.degree.k2 >= 3);
    }
}

TEST_CASE("provider answers") {
    Context ctx = no_oracle();
    const auto box3 = provider_lookup(ctx, InvariantKey::parse("special(Box,d=3)"));
    REQUIRE(box3);
    CHECK(box3->value == 10);
    CHECK(box3->provenance == Provenance::Table);
    CHECK_FALSE(provider_lookup(ctx, InvariantKey::parse("special(Box,d=7)")).has_value());
    CHECK(provider_lookup(ctx, InvariantKey::parse("rel(d=2,a=[],b=[2])"))->value == 2);
    CHECK(provider_lookup(ctx, InvariantKey::parse("N(d=3)"))->provenance == Provenance::Computed);
    CHECK(provider_lookup(ctx, InvariantKey::parse("psiL(d=3,k=2)"))->value == 54);
    CHECK(provider_lookup(ctx, InvariantKey::parse("psiLL(d=3)"))->value == 302);
    CHECK(provider_lookup(ctx, InvariantKey::parse("psiP(d=3,k=1)"))->value == 10);
    CHECK(provider_lookup(ctx, InvariantKey::parse("corr(d=2,[T2:0,T2:0,T2:0,T2:1])"))->value == 1);
    CHECK_FALSE(provider_lookup(ctx, InvariantKey::parse("psiL(d=0,k=1)")).has_value());
    CHECK_FALSE(provider_lookup(ctx, InvariantKey::parse("rel(d=3,a=[],b=[2,2])")).has_value());
}

TEST_CASE("blow-up degrees that reduce to the plain count") {
    Context ctx = no_oracle();
    for (int d = 1; d <= 4; ++d) {
        for (const auto& s : {SpecialDegree::minus_ke(d, 0), SpecialDegree::minus_ke(d, 1)}) {
            const auto v = special_value(ctx, s);
            REQUIRE(v);
            CHECK(v->value == compute(ctx, InvariantKey::n(d)).value);
            CHECK(v->provenance == Provenance::Computed);
        }
    }
    CHECK(special_value(ctx, SpecialDegree::minus_e1e2(3, 1, 1))->value == 12);
    CHECK(special_value(ctx, SpecialDegree::minus_e1e2(3, 1, 2))->value == 1);
    CHECK(special_value(ctx, SpecialDegree::box(1))->value == 0);
    CHECK_THROWS_AS(special_value(ctx, SpecialDegree::minus_ke(2, 3)), DomainError);
}

TEST_CASE("compute reports missing data by key") {
    Context ctx = no_oracle();
    try {
        compute(ctx, InvariantKey::parse("special(Box,d=7)"));
        FAIL("expected InsufficientDataError");
    } catch (const InsufficientDataError& e) {
        CHECK(e.missing_keys() == std::vector<std::string>{"special(Box,d=7)"});
    }
    CHECK_THROWS_AS(compute(ctx, InvariantKey::parse("psiL(d=0,k=1)")), DomainError);
}

TEST_CASE("provenance names") {
    CHECK(to_string(Provenance::Computed) == "computed");
    CHECK(to_string(Provenance::Table) == "table");
    CHECK(to_string(Provenance::Oracle) == "oracle");
}
