#include <doctest.h>

#include "tropdesc/errors.hpp"
#include "tropdesc/invariant_key.hpp"

using tropdesc::Codim;
using tropdesc::Correlator;
using tropdesc::InvariantKey;
using tropdesc::SpecialDegree;
using tropdesc::TangencyProfile;

TEST_CASE("keys print and parse back") {
    for (const char* s : {"N(d=3)", "rel(d=3,a=[2],b=[1])", "rel(d=3,a=[],b=[2,1])", "special(Box,d=3)",
                          "special(L-kE,d=3,k=2)", "special(L-k1E1-k2E2,d=3,k1=2,k2=1)", "special(L-E-rel2,d=3)",
                          "psiP(d=2,k=1)", "psiL(d=3,k=1)", "psiLL(d=3)", "corr(d=2,[T2:0,T2:0,T2:0,T2:1])",
                          "corr(d=0,[])"}) {
        CHECK(InvariantKey::parse(s).str() == s);
    }
}

TEST_CASE("keys are canonical") {
    CHECK(InvariantKey::parse("rel(d=4,a=[],b=[1,2,1])").str() == "rel(d=4,a=[],b=[2,1,1])");
    CHECK(InvariantKey::parse("rel(d=3,a=[],b=[1,1,1])").str() == "N(d=3)");
    CHECK(InvariantKey::parse("psiP(d=3,k=0)").str() == "N(d=3)");
    CHECK(InvariantKey::parse("corr(d=1,[T2:1,T0:0,T1:3])").str() == "corr(d=1,[T0:0,T1:3,T2:1])");

    const auto a = InvariantKey::rel(5, TangencyProfile{{}, {1, 3, 1}});
    const auto b = InvariantKey::rel(5, TangencyProfile{{}, {3, 1, 1}});
    CHECK(a == b);
    CHECK(InvariantKey::parse(a.str()) == a);
    CHECK(InvariantKey::parse(InvariantKey::parse(a.str()).str()).str() == a.str());

    Correlator c{2, {{1, Codim::T2}, {0, Codim::T1}, {0, Codim::T2}}};
    Correlator reversed{2, {{0, Codim::T2}, {0, Codim::T1}, {1, Codim::T2}}};
    CHECK(InvariantKey::correlator(c) == InvariantKey::correlator(reversed));
}

TEST_CASE("special keys") {
    CHECK(InvariantKey::special(SpecialDegree::box(3)).str() == "special(Box,d=3)");
    CHECK(InvariantKey::special(SpecialDegree::minus_ke(2, 2)).str() == "special(L-kE,d=2,k=2)");
    CHECK(InvariantKey::special(SpecialDegree::minus_e1e2(3, 2, 1)).str() == "special(L-k1E1-k2E2,d=3,k1=2,k2=1)");
}

TEST_CASE("malformed keys are rejected") {
    for (const char* s : {"", "N", "N()", "N(d=)", "N(d=3", "N(d=3))", "Q(d=1)", "psiL(d=3)", "psiL(k=1,d=3)",
                          "rel(d=3,a=[2,b=[1])", "special(Hex,d=3)", "corr(d=1,[T3:0])", "corr(d=1,[T1:-1])",
                          "12//5", "N(d=3) "}) {
        CAPTURE(s);
        CHECK_THROWS_AS(InvariantKey::parse(s), tropdesc::ParseError);
    }
}
