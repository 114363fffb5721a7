#include <doctest.h>

#include <algorithm>
#include <random>

#include "tropdesc/descendants.hpp"
#include "tropdesc/floor_count.hpp"

using namespace tropdesc;
using tropdesc::points::descendant;

namespace {

Correlator corr(const std::string& key) {
    return std::get<key::Corr>(InvariantKey::parse(key).value()).correlator;
}

Correlator points_only(int d, int n) { return Correlator{d, std::vector<Insertion>(n, Insertion{0, Codim::T2})}; }

}  // namespace

TEST_CASE("reference correlators") {
    Context ctx;
    CHECK(descendant(ctx, points_only(3, 8)) == 12);
    CHECK(descendant(ctx, corr("corr(d=0,[T0:0,T1:0,T1:0])")) == 1);
    CHECK(descendant(ctx, corr("corr(d=0,[T0:0,T0:0,T2:0])")) == 1);
    CHECK(descendant(ctx, corr("corr(d=0,[T0:0,T1:0,T2:0])")) == 0);
    CHECK(descendant(ctx, corr("corr(d=2,[T2:0,T2:0,T2:0,T2:1])")) == 1);
}

TEST_CASE("point descendants") {
    Context ctx;
    CHECK(points::psiP(ctx, 2, 1) == 1);
    CHECK(points::psiP(ctx, 3, 1) == 10);
    CHECK(points::psiP(ctx, 1, 1) == 1);
    CHECK(points::psiP(ctx, 3, 0) == 12);
    CHECK(points::psiP(ctx, 2, -1) == 0);
    for (int d = 1; d <= 4; ++d) CHECK(points::psiP(ctx, d, 3 * d - 1) == 0);
    // Top descendant of a point: 1/(d!)^3.
    CHECK(points::psiP(ctx, 1, 1) == Rational(1));
    CHECK(points::psiP(ctx, 2, 4) == Rational(1, 8));
    CHECK(points::psiP(ctx, 3, 7) == Rational(1, 216));
}

TEST_CASE("dimension gate") {
    Context ctx;
    CHECK(descendant(ctx, points_only(2, 4)) == 0);
    CHECK(descendant(ctx, corr("corr(d=1,[T2:0,T2:0,T2:0])")) == 0);
}

TEST_CASE("divisor consistency") {
    Context ctx;
    for (int d = 1; d <= 4; ++d) {
        Correlator c = points_only(d, 3 * d - 1);
        c.insertions.push_back({0, Codim::T1});
        CHECK(descendant(ctx, c) == Rational(d) * floors::N(ctx, d));
    }
}

TEST_CASE("string and dilaton equations") {
    Context ctx;
    const Correlator base = corr("corr(d=2,[T2:0,T2:0,T2:1,T2:2])");
    Correlator with_unit = base;
    with_unit.insertions.push_back({0, Codim::T0});
    Correlator lowered1 = corr("corr(d=2,[T2:0,T2:0,T2:0,T2:2])");
    Correlator lowered2 = corr("corr(d=2,[T2:0,T2:0,T2:1,T2:1])");
    CHECK(descendant(ctx, with_unit) == descendant(ctx, lowered1) + descendant(ctx, lowered2));

    Correlator with_dilaton = points_only(2, 5);
    with_dilaton.insertions.push_back({1, Codim::T0});
    CHECK(descendant(ctx, with_dilaton) == Rational(6 - 3) * floors::N(ctx, 2));
}

TEST_CASE("insertion order does not matter") {
    Context ctx;
    std::mt19937 rng(7);
    const Correlator c = corr("corr(d=2,[T1:0,T1:2,T2:0,T2:1,T2:1])");
    const Rational value = descendant(ctx, c);
    for (int i = 0; i < 20; ++i) {
        Correlator shuffled = c;
        std::shuffle(shuffled.insertions.begin(), shuffled.insertions.end(), rng);
        CHECK(descendant(ctx, shuffled) == value);
    }
}

TEST_CASE("every recursion-relation choice agrees") {
    Context ctx;
    for (const char* key : {"corr(d=2,[T1:0,T1:2,T2:0,T2:1,T2:1])", "corr(d=1,[T1:1,T2:0,T2:1])",
                            "corr(d=2,[T0:3,T2:0,T2:1,T2:2])", "corr(d=3,[T1:3,T2:0,T2:0,T2:0,T2:0,T2:0])"}) {
        CAPTURE(key);
        const Correlator c = corr(key).canonical();
        const Rational value = descendant(ctx, c);
        const auto n = c.insertions.size();
        for (std::size_t i = 0; i < n; ++i) {
            if (c.insertions[i].psi == 0) continue;
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t l = j + 1; l < n; ++l)
                    if (j != i && l != i) CHECK(points::descendant_trr(ctx, c, i, j, l) == value);
        }
    }
}
