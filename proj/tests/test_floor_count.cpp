#include <doctest.h>

#include "tropdesc/errors.hpp"
#include "tropdesc/floor_count.hpp"

using namespace tropdesc;
using namespace tropdesc::floors;

namespace {

const FloorDiagram* find_diagram(const std::vector<FloorDiagram>& all, std::size_t edge_count_at_floor1) {
    for (const auto& D : all) {
        std::size_t at_one = 0;
        for (const auto& e : D.edges) at_one += e.lower == 1;
        if (at_one == edge_count_at_floor1) return &D;
    }
    return nullptr;
}

}  // namespace

TEST_CASE("diagrams for N_2") {
    const auto all = enumerate_floor_diagrams(2, TangencyProfile::free_ends({1, 1}));
    REQUIRE(all.size() == 1);
    const auto& D = all.front();
    REQUIRE(D.edges.size() == 1);
    CHECK(D.edges[0].weight == 1);
    CHECK(D.ends.size() == 2);
    for (const auto& e : D.ends) CHECK(e.floor == 1);
    CHECK(diagram_multiplicity(D) == 1);
    CHECK(count_markings(D) == 2);
    CHECK(automorphism_order(D) == 2);
}

TEST_CASE("diagrams with a single end of weight d") {
    const auto all = enumerate_floor_diagrams(3, TangencyProfile::free_ends({3}));
    REQUIRE(all.size() == 2);
    const auto* chain = find_diagram(all, 1);
    const auto* star = find_diagram(all, 2);
    REQUIRE(chain);
    REQUIRE(star);
    CHECK(diagram_multiplicity(*chain) == 12);
    CHECK(count_markings(*chain) == 1);
    BigInt total = 0;
    for (const auto& D : all) total += diagram_multiplicity(D) * count_markings(D) / automorphism_order(D);
    CHECK(total == 21);

    const auto twos = enumerate_floor_diagrams(2, TangencyProfile::free_ends({2}));
    REQUIRE(twos.size() == 1);
    CHECK(diagram_multiplicity(twos[0]) == 2);
    CHECK(count_markings(twos[0]) == 1);
}

TEST_CASE("the cubic star diagram") {
    const auto all = enumerate_floor_diagrams(3, TangencyProfile::free_ends({1, 1, 1}));
    BigInt total = 0;
    bool seen_star = false;
    for (const auto& D : all) {
        const BigInt part = diagram_multiplicity(D) * count_markings(D) / automorphism_order(D);
        total += part;
        bool star = D.edges.size() == 2 && D.ends.size() == 3;
        for (const auto& e : D.edges) star = star && e.lower == 1 && e.weight == 1;
        for (const auto& e : D.ends) star = star && e.floor == 1;
        if (star) {
            seen_star = true;
            CHECK(count_markings(D) == 18);
            CHECK(automorphism_order(D) == 6);
            CHECK(part == 3);
        }
    }
    CHECK(seen_star);
    CHECK(total == 12);
}

TEST_CASE("profile errors") {
    Context ctx;
    CHECK_THROWS_AS(enumerate_floor_diagrams(3, TangencyProfile::free_ends({2, 2})), ProfileError);
    CHECK_THROWS_AS(relative_invariant(ctx, 3, TangencyProfile{{1, 1}, {1}}), ProfileError);
    CHECK_THROWS_AS(relative_invariant(ctx, 2, TangencyProfile{{}, {0, 2}}), ProfileError);
    CHECK_THROWS_AS(N(ctx, 0), DomainError);
    CHECK_THROWS_AS(kontsevich_N(-1), DomainError);
}

TEST_CASE("point counts") {
    Context ctx;
    CHECK(N(ctx, 1) == 1);
    CHECK(N(ctx, 2) == 1);
    CHECK(N(ctx, 3) == 12);
    CHECK(N(ctx, 4) == 620);
    CHECK(kontsevich_N(2) == 1);
    CHECK(kontsevich_N(3) == 12);
    CHECK(kontsevich_N(5) == 87304);
    for (int d = 1; d <= 6; ++d) CHECK(N(ctx, d) == kontsevich_N(d));
}

TEST_CASE("relative counts") {
    Context ctx;
    CHECK(relative_invariant(ctx, 3, TangencyProfile::free_ends({1, 1, 1})) == 12);
    CHECK(relative_invariant(ctx, 3, TangencyProfile{{2}, {1}}) == 20);
    CHECK(relative_invariant(ctx, 3, TangencyProfile::free_ends({2, 1})) == 36);
    CHECK(relative_invariant(ctx, 3, TangencyProfile::free_ends({3})) == 21);

    CHECK(N_w(ctx, 2, 2) == 2);
    CHECK(N_w(ctx, 3, 1) == 36);
    CHECK(N_w(ctx, 1, 2) == 0);
    CHECK(N_tilde(ctx, 2, 2) == 2);
    CHECK(N_tilde(ctx, 3, 2) == 20);
    CHECK(N_tilde(ctx, 2, 1) == 1);
    CHECK(N_two_twos(ctx, 3) == 0);
}

TEST_CASE("single-end identities for d <= 5") {
    Context ctx;
    for (int d = 1; d <= 5; ++d) {
        CHECK(N_tilde(ctx, d, 1) == N(ctx, d));
        CHECK(N_w(ctx, d, 1) == Rational(d) * N(ctx, d));
    }
}

TEST_CASE("diagram structure: mark count, flows and integrality for d <= 5") {
    Context ctx;
    for (int d = 1; d <= 5; ++d) {
        std::vector<TangencyProfile> profiles;
        for (int w = 1; w <= d; ++w) {
            std::vector<int> rest(static_cast<std::size_t>(d - w), 1);
            std::vector<int> free_ends = rest;
            free_ends.push_back(w);
            profiles.push_back(TangencyProfile::free_ends(free_ends));
            profiles.push_back(TangencyProfile{{w}, rest}.canonical());
        }
        if (d >= 4) {
            std::vector<int> b(static_cast<std::size_t>(d - 4), 1);
            b.push_back(2);
            b.push_back(2);
            profiles.push_back(TangencyProfile::free_ends(b));
        }
        for (const auto& profile : profiles) {
            CAPTURE(d);
            int expected_marks = 3 * d - 1;
            for (int b : profile.beta) expected_marks -= b - 1;
            for (int a : profile.alpha) expected_marks -= a;

            for (const auto& D : enumerate_floor_diagrams(d, profile)) {
                CHECK(marking_poset_size(D) == expected_marks);
                for (const auto& e : D.edges) {
                    CHECK(e.weight >= 1);
                    CHECK(e.lower < e.upper);
                }
                // Divergence one at every floor.
                for (int f = 1; f <= d; ++f) {
                    int div = 0;
                    for (const auto& e : D.edges) {
                        if (e.upper == f) div += e.weight;
                        if (e.lower == f) div -= e.weight;
                    }
                    for (const auto& end : D.ends)
                        if (end.floor == f) div += end.weight;
                    CHECK(div == 1);
                }
            }
            const Rational v = relative_invariant(ctx, d, profile);
            CHECK(v.is_integer());
            CHECK(v >= Rational(0));
        }
    }
}
