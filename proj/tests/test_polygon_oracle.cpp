#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "tropdesc/context.hpp"

#ifdef TROPDESC_HAS_POLYGON_ORACLE

#include "tropdesc/errors.hpp"
#include "tropdesc/floor_count.hpp"
#include "tropdesc/polygon_oracle.hpp"
#include "tropdesc/provider.hpp"

using namespace tropdesc;
using namespace tropdesc::oracle;

namespace {

std::vector<LatticePoint> pts(std::initializer_list<std::pair<long, long>> list) {
    std::vector<LatticePoint> out;
    for (auto [x, y] : list) out.push_back({x, y});
    return out;
}

}  // namespace

TEST_CASE("dual polygons") {
    CHECK(triangle(3).vertices == pts({{0, 3}, {3, 0}, {0, 0}}));
    CHECK(polygon_for_degree(SpecialDegree::box(3)).vertices == pts({{0, 3}, {3, 0}, {1, 0}, {0, 2}}));
    CHECK_THROWS_AS(polygon_for_degree(SpecialDegree::minus_ke(2, 3)), DomainError);
    CHECK_THROWS_AS(polygon_for_degree(SpecialDegree::minus_e_rel2(3)), DomainError);
    CHECK_THROWS_AS(polygon_from_directions({{1, 0, 1}, {0, 1, 1}}), DomainError);
}

TEST_CASE("polygon invariants") {
    for (const auto& p : {triangle(4), polygon_for_degree(SpecialDegree::box(4)),
                          polygon_for_degree(SpecialDegree::minus_e1e2(4, 2, 1))}) {
        long boundary = 0;
        for (std::size_t i = 0; i < p.vertices.size(); ++i) {
            const auto a = p.vertices[i], b = p.vertices[(i + 1) % p.vertices.size()];
            boundary += std::gcd(std::abs(b.x - a.x), std::abs(b.y - a.y));
            const auto c = p.vertices[(i + 2) % p.vertices.size()];
            // Strictly clockwise turn at every vertex.
            CHECK((b.x - a.x) * (c.y - b.y) - (b.y - a.y) * (c.x - b.x) < 0);
        }
        CHECK(boundary == static_cast<long>(p.boundary_points().size()));
    }
}

TEST_CASE("paths") {
    const auto paths = genus0_paths(triangle(3));
    CHECK(paths.size() == 8);  // 7 of the 8 interior points
    for (const auto& path : paths) {
        CHECK(path.size() == 9);
        CHECK(std::is_sorted(path.begin(), path.end()));
    }
}

TEST_CASE("calibration anchors") {
    for (int d = 1; d <= 4; ++d) CHECK(count_genus0(triangle(d)) == floors::kontsevich_N(d));
    CHECK(count_genus0(polygon_for_degree(SpecialDegree::box(3))) == 10);
    CHECK(count_genus0(polygon_for_degree(SpecialDegree::minus_ke(3, 2))) == 1);
    CHECK(count_genus0(polygon_for_degree(SpecialDegree::minus_ke(2, 1))) == 1);
    CHECK(calibrated());
}

TEST_CASE("oracle agrees with the transcribed blow-up counts") {
    CHECK(count_genus0(polygon_for_degree(SpecialDegree::minus_ke(2, 2))) == 0);
    CHECK(count_genus0(polygon_for_degree(SpecialDegree::minus_e1e2(3, 2, 1))) == 1);
    CHECK(count_genus0(polygon_for_degree(SpecialDegree::minus_e1e2(3, 1, 1))) == 12);
    CHECK(count_genus0(polygon_for_degree(SpecialDegree::box(2))) == 1);
}

TEST_CASE("unimodular invariance") {
    const auto t = triangle(3);
    CHECK(count_genus0(transform(t, 1, 1, 0, 1)) == 12);
    CHECK(count_genus0(transform(t, 1, 0, 2, 1)) == 12);
    CHECK(count_genus0(transform(t, 0, 1, 1, 0)) == 12);
    const auto box = polygon_for_degree(SpecialDegree::box(3));
    CHECK(count_genus0(transform(box, 1, 3, 0, 1)) == 10);
    CHECK_THROWS_AS(transform(t, 2, 0, 0, 1), DomainError);
}

TEST_CASE("degenerate polygons count nothing") {
    CHECK(count_genus0(LatticePolygon::from_vertices(pts({{0, 0}, {2, 2}}))) == 0);
}

TEST_CASE("provider falls back to the oracle") {
    Context ctx;
    const auto v = special_value(ctx, SpecialDegree::box(4));
    REQUIRE(v);
    CHECK(v->provenance == Provenance::Oracle);
    CHECK(v->value == 428);
    const auto table = special_value(ctx, SpecialDegree::box(3));
    CHECK(table->provenance == Provenance::Table);
}

#else

TEST_CASE("oracle disabled at build time") { CHECK_FALSE(tropdesc::kPolygonOracleBuilt); }

#endif
