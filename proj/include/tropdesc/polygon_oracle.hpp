#pragma once

#include <compare>
#include <vector>

#include "tropdesc/invariant_key.hpp"
#include "tropdesc/rational.hpp"

/// Genus-0 curve counts for convex lattice polygons by counting lattice paths.
namespace tropdesc::oracle {

struct LatticePoint {
    long x = 0;
    long y = 0;
    auto operator<=>(const LatticePoint&) const = default;
};

/// Convex lattice polygon, vertices clockwise, no collinear vertices, translated so
/// that the minimal x and y coordinates are 0.
struct LatticePolygon {
    std::vector<LatticePoint> vertices;

    /// Normalizes an arbitrary cyclic list of vertices of a convex polygon.
    static LatticePolygon from_vertices(std::vector<LatticePoint> points);

    bool contains(const LatticePoint& p) const;
    /// Twice the area.
    long double_area() const;
    /// Lattice points on the boundary in clockwise order, starting at vertices[0].
    std::vector<LatticePoint> boundary_points() const;
    std::vector<LatticePoint> lattice_points() const;

    bool operator==(const LatticePolygon&) const = default;
};

/// A path through lattice points, strictly increasing in lexicographic order.
using LatticePath = std::vector<LatticePoint>;

/// An end direction of a tropical curve with its multiplicity.
struct EndDirection {
    long x = 0;
    long y = 0;
    int count = 1;
};

/// Dual polygon: end directions rotated by -90 degrees, ordered clockwise starting
/// from the direction (1,-1), then concatenated. Throws DomainError if they do not close.
LatticePolygon polygon_from_directions(const std::vector<EndDirection>& ends);

LatticePolygon triangle(int d);

/// Polygon of a special degree; dL - E with a weight-2 end is not a polygon count
/// and is rejected with DomainError, as are invalid parameters.
LatticePolygon polygon_for_degree(const SpecialDegree& degree);

/// Image of the polygon under (x,y) -> (a x + b y, c x + e y); requires a e - b c = +-1.
LatticePolygon transform(const LatticePolygon& p, long a, long b, long c, long e);

/// All lexicographically increasing paths from the smallest to the largest lattice
/// point with (#boundary points - 1) steps.
std::vector<LatticePath> genus0_paths(const LatticePolygon& p);

/// Number of irreducible rational curves dual to the polygon through the matching
/// number of generic points, counted with multiplicity. Degenerate polygons give 0.
Rational count_genus0(const LatticePolygon& p);

/// True when the path count reproduces the reference values: N_1..N_4 on triangles,
/// 10 for Box(3), 1 for 3L-2E and 1 for 2L-E. Computed once.
bool calibrated();

}  // namespace tropdesc::oracle
