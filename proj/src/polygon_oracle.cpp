#include "tropdesc/polygon_oracle.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "tropdesc/errors.hpp"
#include "tropdesc/floor_count.hpp"

namespace tropdesc::oracle {

namespace {

using Point = LatticePoint;

Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }

long cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }

// 0 for directions with clockwise angle from (1,0) in [0, 180), 1 otherwise.
int half(Point v) { return (v.y < 0 || (v.y == 0 && v.x > 0)) ? 0 : 1; }

bool clockwise_before(Point a, Point b) {
    if (half(a) != half(b)) return half(a) < half(b);
    return cross(a, b) < 0;
}

long gcd_length(Point v) { return std::gcd(std::abs(v.x), std::abs(v.y)); }

struct Segment {
    Point a, b;
    auto operator<=>(const Segment&) const = default;
};

Segment segment(Point a, Point b) { return a < b ? Segment{a, b} : Segment{b, a}; }

// One cell of the dual subdivision built up by the path surgery.
struct Piece {
    Point a, b, c;
    bool parallelogram = false;
    Point d{};  // fourth vertex: a + c - b
};

struct Branch {
    BigInt multiplicity;
    std::vector<Piece> pieces;
};

class SideCounter {
public:
    SideCounter(const LatticePolygon& p, LatticePath target, int sign)
        : polygon_(p), target_(std::move(target)), sign_(sign) {}

    std::vector<Branch> branches(const LatticePath& path) const {
        if (path == target_) return {Branch{1, {}}};
        std::size_t j = 0;
        for (std::size_t i = 1; i + 1 < path.size(); ++i) {
            if (sign_ * cross(path[i] - path[i - 1], path[i + 1] - path[i]) > 0) {
                j = i;
                break;
            }
        }
        if (j == 0) return {};

        const Point a = path[j - 1], b = path[j], c = path[j + 1];
        std::vector<Branch> out;

        LatticePath shortcut = path;
        shortcut.erase(shortcut.begin() + static_cast<long>(j));
        const BigInt area = std::abs(cross(b - a, c - b));
        for (auto& br : branches(shortcut)) {
            br.multiplicity *= area;
            br.pieces.push_back(Piece{a, b, c});
            out.push_back(std::move(br));
        }

        const Point reflected = a + c - b;
        if (a < reflected && reflected < c && polygon_.contains(reflected)) {
            LatticePath flipped = path;
            flipped[j] = reflected;
            for (auto& br : branches(flipped)) {
                br.pieces.push_back(Piece{a, b, c, true, reflected});
                out.push_back(std::move(br));
            }
        }
        return out;
    }

private:
    const LatticePolygon& polygon_;
    LatticePath target_;
    int sign_;
};

class SegmentClasses {
public:
    std::size_t id(const Segment& s) {
        auto [it, inserted] = ids_.emplace(s, parent_.size());
        if (inserted) parent_.push_back(parent_.size());
        return it->second;
    }
    std::size_t find(std::size_t i) {
        while (parent_[i] != i) i = parent_[i] = parent_[parent_[i]];
        return i;
    }
    void unite(const Segment& s, const Segment& t) { parent_[find(id(s))] = find(id(t)); }
    bool single_class() {
        if (parent_.empty()) return true;
        const std::size_t root = find(0);
        for (std::size_t i = 1; i < parent_.size(); ++i)
            if (find(i) != root) return false;
        return true;
    }

private:
    std::map<Segment, std::size_t> ids_;
    std::vector<std::size_t> parent_;
};

// A subdivision is dual to an irreducible curve when its edges are all linked:
// triangle sides meet at a vertex, opposite parallelogram sides are one edge.
bool irreducible(const std::vector<Piece>& upper, const std::vector<Piece>& lower) {
    SegmentClasses classes;
    for (const auto* list : {&upper, &lower}) {
        for (const auto& p : *list) {
            const Segment ab = segment(p.a, p.b), bc = segment(p.b, p.c);
            if (p.parallelogram) {
                classes.unite(ab, segment(p.c, p.d));
                classes.unite(bc, segment(p.d, p.a));
            } else {
                const Segment ca = segment(p.c, p.a);
                classes.unite(ab, bc);
                classes.unite(bc, ca);
            }
        }
    }
    return classes.single_class();
}

void extend_paths(const std::vector<Point>& inner, std::size_t from, std::size_t remaining, LatticePath& current,
                  const Point& last, std::vector<LatticePath>& out) {
    if (remaining == 0) {
        current.push_back(last);
        out.push_back(current);
        current.pop_back();
        return;
    }
    for (std::size_t i = from; i + remaining <= inner.size(); ++i) {
        current.push_back(inner[i]);
        extend_paths(inner, i + 1, remaining - 1, current, last, out);
        current.pop_back();
    }
}

}  // namespace

LatticePolygon LatticePolygon::from_vertices(std::vector<LatticePoint> points) {
    if (points.empty()) return {};
    long signed_area = 0;
    for (std::size_t i = 0; i < points.size(); ++i) signed_area += cross(points[i], points[(i + 1) % points.size()]);
    if (signed_area > 0) std::reverse(points.begin(), points.end());

    std::vector<Point> kept;
    for (std::size_t i = 0; i < points.size(); ++i) {
        const Point prev = points[(i + points.size() - 1) % points.size()];
        const Point next = points[(i + 1) % points.size()];
        if (points[i] == prev) continue;
        if (cross(points[i] - prev, next - points[i]) != 0) kept.push_back(points[i]);
    }
    if (kept.empty()) kept = points;

    long min_x = kept[0].x, min_y = kept[0].y;
    for (const auto& p : kept) {
        min_x = std::min(min_x, p.x);
        min_y = std::min(min_y, p.y);
    }
    for (auto& p : kept) p = {p.x - min_x, p.y - min_y};
    return LatticePolygon{std::move(kept)};
}

bool LatticePolygon::contains(const LatticePoint& p) const {
    const std::size_t n = vertices.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Point a = vertices[i], b = vertices[(i + 1) % n];
        if (cross(b - a, p - a) > 0) return false;
    }
    return true;
}

long LatticePolygon::double_area() const {
    long s = 0;
    for (std::size_t i = 0; i < vertices.size(); ++i) s += cross(vertices[i], vertices[(i + 1) % vertices.size()]);
    return std::abs(s);
}

std::vector<LatticePoint> LatticePolygon::boundary_points() const {
    std::vector<Point> out;
    const std::size_t n = vertices.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Point a = vertices[i], b = vertices[(i + 1) % n];
        const long steps = gcd_length(b - a);
        if (steps == 0) continue;
        const Point unit{(b.x - a.x) / steps, (b.y - a.y) / steps};
        for (long t = 0; t < steps; ++t) out.push_back({a.x + t * unit.x, a.y + t * unit.y});
    }
    return out;
}

std::vector<LatticePoint> LatticePolygon::lattice_points() const {
    std::vector<Point> out;
    if (vertices.empty()) return out;
    long max_x = 0, max_y = 0;
    for (const auto& v : vertices) {
        max_x = std::max(max_x, v.x);
        max_y = std::max(max_y, v.y);
    }
    for (long x = 0; x <= max_x; ++x)
        for (long y = 0; y <= max_y; ++y)
            if (contains({x, y})) out.push_back({x, y});
    return out;
}

LatticePolygon polygon_from_directions(const std::vector<EndDirection>& ends) {
    std::vector<Point> edges;
    for (const auto& e : ends) {
        if (e.count < 0) throw DomainError("negative end multiplicity");
        for (int i = 0; i < e.count; ++i) edges.push_back({e.y, -e.x});
    }
    Point total{0, 0};
    for (const auto& v : edges) total = total + v;
    if (total != Point{0, 0}) throw DomainError("end directions do not balance");

    const Point start{1, -1};
    auto key = [&](Point v) {
        // Rotate the cyclic order so that (1,-1) comes first.
        return !(clockwise_before(v, start)) ? 0 : 1;
    };
    std::stable_sort(edges.begin(), edges.end(), [&](Point a, Point b) {
        if (key(a) != key(b)) return key(a) < key(b);
        return clockwise_before(a, b);
    });

    std::vector<Point> vertices{{0, 0}};
    for (std::size_t i = 0; i + 1 < edges.size(); ++i) vertices.push_back(vertices.back() + edges[i]);
    return LatticePolygon::from_vertices(std::move(vertices));
}

LatticePolygon triangle(int d) {
    if (d < 1) throw DomainError("d must be >= 1 (got " + std::to_string(d) + ")");
    return polygon_from_directions({{0, -1, d}, {-1, 0, d}, {1, 1, d}});
}

LatticePolygon polygon_for_degree(const SpecialDegree& s) {
    if (s.d < 1) throw DomainError("d must be >= 1 (got " + std::to_string(s.d) + ")");
    switch (s.tag) {
        case SpecialTag::LineMinusKE:
            if (s.k1 < 0 || s.k1 > s.d) throw DomainError("k must satisfy 0 <= k <= d");
            return polygon_from_directions({{0, -1, s.d - s.k1}, {-1, 0, s.d - s.k1}, {-1, -1, s.k1}, {1, 1, s.d}});
        case SpecialTag::LineMinusE1E2:
            if (s.k1 < 0 || s.k2 < 0 || s.k1 + s.k2 > s.d)
                throw DomainError("k1, k2 must be >= 0 with k1 + k2 <= d");
            return polygon_from_directions({{0, -1, s.d - s.k1 - s.k2},
                                            {-1, 0, s.d - s.k1},
                                            {-1, -1, s.k1},
                                            {1, 0, s.k2},
                                            {1, 1, s.d - s.k2}});
        case SpecialTag::Box:
            if (s.d < 2) throw DomainError("Box needs d >= 2");
            return polygon_from_directions({{1, 1, s.d}, {0, -1, s.d - 1}, {-1, 0, s.d - 2}, {-2, -1, 1}});
        case SpecialTag::LineMinusERel2:
            break;
    }
    throw DomainError("no lattice polygon for " + InvariantKey::special(s).str());
}

LatticePolygon transform(const LatticePolygon& p, long a, long b, long c, long e) {
    if (std::abs(a * e - b * c) != 1) throw DomainError("transformation is not unimodular");
    std::vector<Point> image;
    for (const auto& v : p.vertices) image.push_back({a * v.x + b * v.y, c * v.x + e * v.y});
    return LatticePolygon::from_vertices(std::move(image));
}

std::vector<LatticePath> genus0_paths(const LatticePolygon& p) {
    auto points = p.lattice_points();
    std::sort(points.begin(), points.end());
    const long steps = static_cast<long>(p.boundary_points().size()) - 1;
    std::vector<LatticePath> out;
    if (points.size() < 2 || steps < 1) return out;
    const std::vector<Point> inner(points.begin() + 1, points.end() - 1);
    if (static_cast<std::size_t>(steps - 1) > inner.size()) return out;
    LatticePath current{points.front()};
    extend_paths(inner, 0, static_cast<std::size_t>(steps - 1), current, points.back(), out);
    return out;
}

Rational count_genus0(const LatticePolygon& p) {
    if (p.vertices.size() < 3 || p.double_area() == 0) return 0;

    const auto boundary = p.boundary_points();
    const Point first = *std::min_element(boundary.begin(), boundary.end());
    const Point last = *std::max_element(boundary.begin(), boundary.end());
    const auto start = std::find(boundary.begin(), boundary.end(), first) - boundary.begin();
    const auto n = static_cast<long>(boundary.size());

    LatticePath upper, lower;
    for (long i = 0;; ++i) {
        upper.push_back(boundary[static_cast<std::size_t>((start + i) % n)]);
        if (upper.back() == last) break;
    }
    for (long i = 0;; ++i) {
        lower.push_back(boundary[static_cast<std::size_t>(((start - i) % n + n) % n)]);
        if (lower.back() == last) break;
    }

    const SideCounter plus(p, upper, +1), minus(p, lower, -1);
    BigInt total = 0;
    for (const auto& path : genus0_paths(p)) {
        const auto ups = plus.branches(path);
        if (ups.empty()) continue;
        const auto downs = minus.branches(path);
        for (const auto& u : ups)
            for (const auto& l : downs)
                if (irreducible(u.pieces, l.pieces)) total += u.multiplicity * l.multiplicity;
    }
    return Rational(total);
}

bool calibrated() {
    static const bool ok = [] {
        for (int d = 1; d <= 4; ++d)
            if (count_genus0(triangle(d)) != floors::kontsevich_N(d)) return false;
        return count_genus0(polygon_for_degree(SpecialDegree::box(3))) == Rational(10) &&
               count_genus0(polygon_for_degree(SpecialDegree::minus_ke(3, 2))) == Rational(1) &&
               count_genus0(polygon_for_degree(SpecialDegree::minus_ke(2, 1))) == Rational(1);
    }();
    return ok;
}

}  // namespace tropdesc::oracle
