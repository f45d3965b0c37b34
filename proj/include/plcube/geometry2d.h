#pragma once

// Planar exact kernel used by the overlay, canonical form and fixed-set code.

#include <array>
#include <compare>
#include <string>
#include <vector>

#include "plcube/geometry.h"
#include "plcube/rational.h"

namespace plcube::plane {

struct Vec2 {
  Rational x;
  Rational y;

  friend Vec2 operator+(const Vec2& a, const Vec2& b) { return {a.x + b.x, a.y + b.y}; }
  friend Vec2 operator-(const Vec2& a, const Vec2& b) { return {a.x - b.x, a.y - b.y}; }
  friend Vec2 operator*(const Rational& s, const Vec2& a) { return {s * a.x, s * a.y}; }
  friend bool operator==(const Vec2&, const Vec2&) = default;
  friend std::strong_ordering operator<=>(const Vec2& a, const Vec2& b) {
    if (auto c = a.x <=> b.x; c != 0) return c;
    return a.y <=> b.y;
  }
};

Vec2 to_vec(const RatPoint& p);
RatPoint to_point(const Vec2& v);

inline Rational cross(const Vec2& a, const Vec2& b) { return a.x * b.y - a.y * b.x; }
inline Rational dot(const Vec2& a, const Vec2& b) { return a.x * b.x + a.y * b.y; }
// Sign of the turn a -> b -> c: +1 counterclockwise, -1 clockwise, 0 collinear.
int orient(const Vec2& a, const Vec2& b, const Vec2& c);

// x -> [[a b][c d]] x + (e, f)
struct Affine2 {
  Rational a, b, c, d, e, f;

  static Affine2 identity();
  static Affine2 from(const RatAffineMap& m);
  RatAffineMap to_map() const;
  Vec2 apply(const Vec2& p) const { return {a * p.x + b * p.y + e, c * p.x + d * p.y + f}; }
  Vec2 apply_linear(const Vec2& v) const { return {a * v.x + b * v.y, c * v.x + d * v.y}; }
  Rational det() const { return a * d - b * c; }
  Affine2 after(const Affine2& o) const;  // this o o
  Affine2 inverse() const;
  bool is_identity() const;
  friend bool operator==(const Affine2&, const Affine2&) = default;
  std::string key() const;
};

using Polygon = std::vector<Vec2>;

// Twice the signed area (shoelace).
Rational twice_area(const Polygon& p);

// Convex hull with collinear and duplicate points removed, counterclockwise,
// lexicographically least vertex first. Degenerate inputs give 1 or 2 points.
Polygon convex_hull(Polygon points);

// Closed intersection of a convex point set (given by its hull vertices, any
// dimension 0..2) with the closed half-plane left of the directed line a->b.
Polygon clip_halfplane(const Polygon& subject, const Vec2& a, const Vec2& b);

// Same, for the closed half-plane alpha x + beta y + gamma >= 0.
Polygon clip_affine(const Polygon& subject, const Rational& alpha, const Rational& beta, const Rational& gamma);

// Closed intersection of two convex sets given by vertex lists; result is the
// hull of the intersection (possibly a segment, a point or empty).
Polygon closed_intersection(const Polygon& p, const Polygon& q);

// Interior-overlap test for two counterclockwise convex polygons (separating
// axis over the edge lines).
bool interiors_overlap(const Polygon& p, const Polygon& q);

bool point_in_convex(const Polygon& ccw, const Vec2& x);  // closed

// Canonical key for the supporting line of a segment: a x + b y = c scaled so
// that the first nonzero of (a, b) equals 1.
struct LineKey {
  Rational a, b, c;
  friend bool operator==(const LineKey&, const LineKey&) = default;
  friend auto operator<=>(const LineKey& l, const LineKey& r) {
    if (auto x = l.a <=> r.a; x != 0) return x;
    if (auto x = l.b <=> r.b; x != 0) return x;
    return l.c <=> r.c;
  }
};
LineKey line_key(const Vec2& p, const Vec2& q);
// Positive direction of the line (b, -a) rotated so increasing parameter
// matches increasing x (or increasing y for vertical lines).
Vec2 line_direction(const LineKey& k);
// Scalar coordinate of a point on the line along line_direction.
Rational line_param(const LineKey& k, const Vec2& p);
// Inverse of line_param.
Vec2 line_point(const LineKey& k, const Rational& s);

struct BoundingBox {
  double xmin, ymin, xmax, ymax;
  bool overlaps(const BoundingBox& o) const {
    return xmin <= o.xmax && o.xmin <= xmax && ymin <= o.ymax && o.ymin <= ymax;
  }
};
BoundingBox bbox(const Polygon& p);

// Directed boundary segments of a union of interior-disjoint counterclockwise
// triangles. Each segment is maximal on its line, with the union on its left.
struct DirectedSegment {
  Vec2 from;
  Vec2 to;
};
std::vector<DirectedSegment> union_boundary(const std::vector<std::array<Vec2, 3>>& triangles);

// Canonical triangulation of a union of interior-disjoint triangles: vertical
// trapezoid decomposition of its boundary, each trapezoid split along the
// bottom-left to top-right diagonal. Depends only on the point set.
std::vector<std::array<Vec2, 3>> canonical_triangulation(const std::vector<std::array<Vec2, 3>>& triangles);

}  // namespace plcube::plane
