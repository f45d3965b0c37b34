#include <random>

#include "doctest.h"
#include "plcube/errors.h"
#include "plcube/geometry.h"
#include "plcube/geometry2d.h"

using namespace plcube;
using plane::Vec2;

namespace {

RatPoint pt(Rational x, Rational y) { return RatPoint{std::move(x), std::move(y)}; }

Rational shoelace(const std::vector<RatPoint>& v) {
  // Independent area oracle: half the absolute shoelace sum.
  Rational s(0);
  for (std::size_t i = 0; i < v.size(); ++i) {
    const auto& p = v[i];
    const auto& q = v[(i + 1) % v.size()];
    s += p[0] * q[1] - p[1] * q[0];
  }
  return abs(s) / Rational(2);
}

}  // namespace

TEST_CASE("rational basics") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(3, -6).str() == "-1/2");
  CHECK(Rational::parse("6/8") == Rational(3, 4));
  CHECK(Rational::parse("-7") == Rational(-7));
  CHECK_THROWS_AS(Rational::parse("1/0"), Error);
  CHECK_THROWS_AS(Rational::parse("x"), ParseError);
  CHECK(floor_div(Rational(-7, 2), Rational(1)) == Rational(-4));
  CHECK(pow(Rational(2, 3), 3) == Rational(8, 27));
}

TEST_CASE("simplex_volume") {
  CHECK(simplex_volume(Simplex({RatPoint{-1}, RatPoint{1}})) == Rational(2));
  CHECK(simplex_volume(Simplex({pt(0, 0), pt(1, 0), pt(0, 1)})) == Rational(1, 2));
  CHECK_THROWS_AS(simplex_volume(Simplex({pt(0, 0), pt(1, 0), pt(1, 0)})), DegenerateError);
  Simplex cw({pt(0, 0), pt(0, 1), pt(1, 0)});
  CHECK(cw.orientation() == -1);
  CHECK(simplex_volume(cw) == Rational(1, 2));
}

TEST_CASE("convex_intersect") {
  auto r = convex_intersect(ConvexPolytope::interval(0, 2), ConvexPolytope::interval(1, 3));
  REQUIRE(r);
  CHECK(*r == ConvexPolytope::interval(1, 2));
  CHECK_FALSE(convex_intersect(ConvexPolytope::interval(0, 1), ConvexPolytope::interval(1, 3)));

  auto sq = ConvexPolytope::polygon({pt(0, 0), pt(1, 0), pt(1, 1), pt(0, 1)});
  auto self = convex_intersect(sq, sq);
  REQUIRE(self);
  CHECK(*self == sq);

  auto big = ConvexPolytope::polygon({pt(0, 0), pt(2, 0), pt(2, 2), pt(0, 2)});
  auto tri = ConvexPolytope::polygon({pt(1, 1), pt(3, 1), pt(1, 3)});
  auto q = convex_intersect(big, tri);
  REQUIRE(q);
  CHECK(q->vertices == std::vector<RatPoint>{pt(1, 1), pt(2, 1), pt(2, 2), pt(1, 2)});

  auto touching = ConvexPolytope::polygon({pt(1, 0), pt(2, 0), pt(2, 1), pt(1, 1)});
  CHECK_FALSE(convex_intersect(sq, touching));
  CHECK_THROWS_AS(convex_intersect(sq, ConvexPolytope::interval(0, 1)), DimensionError);
}

TEST_CASE("clipping conserves area on random polygons") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> coord(-16, 16);
  for (int trial = 0; trial < 200; ++trial) {
    plane::Polygon a, b;
    for (int i = 0; i < 6; ++i) a.push_back({Rational(coord(rng), 8), Rational(coord(rng), 8)});
    for (int i = 0; i < 5; ++i) b.push_back({Rational(coord(rng), 8), Rational(coord(rng), 8)});
    a = plane::convex_hull(a);
    b = plane::convex_hull(b);
    if (a.size() < 3 || b.size() < 3) continue;
    // Pieces of a outside b: peel off one edge half-plane at a time.
    Rational outside(0);
    plane::Polygon rest = a;
    for (std::size_t i = 0; i < b.size() && rest.size() >= 3; ++i) {
      const Vec2& p = b[i];
      const Vec2& q = b[(i + 1) % b.size()];
      auto out = plane::clip_halfplane(rest, q, p);
      if (out.size() >= 3) outside += abs(plane::twice_area(out));
      rest = plane::clip_halfplane(rest, p, q);
    }
    Rational inside(0);
    auto inter = plane::closed_intersection(a, b);
    if (inter.size() >= 3) inside = abs(plane::twice_area(inter));
    CHECK(inside + outside == abs(plane::twice_area(a)));
    CHECK(plane::interiors_overlap(a, b) == !inside.is_zero());
  }
}

TEST_CASE("fan_triangulate") {
  auto tri = ConvexPolytope::polygon({pt(0, 0), pt(1, 0), pt(0, 1)});
  CHECK(fan_triangulate(tri).size() == 1);
  auto quad = ConvexPolytope::polygon({pt(0, 0), pt(1, 0), pt(1, 1), pt(0, 1)});
  auto two = fan_triangulate(quad);
  REQUIRE(two.size() == 2);
  CHECK(two[0][2] == two[1][1]);
  std::vector<RatPoint> hex{pt(1, 0), pt(Rational(1, 2), 1), pt(Rational(-1, 2), 1),
                            pt(-1, 0), pt(Rational(-1, 2), -1), pt(Rational(1, 2), -1)};
  auto cells = fan_triangulate(ConvexPolytope::polygon(hex));
  CHECK(cells.size() == 4);
  Rational total(0);
  for (const auto& c : cells) {
    CHECK(c.orientation() == 1);
    total += simplex_volume(c);
  }
  CHECK(total == shoelace(hex));
  CHECK_THROWS_AS(fan_triangulate(ConvexPolytope{2, {pt(0, 0), pt(1, 1), pt(2, 2)}}), DegenerateError);
}

TEST_CASE("point_locate") {
  std::vector<Simplex> cells{Simplex({pt(0, 0), pt(1, 0), pt(1, 1)}), Simplex({pt(0, 0), pt(1, 1), pt(0, 1)})};
  CHECK(point_locate(cells, pt(Rational(1, 4), Rational(1, 8))) == 0);
  CHECK(point_locate(cells, pt(Rational(1, 8), Rational(1, 4))) == 1);
  CHECK(point_locate(cells, pt(Rational(1, 2), Rational(1, 2))) == 0);
  CHECK_THROWS_AS(point_locate(cells, pt(5, 5)), NotFoundError);
}

TEST_CASE("affine maps") {
  std::vector<RatPoint> src{pt(0, 0), pt(1, 0), pt(0, 1)};
  std::vector<RatPoint> dst{pt(1, 1), pt(2, 1), pt(2, 2)};
  auto m = RatAffineMap::from_vertices(src, dst);
  CHECK(m.linear == RatMatrix{{1, 1}, {0, 1}});
  CHECK(m.apply(pt(0, 1)) == pt(2, 2));
  CHECK(m.after(m.inverse()).is_identity());
  RatMatrix a{{2, 1, 0}, {0, 1, 3}, {1, 0, 1}};
  CHECK(a.det() == Rational(5));
  CHECK((a * a.inverse()).is_identity());
}

TEST_CASE("canonical triangulation depends only on the union") {
  // Unit square cut two different ways.
  std::vector<std::array<Vec2, 3>> d1{{Vec2{0, 0}, Vec2{1, 0}, Vec2{1, 1}}, {Vec2{0, 0}, Vec2{1, 1}, Vec2{0, 1}}};
  std::vector<std::array<Vec2, 3>> d2{{Vec2{0, 0}, Vec2{1, 0}, Vec2{0, 1}}, {Vec2{1, 0}, Vec2{1, 1}, Vec2{0, 1}}};
  auto c1 = plane::canonical_triangulation(d1);
  auto c2 = plane::canonical_triangulation(d2);
  CHECK(c1 == c2);
  CHECK(c1.size() == 2);
  // L-shaped region made of three squares; non-convex, with a T-junction.
  std::vector<std::array<Vec2, 3>> l{
      {Vec2{0, 0}, Vec2{2, 0}, Vec2{2, 1}}, {Vec2{0, 0}, Vec2{2, 1}, Vec2{0, 1}},
      {Vec2{0, 1}, Vec2{1, 1}, Vec2{1, 2}}, {Vec2{0, 1}, Vec2{1, 2}, Vec2{0, 2}}};
  auto cl = plane::canonical_triangulation(l);
  Rational area(0);
  for (const auto& t : cl) {
    CHECK(plane::orient(t[0], t[1], t[2]) == 1);
    area += plane::twice_area({t[0], t[1], t[2]});
  }
  CHECK(area == Rational(6));
  CHECK(plane::canonical_triangulation(cl) == cl);
  CHECK(plane::union_boundary(l).size() == 6);
}
