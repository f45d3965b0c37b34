#include <random>

#include "doctest.h"
#include "plcube/constructors.h"
#include "plcube/errors.h"
#include "plcube/plmap.h"
#include "plcube/sampling.h"

using namespace plcube;

namespace {

RatPoint pt(Rational x, Rational y) { return RatPoint{std::move(x), std::move(y)}; }

// 1D map interpolating the nodes, built by hand so this file does not depend
// on the constructors module.
PLMap interp(const std::vector<std::pair<Rational, Rational>>& nodes) {
  std::vector<Cell> cells;
  for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
    const auto& [x0, y0] = nodes[i];
    const auto& [x1, y1] = nodes[i + 1];
    const Rational slope = (y1 - y0) / (x1 - x0);
    cells.push_back({Simplex({RatPoint{x0}, RatPoint{x1}}), {RatMatrix{{slope}}, RatPoint{y0 - slope * x0}}});
  }
  return PLMap(1, std::move(cells));
}

PLMap sample_f() { return interp({{-1, -1}, {0, Rational(1, 2)}, {1, 1}}); }

// Four-triangle fan of the square with its centre vertex moved.
PLMap star_map(const RatPoint& centre_image) {
  std::vector<RatPoint> ring{pt(-1, -1), pt(1, -1), pt(1, 1), pt(-1, 1)};
  std::vector<Cell> cells;
  const RatPoint c = pt(0, 0);
  for (std::size_t i = 0; i < 4; ++i) {
    const RatPoint& a = ring[i];
    const RatPoint& b = ring[(i + 1) % 4];
    std::vector<RatPoint> src{c, a, b};
    std::vector<RatPoint> dst{centre_image, a, b};
    cells.push_back({Simplex(src), RatAffineMap::from_vertices(src, dst)});
  }
  return PLMap(2, std::move(cells));
}

}  // namespace

TEST_CASE("validate") {
  CHECK(validate(PLMap::identity(1)).passed);
  CHECK(validate(PLMap::identity(2)).passed);
  CHECK(validate(sample_f()).passed);
  CHECK(validate(star_map(pt(Rational(1, 3), Rational(-1, 5)))).passed);

  // Determinant zero cell.
  auto id = PLMap::identity(2);
  std::vector<Cell> cells = id.cells();
  cells[1].map.linear = RatMatrix{{1, 0}, {0, 0}};
  auto r = validate(PLMap(2, cells));
  REQUIRE_FALSE(r.passed);
  CHECK(r.violations[0].check == "bijectivity");
  CHECK(r.violations[0].cell == std::size_t{1});

  // Mismatched maps on the shared diagonal.
  cells = id.cells();
  cells[0].map.translation = pt(Rational(1, 8), 0);
  r = validate(PLMap(2, cells));
  REQUIRE_FALSE(r.passed);
  bool continuity = false;
  for (const auto& v : r.violations) continuity |= v.check == "continuity";
  CHECK(continuity);

  // Folded 2D map: centre pushed outside the square.
  CHECK_FALSE(validate(star_map(pt(2, 0))).passed);
  // Boundary moved in 1D.
  CHECK_FALSE(validate(interp({{-1, Rational(-1, 2)}, {1, 1}})).passed);
  // Cells that overlap.
  CHECK_FALSE(validate(PLMap(1, {{Simplex({RatPoint{-1}, RatPoint{Rational(1, 2)}}), RatAffineMap::identity(1)},
                                 {Simplex({RatPoint{0}, RatPoint{1}}), RatAffineMap::identity(1)}}))
                   .passed);
}

TEST_CASE("apply") {
  auto f = sample_f();
  CHECK(apply(f, RatPoint{0}) == RatPoint{Rational(1, 2)});
  CHECK(apply(f, RatPoint{Rational(-1, 2)}) == RatPoint{Rational(-1, 4)});
  CHECK(apply(PLMap::identity(2), pt(Rational(1, 3), Rational(-2, 7))) == pt(Rational(1, 3), Rational(-2, 7)));
  CHECK_THROWS_AS(apply(f, RatPoint{2}), DomainError);
}

TEST_CASE("compose and inverse in 1D") {
  auto f = sample_f();
  auto ff = canonicalize(compose(f, f));
  REQUIRE(ff.size() == 3);
  CHECK(ff.cells()[0].simplex[1] == RatPoint{Rational(-1, 3)});
  CHECK(ff.cells()[1].simplex[1] == RatPoint{0});
  CHECK(ff.cells()[0].map.linear(0, 0) == Rational(9, 4));
  CHECK(ff.cells()[1].map.linear(0, 0) == Rational(3, 4));
  CHECK(ff.cells()[2].map.linear(0, 0) == Rational(1, 4));

  auto fi = canonicalize(inverse(f));
  REQUIRE(fi.size() == 2);
  CHECK(fi.cells()[0].simplex[1] == RatPoint{Rational(1, 2)});
  CHECK(fi.cells()[0].map.linear(0, 0) == Rational(2, 3));
  CHECK(fi.cells()[1].map.linear(0, 0) == Rational(2));
  CHECK(affine_region_count(fi) == affine_region_count(f));

  auto id = canonicalize(compose(f, inverse(f)));
  CHECK(id.size() == 1);
  CHECK(is_identity(id));
  CHECK(equals(inverse(PLMap::identity(1)), PLMap::identity(1)));
}

TEST_CASE("compose agrees with pointwise application") {
  std::mt19937_64 rng(11);
  auto f = star_map(pt(Rational(1, 3), Rational(-1, 5)));
  auto g = star_map(pt(Rational(-1, 4), Rational(1, 2)));
  auto fg = compose(f, g);
  CHECK(validate(fg).passed);
  CHECK(fg.size() <= 4 * f.size() * g.size());
  std::uniform_int_distribution<long> d(-1000, 1000);
  for (int i = 0; i < 100; ++i) {
    RatPoint x = pt(Rational(d(rng), 1000), Rational(d(rng), 1000));
    CHECK(apply(fg, x) == apply(f, apply(g, x)));
    CHECK(apply(inverse(f), apply(f, x)) == x);
  }
  CHECK(equals(compose(inverse(fg), fg), PLMap::identity(2)));
  CHECK_FALSE(equals(f, g));
  CHECK(equals(f, canonicalize(f)));
  CHECK(canonical_key(compose(f, g)) == canonical_key(canonicalize(compose(f, g))));
}

TEST_CASE("canonical form") {
  auto id = canonicalize(PLMap::identity(2));
  CHECK(id.size() == 2);
  CHECK(affine_region_count(PLMap::identity(2)) == 1);
  auto f = star_map(pt(Rational(1, 3), Rational(-1, 5)));
  auto g = star_map(pt(Rational(-1, 4), Rational(1, 2)));
  auto a = compose(compose(f, g), inverse(g));  // f on a finer triangulation
  CHECK(canonical_key(a) == canonical_key(f));
  CHECK(canonical_key(canonicalize(a)) == canonical_key(a));
  CHECK(affine_region_count(f) == 4);
}

TEST_CASE("suspension materialization") {
  auto f = sample_f();
  auto s = PLMap::suspension_of(f);
  CHECK(s.dim() == 2);
  CHECK(validate(s).passed);
  CHECK(validate(s.as_generic()).passed);
  CHECK(apply(s, pt(0, 0)) == pt(Rational(1, 2), 0));
  CHECK(apply(s.as_generic(), pt(0, Rational(1, 2))) == pt(Rational(1, 4), Rational(1, 2)));
  auto s3 = PLMap::suspension_of(s);
  CHECK(s3.dim() == 3);
  CHECK(s3.size() == 2 * s.size() + 2 * 4 * 2);
  Rational vol(0);
  for (const auto& c : s3.cells()) vol += abs(c.simplex.signed_scaled_volume()) / Rational(6);
  CHECK(vol == Rational(8));
  CHECK(apply(s3, RatPoint{0, 0, 0}) == RatPoint{Rational(1, 2), 0, 0});
  for (const auto& c : s3.cells()) {
    // Cell maps agree with the closed-form suspension at vertices.
    for (const auto& v : c.simplex.vertices()) CHECK(c.map.apply(v) == apply(s3, v));
  }
  CHECK(equals(compose(s3, inverse(s3)), PLMap::identity(3)));
}

TEST_CASE("equals agrees with the overlay definition") {
  Rng rng(91);
  int unequal = 0;
  for (int i = 0; i < 40; ++i) {
    const PLMap f = random_2d_map(rng);
    // a twist in a tiny box changes f only there
    std::uniform_int_distribution<int> pos(-60, 59);
    const int x = pos(rng), y = pos(rng);
    const PLMap bump = embed_support(twist_root({Rational(1, 2), Rational(1, 12)}),
                                     {RatPoint{Rational(x, 64), Rational(y, 64)}, RatPoint{Rational(x + 1, 64), Rational(y + 1, 64)}});
    const PLMap g = i % 2 ? compose(f, bump) : compose(inverse(f), compose(f, f));
    const bool expected = is_identity(compose(f, inverse(g)));
    CHECK(equals(f, g) == expected);
    CHECK(equals(g, f) == expected);
    unequal += !expected;
  }
  CHECK(unequal == 20);
}
