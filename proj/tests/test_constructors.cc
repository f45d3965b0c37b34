#include <random>

#include "doctest.h"
#include "plcube/constructors.h"
#include "plcube/errors.h"

using namespace plcube;

namespace {

RatPoint pt(Rational x, Rational y) { return RatPoint{std::move(x), std::move(y)}; }

const TwistSpec kSpec{Rational(1, 2), Rational(1, 12)};

bool all_unimodular(const PLMap& f) {
  for (const auto& c : f.cells()) {
    if (c.map.linear.det() != Rational(1)) return false;
  }
  return true;
}

// Independent model of the layered slide, written as an arclength walk.
RatPoint slide_oracle(const TwistSpec& spec, const RatPoint& x) {
  const Rational l = linf_norm(x);
  if (l.is_zero()) return x;
  const Rational s = l >= spec.inner ? spec.fraction * Rational(8) * spec.inner * (Rational(1) - l) / (Rational(1) - spec.inner)
                                     : spec.fraction * Rational(8) * l;
  // Arclength position from the corner (l,-l), counterclockwise.
  Rational u;
  if (x[0] == l && x[1] > -l) u = x[1] + l;
  else if (x[1] == l) u = Rational(2) * l + (l - x[0]);
  else if (x[0] == -l) u = Rational(4) * l + (l - x[1]);
  else u = Rational(6) * l + (x[0] + l);
  const Rational per = Rational(8) * l;
  u += s;
  u -= per * floor_div(u, per);
  if (u <= Rational(2) * l) return pt(l, u - l);
  if (u <= Rational(4) * l) return pt(l - (u - Rational(2) * l), l);
  if (u <= Rational(6) * l) return pt(-l, l - (u - Rational(4) * l));
  return pt(-l + (u - Rational(6) * l), -l);
}

}  // namespace

TEST_CASE("pl1d") {
  CHECK(is_identity(pl1d({{-1, -1}, {1, 1}})));
  auto f = pl1d({{-1, -1}, {0, Rational(1, 2)}, {1, 1}});
  CHECK(f.cells()[0].map.linear(0, 0) == Rational(3, 2));
  CHECK(f.cells()[1].map.linear(0, 0) == Rational(1, 2));
  CHECK_THROWS_AS(pl1d({{-1, -1}, {0, Rational(1, 2)}, {Rational(1, 2), Rational(1, 4)}, {1, 1}}), DomainError);
}

TEST_CASE("alexander") {
  auto f = pl1d({{-1, -1}, {0, Rational(1, 2)}, {1, 1}});
  CHECK(equals(alexander(f, 1), f));
  CHECK(is_identity(alexander(f, 0)));
  auto half = alexander(f, Rational(1, 2));
  CHECK(validate(half).passed);
  CHECK(apply(half, RatPoint{0}) == RatPoint{Rational(1, 4)});
  CHECK(apply(half, RatPoint{Rational(3, 4)}) == RatPoint{Rational(3, 4)});
  CHECK_THROWS_AS(alexander(f, 2), DomainError);
  auto h = twist_root(kSpec);
  auto ht = alexander(h, Rational(2, 3));
  CHECK(validate(ht).passed);
  CHECK(apply(ht, pt(Rational(1, 2), 0)) == apply(h, pt(Rational(3, 4), 0)) * Rational(2, 3));
}

TEST_CASE("twist_root") {
  auto h = twist_root(kSpec);
  CHECK(validate(h).passed);
  CHECK(all_unimodular(h));
  CHECK(apply(h, pt(Rational(3, 4), 0)) == pt(Rational(3, 4), Rational(1, 6)));
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> d(-64, 64);
  for (int i = 0; i < 200; ++i) {
    RatPoint x = pt(Rational(d(rng), 64), Rational(d(rng), 64));
    CHECK(apply(h, x) == slide_oracle(kSpec, x));
  }
  // The canonical form keeps one cell per affine region.
  CHECK(affine_region_count(h) == affine_region_count(canonicalize(h)));

  auto h6 = twist_root({kSpec.inner, kSpec.fraction * Rational(6)});
  CHECK(equals(h6, power(h, 6)));
  CHECK(apply(h6, pt(Rational(1, 2), 0)) == pt(Rational(-1, 2), 0));
  auto h12 = power(h, 12);
  CHECK_FALSE(is_identity(h12));
  CHECK(apply(h12, pt(Rational(1, 3), Rational(1, 5))) == pt(Rational(1, 3), Rational(1, 5)));
  CHECK(apply(h12, pt(Rational(3, 4), 0)) != pt(Rational(3, 4), 0));
}

TEST_CASE("suspend") {
  auto f = pl1d({{-1, -1}, {0, Rational(1, 2)}, {1, 1}});
  CHECK(is_identity(suspend(PLMap::identity(1))));
  CHECK(apply(suspend(f), pt(0, 0)) == pt(Rational(1, 2), 0));
  auto g = pl1d({{-1, -1}, {Rational(-1, 3), Rational(1, 5)}, {1, 1}});
  auto a = suspend(compose(f, g));
  auto b = compose(suspend(f), suspend(g));
  CHECK(equals(a, b));
  CHECK(equals(a.as_generic(), compose(suspend(f).as_generic(), suspend(g).as_generic())));
  CHECK_FALSE(equals(suspend(f), suspend(g)));
}

TEST_CASE("embed_support") {
  Box box{pt(Rational(1, 8), Rational(-1, 8)), pt(Rational(3, 8), Rational(1, 8))};
  CHECK(is_identity(embed_support(PLMap::identity(2), box)));
  auto h = twist_root(kSpec);
  auto e = embed_support(h, box);
  CHECK(validate(e).passed);
  CHECK(all_unimodular(e));
  for (const auto& c : e.cells()) {
    if (c.map.is_identity()) continue;
    for (const auto& v : c.simplex.vertices()) {
      CHECK(v[0] >= box.lo[0]);
      CHECK(v[0] <= box.hi[0]);
      CHECK(v[1] >= box.lo[1]);
      CHECK(v[1] <= box.hi[1]);
    }
  }
  CHECK(validate(embed_support(h, {pt(-1, -1), pt(0, 0)})).passed);
  CHECK_THROWS_AS(embed_support(h, {pt(0, 0), pt(2, 1)}), DomainError);
}

TEST_CASE("figure2_g") {
  auto [f, g] = figure2_g();
  CHECK(validate(f).passed);
  CHECK(validate(g).passed);
  CHECK(all_unimodular(f));
  CHECK(all_unimodular(g));
  CHECK_FALSE(is_identity(g));
  CHECK(equals(compose(inverse(f), compose(g, f)), inverse(g)));
  CHECK(apply(g, pt(Rational(1, 2), Rational(1, 2))) == pt(Rational(1, 2), Rational(1, 2)));
  CHECK(apply(g, pt(0, Rational(3, 16))) == pt(0, Rational(3, 16)));
}

TEST_CASE("linear_near_zero") {
  CHECK(is_identity(linear_near_zero(RatMatrix::identity(2), Rational(1, 2))));
  auto s = embedded_shear();
  CHECK(validate(s).passed);
  CHECK(apply(s, pt(Rational(1, 8), Rational(1, 8))) == pt(Rational(1, 4), Rational(1, 8)));
  CHECK_THROWS_AS(linear_near_zero(RatMatrix{{0, 1}, {1, 0}}, Rational(1, 4)), DomainError);
  for (const RatMatrix& m : {RatMatrix{{3, 5}, {1, 2}}, RatMatrix{{0, -1}, {1, 0}}, RatMatrix{{-1, 0}, {0, -1}},
                             RatMatrix{{Rational(1, 2), 0}, {7, 3}}}) {
    auto f = linear_near_zero(m, Rational(1, 2));
    CHECK(validate(f).passed);
    CHECK(f.cells()[locate(f, pt(0, 0))].map.linear == m);
  }
}
