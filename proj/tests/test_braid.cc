#include <cmath>
#include <random>

#include "doctest.h"
#include "plcube/reference.h"
#include "plcube/braid.h"
#include "plcube/constructors.h"
#include "plcube/errors.h"

using namespace plcube;

namespace {

RatPoint pt(Rational x, Rational y) { return RatPoint{std::move(x), std::move(y)}; }

const TwistSpec kSpec{Rational(1, 2), Rational(1, 12)};

BraidWord word(int n, std::initializer_list<int> letters) {
  BraidWord w{n, {}};
  for (int l : letters) w.letters.push_back({std::abs(l), l > 0 ? 1 : -1});
  return w;
}

RatPoint random_point(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> c(-255, 255);
  return pt(Rational(c(rng), 256), Rational(c(rng), 256));
}

reference::P to_p(const RatPoint& p) { return {p[0].to_double(), p[1].to_double()}; }

}  // namespace

TEST_CASE("braid words") {
  CHECK(word(3, {1, 2, -2, -1, 2}).reduced() == word(3, {2}));
  CHECK(word(3, {1, -2}).inverse() == word(3, {2, -1}));
  CHECK(word(3, {1, 2}).str() == "1 2");
  CHECK(braid_equal(word(3, {1, 2, 1}), word(3, {2, 1, 2})));
  CHECK(braid_equal(word(4, {1, 3}), word(4, {3, 1})));
  CHECK_FALSE(braid_equal(word(3, {1}), word(3, {2})));
  CHECK_FALSE(braid_equal(word(3, {1, 2}), word(3, {2, 1})));
  CHECK(braid_equal(word(3, {1, 2, 1, -2, -1, -2}), BraidWord{3, {}}));
}

TEST_CASE("trajectory") {
  auto id = trajectory(PLMap::identity(2), pt(Rational(1, 3), 0));
  REQUIRE(id.pieces.size() == 1);
  CHECK(id.at(Rational(1, 2)) == pt(Rational(1, 3), 0));

  auto h = twist_root(kSpec);
  const RatPoint x = pt(Rational(3, 4), 0);
  auto t = trajectory(h, x);
  CHECK(t.at(0) == x);
  CHECK(t.at(1) == pt(Rational(3, 4), Rational(1, 6)));
  CHECK(t.pieces.size() >= 2);
  for (std::size_t i = 0; i + 1 < t.pieces.size(); ++i) {
    const auto& a = t.pieces[i];
    const auto& b = t.pieces[i + 1];
    CHECK(a.s1 == b.s0);
    CHECK(a.u + a.v * a.s1 == b.u + b.v * b.s0);
  }
  // Against the definition s g(x/s) on a grid of times.
  std::mt19937_64 rng(21);
  for (int i = 0; i < 40; ++i) {
    RatPoint y = random_point(rng);
    if (linf_norm(y).is_zero()) continue;
    auto ty = trajectory(h, y);
    for (int k = 1; k <= 16; ++k) {
      const Rational s(k, 16);
      const RatPoint want = s >= linf_norm(y) ? apply(h, y * (Rational(1) / s)) * s : y;
      CHECK(ty.at(s) == want);
    }
  }
}

TEST_CASE("braid_word basics") {
  const auto base = default_basepoints(2);
  CHECK(base[0] == pt(Rational(-1, 3), 0));
  CHECK(braid_word(PLMap::identity(2), base, base).letters.empty());

  auto h6 = power(twist_root(kSpec), 6);
  const std::vector<RatPoint> quarter{pt(Rational(-1, 4), 0), pt(Rational(1, 4), 0)};
  // Returning the swapped points to their own basepoints makes them collide.
  CHECK_THROWS_AS(braid_word(h6, quarter, quarter), BraidDegeneracy);
  // Half turn inside, half turn on the way back: a full twist.
  auto w = braid_word(h6, quarter, {pt(Rational(-1, 4), Rational(1, 16)), pt(Rational(1, 4), Rational(1, 8))});
  CHECK(w == word(2, {1, 1}));
  CHECK_THROWS_AS(braid_word(h6, base, {pt(0, Rational(1, 2)), pt(0, Rational(1, 2))}), BraidDegeneracy);
}

TEST_CASE("braid cocycle") {
  auto h = twist_root(kSpec);
  Box box{pt(Rational(1, 8), Rational(-1, 8)), pt(Rational(5, 8), Rational(3, 8))};
  std::vector<PLMap> pool{h, power(h, 2), inverse(h), embed_support(h, box)};
  std::mt19937_64 rng(22);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  const auto base = default_basepoints(3);
  int ok = 0, degenerate = 0, free_equal = 0;
  while (ok < 25) {
    const auto& g = pool[pick(rng)];
    const auto& f = pool[pick(rng)];
    std::vector<RatPoint> x{random_point(rng), random_point(rng), random_point(rng)};
    std::vector<RatPoint> fx;
    for (const auto& p : x) fx.push_back(apply(f, p));
    try {
      const BraidWord lhs = braid_word(compose(g, f), base, x);
      const BraidWord rhs = (braid_word(f, base, x) * braid_word(g, base, fx)).reduced();
      CHECK(braid_equal(lhs, rhs));
      free_equal += lhs == rhs;
      // Inverse law: gamma(f^-1; f(x)) gamma(f; x) is trivial.
      CHECK(braid_equal(braid_word(inverse(f), base, fx), braid_word(f, base, x).inverse()));
      ++ok;
    } catch (const BraidDegeneracy&) {
      ++degenerate;
    }
  }
  CHECK(degenerate <= 3);
  MESSAGE("freely equal: " << free_equal << " of " << ok);
}

TEST_CASE("braid words against the winding oracle") {
  const reference::Twist model{0.5, 1.0};
  auto h12 = twist_root({Rational(1, 2), Rational(1)});
  CHECK(equals(h12, power(twist_root(kSpec), 12)));
  const auto base = default_basepoints(2);
  QuasimorphismSpec lk{QuasimorphismSpec::Kind::pair_linking, 2, 0, {}};
  std::mt19937_64 rng(23);
  int nonzero = 0;
  for (int i = 0; i < 40; ++i) {
    std::vector<RatPoint> x{random_point(rng), random_point(rng)};
    const double ref = reference::pair_linking(model, to_p(base[0]), to_p(base[1]), to_p(x[0]), to_p(x[1]));
    CHECK(std::fabs(ref - std::round(ref)) < 1e-6);
    const Rational got = mu_eval(lk, braid_word(h12, base, x));
    CHECK(got.to_double() == std::round(ref));
    nonzero += !got.is_zero();
  }
  CHECK(nonzero > 0);
}

TEST_CASE("mu_eval") {
  QuasimorphismSpec es{QuasimorphismSpec::Kind::exponent_sum, 0, 0, {}};
  QuasimorphismSpec lk{QuasimorphismSpec::Kind::pair_linking, 2, 0, {}};
  CHECK(mu_eval(es, BraidWord{2, {}}) == Rational(0));
  CHECK(mu_eval(es, word(2, {1, 1})) == Rational(2));
  CHECK(mu_eval(lk, word(2, {1, 1})) == Rational(1));
  CHECK_THROWS_AS(mu_eval(lk, word(3, {1})), DomainError);
  QuasimorphismSpec tab{QuasimorphismSpec::Kind::table, 0, 1, {{"1 1", Rational(5)}}};
  CHECK(mu_eval(tab, word(2, {1, -1, 1, 1})) == Rational(5));
  CHECK_THROWS_AS(mu_eval(tab, word(2, {1})), NotFoundError);

  std::mt19937_64 rng(24);
  std::uniform_int_distribution<int> len(0, 8), gen(1, 3), sg(0, 1);
  QuasimorphismSpec lk4{QuasimorphismSpec::Kind::pair_linking, 0, 0, {}};
  for (int i = 0; i < 100; ++i) {
    BraidWord a{4, {}}, b{4, {}};
    for (int k = len(rng); k > 0; --k) a.letters.push_back({gen(rng), sg(rng) ? 1 : -1});
    for (int k = len(rng); k > 0; --k) b.letters.push_back({gen(rng), sg(rng) ? 1 : -1});
    CHECK(mu_eval(es, a * b) == mu_eval(es, a) + mu_eval(es, b));
    CHECK(mu_eval(lk4, a * b) == mu_eval(lk4, a) + mu_eval(lk4, b));
  }
}

TEST_CASE("phi_estimate") {
  QuasimorphismSpec es{QuasimorphismSpec::Kind::exponent_sum, 0, 0, {}};
  auto r = phi_estimate(PLMap::identity(2), es, 2, 32, 7);
  CHECK(r.estimate == Rational(0));
  CHECK(r.variance == Rational(0));
  auto f = pl1d({{-1, -1}, {0, Rational(1, 2)}, {1, 1}});
  CHECK_THROWS_AS(phi_estimate(suspend(f), es, 2, 8, 1), DomainError);

  auto h = twist_root(kSpec);
  auto a = phi_estimate(h, es, 2, 24, 9, 1);
  auto b = phi_estimate(h, es, 2, 24, 9, 3);
  CHECK(a.estimate == b.estimate);
  CHECK(a.variance == b.variance);
  CHECK(a.resampled == b.resampled);
}

TEST_CASE("homogenize") {
  CHECK(homogenize({{1, Rational(3, 2)}, {2, Rational(3)}, {4, Rational(6)}}) == Rational(3, 2));
  CHECK(homogenize({{1, 0}, {2, 0}}) == Rational(0));
  CHECK_THROWS_AS(homogenize({{1, 0}}), DomainError);
}
