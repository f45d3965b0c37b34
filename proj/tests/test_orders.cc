#include <random>

#include "doctest.h"
#include "plcube/constructors.h"
#include "plcube/orders.h"

using namespace plcube;

namespace {

// Random 1D map on a 1/64 grid; about a third of them agree with the
// identity on an initial segment so that departures away from -1 occur.
PLMap random_1d(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> k(1, 4), c(-63, 63), coin(0, 2);
  const int n = k(rng);
  std::vector<int> xs, ys;
  while (int(xs.size()) < n) {
    int v = c(rng);
    if (std::find(xs.begin(), xs.end(), v) == xs.end()) xs.push_back(v);
  }
  while (int(ys.size()) < n) {
    int v = c(rng);
    if (std::find(ys.begin(), ys.end(), v) == ys.end()) ys.push_back(v);
  }
  std::sort(xs.begin(), xs.end());
  std::sort(ys.begin(), ys.end());
  if (coin(rng) == 0 && (n == 1 || xs[0] < ys[1])) ys[0] = xs[0];
  std::vector<Node> nodes{{-1, -1}};
  for (int i = 0; i < n; ++i) nodes.push_back({Rational(xs[i], 64), Rational(ys[i], 64)});
  nodes.push_back({1, 1});
  return pl1d(nodes);
}

Ray random_ray(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> c(-9, 9);
  for (;;) {
    int x = c(rng), y = c(rng);
    if (x != 0 || y != 0) return Ray(x, y);
  }
}

RatMatrix random_glplus(std::mt19937_64& rng, int bound) {
  std::uniform_int_distribution<int> c(-bound, bound);
  for (;;) {
    RatMatrix m{{c(rng), c(rng)}, {c(rng), c(rng)}};
    if (m.det() > Rational(0)) return m;
  }
}

}  // namespace

TEST_CASE("onedim_sign examples") {
  auto f = pl1d({{-1, -1}, {0, Rational(1, 2)}, {1, 1}});
  CHECK(onedim_sign(PLMap::identity(1)) == 0);
  CHECK(onedim_sign(f) == 1);
  CHECK(onedim_sign(inverse(f)) == -1);
  // Identity on [-1,0], then below the diagonal.
  auto g = pl1d({{-1, -1}, {0, 0}, {Rational(1, 2), Rational(1, 4)}, {1, 1}});
  CHECK(onedim_sign(g) == -1);
  CHECK(onedim_compare(f, f) == 0);
  CHECK(onedim_compare(PLMap::identity(1), f) == -1);
  CHECK(onedim_compare(f, PLMap::identity(1)) == 1);
  CHECK_THROWS_AS(onedim_sign(PLMap::identity(2)), DimensionError);
}

TEST_CASE("positive cone properties") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 100; ++i) {
    auto f = random_1d(rng), g = random_1d(rng);
    const int s = onedim_sign(f);
    const int t = onedim_sign(inverse(f));
    CHECK((s == 1) + (t == 1) + int(is_identity(f)) == 1);
    CHECK(s == -t);
    if (s == 1 && onedim_sign(g) == 1) CHECK(onedim_sign(compose(f, g)) == 1);
    CHECK(onedim_sign(compose(g, compose(f, inverse(g)))) == s);
  }
  for (int i = 0; i < 30; ++i) {
    auto a = random_1d(rng), b = random_1d(rng), c = random_1d(rng);
    if (onedim_compare(a, b) <= 0 && onedim_compare(b, c) <= 0) CHECK(onedim_compare(a, c) <= 0);
    if (onedim_compare(a, b) >= 0 && onedim_compare(b, c) >= 0) CHECK(onedim_compare(a, c) >= 0);
  }
}

TEST_CASE("rays") {
  CHECK(Ray(2, 4) == Ray(Rational(1, 3), Rational(2, 3)));
  CHECK(Ray(-2, 0) == Ray(-1, 0));
  CHECK_FALSE(Ray(1, 1) == Ray(-1, -1));
  CHECK_THROWS_AS(Ray(0, 0), DomainError);
  CHECK(ray_circular_order(Ray(1, 0), Ray(0, 1), Ray(-1, 0)) == 1);
  CHECK(ray_circular_order(Ray(1, 0), Ray(-1, 0), Ray(0, 1)) == -1);
  CHECK(ray_circular_order(Ray(1, 0), Ray(2, 0), Ray(0, 1)) == 0);
  CHECK(ray_circular_order(Ray(0, -1), Ray(1, -1), Ray(1, 0)) == 1);
}

TEST_CASE("cocycle") {
  auto e = [](const Ray& a, const Ray& b, const Ray& c) { return ray_circular_order(a, b, c); };
  CHECK(cocycle_check(e, std::array<Ray, 4>{Ray(1, 0), Ray(1, 1), Ray(0, 1), Ray(-1, 1)}));
  auto bad = [](int a, int, int) { return a == 0 ? 1 : -1; };
  CHECK_FALSE(cocycle_check(bad, std::array<int, 4>{0, 1, 2, 3}));
  CHECK_THROWS_AS(cocycle_check(bad, std::array<int, 4>{0, 1, 1, 3}), DomainError);

  std::mt19937_64 rng(12);
  int tested = 0;
  while (tested < 300) {
    std::array<Ray, 4> q{random_ray(rng), random_ray(rng), random_ray(rng), random_ray(rng)};
    bool distinct = true;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) distinct = distinct && !(q[i] == q[j]);
    if (!distinct) continue;
    CHECK(cocycle_check(e, q));
    ++tested;
  }
  for (int i = 0; i < 100; ++i) {
    auto m = random_glplus(rng, 5);
    Ray a = random_ray(rng), b = random_ray(rng), c = random_ray(rng);
    CHECK(ray_circular_order(m * a, m * b, m * c) == ray_circular_order(a, b, c));
  }
}

TEST_CASE("projectivized germs") {
  const RatPoint o{0, 0};
  auto id = projectivized_germ(PLMap::identity(2), o);
  REQUIRE(id.arcs.size() == 1);
  CHECK(id.arcs[0].m.is_identity());
  CHECK(id.arcs[0].start == id.arcs[0].end);

  const RatMatrix u{{1, 1}, {0, 1}};
  auto s = projectivized_germ(linear_near_zero(u, Rational(1, 4)), o);
  REQUIRE(s.arcs.size() == 1);
  CHECK(s.arcs[0].m == u);

  auto h = twist_root({Rational(1, 2), Rational(1, 12)});
  auto gh = projectivized_germ(h, o);
  CHECK(gh.arcs.size() > 1);
  for (const auto& a : gh.arcs) CHECK(a.m.det() > Rational(0));
  CHECK(gh.apply(Ray(1, 0)) == Ray(3, 2));
  CHECK_THROWS_AS(projectivized_germ(h, RatPoint{Rational(3, 4), 0}), DomainError);

  std::mt19937_64 rng(13);
  std::vector<PLMap> pool{h, power(h, 5), inverse(h)};
  for (int i = 0; i < 4; ++i) pool.push_back(linear_near_zero(random_glplus(rng, 2), Rational(1, 2)));
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  for (int i = 0; i < 12; ++i) {
    const auto& f = pool[pick(rng)];
    const auto& g = pool[pick(rng)];
    CHECK(projectivized_germ(compose(f, g), o) == compose(projectivized_germ(f, o), projectivized_germ(g, o)));
  }
}
