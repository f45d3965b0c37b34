#include "plcube/sampling.h"

#include <algorithm>

#include "plcube/constructors.h"

namespace plcube {

RatPoint random_dyadic_point(Rng& rng, int bits) {
  const long scale = 1L << bits;
  std::uniform_int_distribution<long> c(-(scale - 1), scale - 1);
  const long a = c(rng), b = c(rng);
  return RatPoint{Rational(a, scale), Rational(b, scale)};
}

namespace {

std::vector<int> distinct_sorted(Rng& rng, int n, int lo, int hi) {
  std::uniform_int_distribution<int> c(lo, hi);
  std::vector<int> v;
  while (int(v.size()) < n) {
    const int x = c(rng);
    if (std::find(v.begin(), v.end(), x) == v.end()) v.push_back(x);
  }
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

PLMap random_1d_map(Rng& rng) {
  std::uniform_int_distribution<int> k(1, 4), coin(0, 2);
  const int n = k(rng);
  const auto xs = distinct_sorted(rng, n, -63, 63);
  auto ys = distinct_sorted(rng, n, -63, 63);
  if (coin(rng) == 0 && (n == 1 || xs[0] < ys[1])) ys[0] = xs[0];
  std::vector<Node> nodes{{-1, -1}};
  for (int i = 0; i < n; ++i) nodes.push_back({Rational(xs[i], 64), Rational(ys[i], 64)});
  nodes.push_back({1, 1});
  return pl1d(nodes);
}

PLMap random_2d_map(Rng& rng) {
  std::uniform_int_distribution<int> kind(0, 5), coin(0, 1), frac(1, 3);
  const TwistSpec base{Rational(1, 2), Rational(frac(rng), 12)};
  PLMap f;
  switch (kind(rng)) {
    case 0:
      f = twist_root(base);
      break;
    case 1: {
      std::uniform_int_distribution<int> corner(-8, 4), size(2, 4);
      const int x = corner(rng), y = corner(rng), w = size(rng), h = size(rng);
      f = embed_support(twist_root(base), {RatPoint{Rational(x, 8), Rational(y, 8)},
                                           RatPoint{Rational(std::min(x + w, 8), 8), Rational(std::min(y + h, 8), 8)}});
      break;
    }
    case 2:
      f = suspend(random_1d_map(rng));
      break;
    case 3:
      f = linear_near_zero(random_glplus(rng, 2), Rational(1, 2));
      break;
    case 4:
      f = alexander(twist_root(base), Rational(coin(rng) ? 3 : 1, 4));
      break;
    default:
      f = embedded_shear();
  }
  return coin(rng) ? inverse(f) : f;
}

Ray random_ray(Rng& rng, int bound) {
  std::uniform_int_distribution<int> c(-bound, bound);
  for (;;) {
    const int x = c(rng), y = c(rng);
    if (x != 0 || y != 0) return Ray(x, y);
  }
}

RatMatrix random_glplus(Rng& rng, int bound) {
  std::uniform_int_distribution<int> c(-bound, bound);
  for (;;) {
    RatMatrix m{{c(rng), c(rng)}, {c(rng), c(rng)}};
    if (m.det() > Rational(0)) return m;
  }
}

}  // namespace plcube
