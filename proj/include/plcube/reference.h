#pragma once

// Floating-point reference models of the layered twist, used to cross-check
// the exact braid code.

#include <algorithm>
#include <cmath>
#include <vector>

namespace plcube::reference {

struct P {
  double x, y;
};

inline P operator-(P a, P b) { return {a.x - b.x, a.y - b.y}; }

// Point at arclength u (counterclockwise from the corner (l,-l)) on the
// square of radius l.
inline P on_square(double l, double u) {
  const double per = 8 * l;
  u = std::fmod(u, per);
  if (u < 0) u += per;
  if (u <= 2 * l) return {l, u - l};
  if (u <= 4 * l) return {l - (u - 2 * l), l};
  if (u <= 6 * l) return {-l, l - (u - 4 * l)};
  return {-l + (u - 6 * l), -l};
}

inline double arclength(P p) {
  const double l = std::max(std::fabs(p.x), std::fabs(p.y));
  if (p.x == l && p.y > -l) return p.y + l;
  if (p.y == l) return 2 * l + (l - p.x);
  if (p.x == -l) return 4 * l + (l - p.y);
  return 6 * l + (p.x + l);
}

// The layered twist with the given inner radius and fraction of a turn,
// followed along its Alexander isotopy: every point stays on its own square
// and slides counterclockwise.
struct Twist {
  double inner, fraction;

  double offset(double l, double s) const {
    if (s <= l) return 0;
    if (s <= l / inner) return fraction * 8 * inner * (s - l) / (1 - inner);
    return fraction * 8 * l;
  }
  P at(P x, double s) const {
    const double l = std::max(std::fabs(x.x), std::fabs(x.y));
    if (l == 0) return x;
    return on_square(l, arclength(x) + offset(l, s));
  }
  P map(P x) const { return at(x, 1); }
};

inline double angle(P a, P b) { return std::atan2(a.x * b.y - a.y * b.x, a.x * b.x + a.y * b.y); }

template <class F>
double sweep(const F& d, double s0, double s1, P d0, P d1, int depth) {
  const double whole = angle(d0, d1);
  const double sm = 0.5 * (s0 + s1);
  const P dm = d(sm);
  const double a = angle(d0, dm), b = angle(dm, d1);
  if (depth > 40 || (std::fabs(whole) < 0.2 && std::fabs(a + b - whole) < 1e-12)) return whole;
  return sweep(d, s0, sm, d0, dm, depth + 1) + sweep(d, sm, s1, dm, d1, depth + 1);
}

// Linking number of two strands (total turning of p2 - p1 over 2 pi) for the
// loop basepoints -> samples -> isotopy -> basepoints.
inline double pair_linking(const Twist& t, P b1, P b2, P x1, P x2) {
  const P g1 = t.map(x1), g2 = t.map(x2);
  double total = angle(b2 - b1, x2 - x1);
  auto d = [&](double s) { return t.at(x2, s) - t.at(x1, s); };
  const int k = 16;
  for (int i = 0; i < k; ++i) {
    const double s0 = double(i) / k, s1 = double(i + 1) / k;
    total += sweep(d, s0, s1, d(s0), d(s1), 0);
  }
  total += angle(g2 - g1, b2 - b1);
  return total / (2 * M_PI);
}

// Midpoint-rule value of the two-strand linking integral over I^2 x I^2 on a
// grid x grid lattice per factor, skipping coincident pairs; scaled by the
// total volume 16.
inline double grid_pair_linking(const Twist& t, int grid, P b1, P b2) {
  std::vector<P> pts;
  for (int i = 0; i < grid; ++i)
    for (int j = 0; j < grid; ++j) pts.push_back({-1 + (2 * i + 1.0) / grid, -1 + (2 * j + 1.0) / grid});
  double sum = 0;
  long count = 0;
  for (std::size_t a = 0; a < pts.size(); ++a) {
    for (std::size_t b = 0; b < pts.size(); ++b) {
      if (a == b) continue;
      sum += std::round(pair_linking(t, b1, b2, pts[a], pts[b]));
      ++count;
    }
  }
  return 16 * sum / double(count);
}

}  // namespace plcube::reference
