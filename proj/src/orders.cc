#include "plcube/orders.h"

#include <algorithm>

namespace plcube {

int onedim_sign(const PLMap& f) {
  if (f.dim() != 1) throw DimensionError("onedim_sign: expected a 1-dimensional map");
  auto cells = canonicalize(f).cells();
  auto left = [](const Cell& c) { return min(c.simplex[0][0], c.simplex[1][0]); };
  std::sort(cells.begin(), cells.end(), [&](const Cell& a, const Cell& b) { return left(a) < left(b); });
  for (const auto& c : cells) {
    if (c.map.is_identity()) continue;
    const Rational& slope = c.map.linear(0, 0);
    // The piece fixes its left endpoint, so slope 1 would make it the identity.
    if (slope == Rational(1)) throw Error("onedim_sign: departure with slope 1 at " + left(c).str());
    return slope > Rational(1) ? 1 : -1;
  }
  return 0;
}

int onedim_compare(const PLMap& f, const PLMap& g) { return -onedim_sign(compose(inverse(f), g)); }

namespace {

Rational cross(const Ray& a, const Ray& b) { return a.x() * b.y() - a.y() * b.x(); }

int half(const Ray& r) { return (r.y() > Rational(0) || (r.y().is_zero() && r.x() > Rational(0))) ? 0 : 1; }

// Closed at start, open at end.
bool in_arc(const Ray& r, const Ray& start, const Ray& end) {
  if (start == end || r == start) return true;
  return ray_circular_order(start, r, end) == 1;
}

// A ray strictly inside the counterclockwise arc from a to b.
Ray inside(const Ray& a, const Ray& b) {
  if (!(a == b) && cross(a, b) > Rational(0)) return Ray(a.x() + b.x(), a.y() + b.y());
  return Ray(-a.y(), a.x());
}

std::size_t arc_index(const CircleMapPP& f, const Ray& r) {
  for (std::size_t i = 0; i < f.arcs.size(); ++i) {
    if (in_arc(r, f.arcs[i].start, f.arcs[i].end)) return i;
  }
  throw Error("CircleMapPP: arcs do not cover the circle");
}

Ray preimage(const CircleMapPP& f, const Ray& r) {
  for (const auto& a : f.arcs) {
    Ray q = a.m.inverse() * r;
    if (in_arc(q, a.start, a.end)) return q;
  }
  throw Error("CircleMapPP: map is not onto");
}

// Sort arcs around the circle, merge neighbours with equal matrices and start
// the list at the arc containing (1,0).
CircleMapPP normalized(std::vector<CircleMapPP::Arc> arcs) {
  std::sort(arcs.begin(), arcs.end(), [](const auto& a, const auto& b) { return a.start.angle_less(b.start); });
  std::vector<CircleMapPP::Arc> out;
  for (auto& a : arcs) {
    if (!out.empty() && out.back().m == a.m && out.back().end == a.start) {
      out.back().end = a.end;
    } else {
      out.push_back(std::move(a));
    }
  }
  if (out.size() > 1 && out.back().m == out.front().m && out.back().end == out.front().start) {
    out.front().start = out.back().start;
    out.pop_back();
  }
  const Ray e1(1, 0);
  if (out.size() == 1) {
    out[0].start = out[0].end = e1;
    return {out};
  }
  auto it = std::find_if(out.begin(), out.end(), [&](const auto& a) { return in_arc(e1, a.start, a.end); });
  std::rotate(out.begin(), it, out.end());
  return {out};
}

}  // namespace

Ray::Ray(const Rational& x, const Rational& y) {
  if (x.is_zero() && y.is_zero()) throw DomainError("Ray: zero vector");
  mpz_class l = lcm(x.den(), y.den());
  mpz_class a = mpq_class(x.mpq() * l).get_num(), b = mpq_class(y.mpq() * l).get_num();
  mpz_class g = gcd(a, b);
  x_ = Rational(mpq_class(a / g));
  y_ = Rational(mpq_class(b / g));
}

bool Ray::angle_less(const Ray& o) const {
  const int h1 = half(*this), h2 = half(o);
  if (h1 != h2) return h1 < h2;
  return cross(*this, o) > Rational(0);
}

Ray operator*(const RatMatrix& m, const Ray& r) { return Ray(m * r.vec()); }

int ray_circular_order(const Ray& a, const Ray& b, const Ray& c) {
  if (a == b || b == c || a == c) return 0;
  const int n = int(a.angle_less(b)) + int(b.angle_less(c)) + int(c.angle_less(a));
  return n == 2 ? 1 : -1;
}

Ray CircleMapPP::apply(const Ray& r) const { return arcs[arc_index(*this, r)].m * r; }

CircleMapPP compose(const CircleMapPP& f, const CircleMapPP& g) {
  std::vector<Ray> cuts;
  if (g.arcs.size() > 1) {
    for (const auto& a : g.arcs) cuts.push_back(a.start);
  }
  if (f.arcs.size() > 1) {
    for (const auto& a : f.arcs) cuts.push_back(preimage(g, a.start));
  }
  if (cuts.empty()) {
    const Ray e1(1, 0);
    return {{{e1, e1, f.arcs[0].m * g.arcs[0].m}}};
  }
  std::sort(cuts.begin(), cuts.end(), [](const Ray& a, const Ray& b) { return a.angle_less(b); });
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  std::vector<CircleMapPP::Arc> arcs;
  for (std::size_t i = 0; i < cuts.size(); ++i) {
    const Ray& a = cuts[i];
    const Ray& b = cuts[(i + 1) % cuts.size()];
    const Ray mid = inside(a, b);
    const RatMatrix& mg = g.arcs[arc_index(g, mid)].m;
    const RatMatrix& mf = f.arcs[arc_index(f, mg * mid)].m;
    arcs.push_back({a, b, mf * mg});
  }
  return normalized(std::move(arcs));
}

CircleMapPP projectivized_germ(const PLMap& f, const RatPoint& p) {
  if (f.dim() != 2) throw DimensionError("projectivized_germ: expected a 2-dimensional map");
  if (apply(f, p) != p) throw DomainError("projectivized_germ: " + p.str() + " is not fixed");
  const PLMap g = f.is_suspension() ? f.as_generic() : f;
  std::vector<CircleMapPP::Arc> arcs;
  const Ray e1(1, 0);
  for (const auto& c : g.cells()) {
    const auto& v = c.simplex.vertices();
    if (!c.simplex.contains(p)) continue;
    auto vi = std::find(v.begin(), v.end(), p);
    if (vi != v.end()) {
      const std::size_t i = vi - v.begin();
      Ray u(v[(i + 1) % 3] - p), w(v[(i + 2) % 3] - p);
      if (cross(u, w) < Rational(0)) std::swap(u, w);
      arcs.push_back({u, w, c.map.linear});
      continue;
    }
    bool on_edge = false;
    for (std::size_t i = 0; i < 3 && !on_edge; ++i) {
      const RatPoint& a = v[i];
      const RatPoint& b = v[(i + 1) % 3];
      const RatPoint d = b - a, q = p - a;
      if (!(d[0] * q[1] - d[1] * q[0]).is_zero()) continue;
      on_edge = true;
      Ray r(d);
      Ray opp(v[(i + 2) % 3] - p);
      if (cross(r, opp) < Rational(0)) r = Ray(-d[0], -d[1]);
      arcs.push_back({r, Ray(-r.x(), -r.y()), c.map.linear});
    }
    if (!on_edge) arcs.push_back({e1, e1, c.map.linear});
  }
  if (arcs.empty()) throw DomainError("projectivized_germ: point outside the cube");
  if (arcs.size() == 1 && arcs[0].start == arcs[0].end) return {arcs};
  return normalized(std::move(arcs));
}

}  // namespace plcube
