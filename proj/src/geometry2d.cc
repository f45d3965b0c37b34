#include "plcube/geometry2d.h"

#include <algorithm>
#include <map>
#include <set>
#include <utility>

#include "plcube/errors.h"

namespace plcube::plane {

Vec2 to_vec(const RatPoint& p) {
  if (p.dim() != 2) throw DimensionError("expected a planar point");
  return {p[0], p[1]};
}

RatPoint to_point(const Vec2& v) { return RatPoint{v.x, v.y}; }

int orient(const Vec2& a, const Vec2& b, const Vec2& c) { return cross(b - a, c - a).sign(); }

Affine2 Affine2::identity() { return {1, 0, 0, 1, 0, 0}; }

Affine2 Affine2::from(const RatAffineMap& m) {
  if (m.dim() != 2) throw DimensionError("expected a planar affine map");
  return {m.linear(0, 0), m.linear(0, 1), m.linear(1, 0), m.linear(1, 1), m.translation[0], m.translation[1]};
}

RatAffineMap Affine2::to_map() const { return {RatMatrix{{a, b}, {c, d}}, RatPoint{e, f}}; }

Affine2 Affine2::after(const Affine2& o) const {
  return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d,
          a * o.e + b * o.f + e, c * o.e + d * o.f + f};
}

Affine2 Affine2::inverse() const {
  const Rational dt = det();
  if (dt.is_zero()) throw DegenerateError("singular affine map");
  const Rational ia = d / dt, ib = -b / dt, ic = -c / dt, id = a / dt;
  return {ia, ib, ic, id, -(ia * e + ib * f), -(ic * e + id * f)};
}

bool Affine2::is_identity() const {
  return a == Rational(1) && b.is_zero() && c.is_zero() && d == Rational(1) && e.is_zero() && f.is_zero();
}

std::string Affine2::key() const {
  std::string k;
  for (const Rational* r : {&a, &b, &c, &d, &e, &f}) {
    k += r->str();
    k += ',';
  }
  return k;
}

Rational twice_area(const Polygon& p) {
  Rational s(0);
  for (std::size_t i = 0; i < p.size(); ++i) s += cross(p[i], p[(i + 1) % p.size()]);
  return s;
}

Polygon convex_hull(Polygon pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() <= 2) return pts;
  Polygon h(2 * pts.size());
  std::size_t k = 0;
  for (const auto& p : pts) {
    while (k >= 2 && orient(h[k - 2], h[k - 1], p) <= 0) --k;
    h[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && orient(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);
  if (h.size() == 2 || (h.size() > 2 && twice_area(h).is_zero())) {
    return {pts.front(), pts.back()};
  }
  return h;
}

Polygon clip_halfplane(const Polygon& subject, const Vec2& a, const Vec2& b) {
  const Vec2 dir = b - a;
  Polygon out;
  const std::size_t n = subject.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2& p = subject[i];
    const Vec2& q = subject[(i + 1) % n];
    const Rational dp = cross(dir, p - a);
    const Rational dq = cross(dir, q - a);
    if (dp.sign() >= 0) out.push_back(p);
    if (dp.sign() * dq.sign() < 0) out.push_back(p + (dp / (dp - dq)) * (q - p));
  }
  return convex_hull(std::move(out));
}

Polygon clip_affine(const Polygon& poly, const Rational& alpha, const Rational& beta, const Rational& gamma) {
  Polygon out;
  const std::size_t n = poly.size();
  auto value = [&](const Vec2& p) { return alpha * p.x + beta * p.y + gamma; };
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2& p = poly[i];
    const Vec2& q = poly[(i + 1) % n];
    const Rational vp = value(p), vq = value(q);
    if (vp.sign() >= 0) out.push_back(p);
    if (vp.sign() * vq.sign() < 0) out.push_back(p + (vp / (vp - vq)) * (q - p));
  }
  return convex_hull(std::move(out));
}

namespace {

bool on_segment(const Vec2& a, const Vec2& b, const Vec2& p) {
  if (orient(a, b, p) != 0) return false;
  return min(a.x, b.x) <= p.x && p.x <= max(a.x, b.x) && min(a.y, b.y) <= p.y && p.y <= max(a.y, b.y);
}

Polygon segment_intersection(const Vec2& a, const Vec2& b, const Vec2& c, const Vec2& d) {
  const int o1 = orient(a, b, c), o2 = orient(a, b, d);
  if (o1 == 0 && o2 == 0) {
    // Collinear: overlap of parameter ranges along the dominant direction.
    Polygon pts;
    for (const Vec2& p : {a, b}) {
      if (on_segment(c, d, p)) pts.push_back(p);
    }
    for (const Vec2& p : {c, d}) {
      if (on_segment(a, b, p)) pts.push_back(p);
    }
    return convex_hull(std::move(pts));
  }
  const int o3 = orient(c, d, a), o4 = orient(c, d, b);
  if (o1 * o2 > 0 || o3 * o4 > 0) return {};
  const Rational dc = cross(b - a, c - a);
  const Rational dd = cross(b - a, d - a);
  return {c + (dc / (dc - dd)) * (d - c)};
}

}  // namespace

Polygon closed_intersection(const Polygon& p, const Polygon& q) {
  if (p.empty() || q.empty()) return {};
  if (q.size() >= 3) {
    Polygon r = convex_hull(p);
    for (std::size_t i = 0; i < q.size() && !r.empty(); ++i) r = clip_halfplane(r, q[i], q[(i + 1) % q.size()]);
    return r;
  }
  if (p.size() >= 3) return closed_intersection(q, p);
  if (p.size() == 1) {
    if (q.size() == 1) return p[0] == q[0] ? p : Polygon{};
    return on_segment(q[0], q[1], p[0]) ? p : Polygon{};
  }
  if (q.size() == 1) return closed_intersection(q, p);
  return segment_intersection(p[0], p[1], q[0], q[1]);
}

bool interiors_overlap(const Polygon& p, const Polygon& q) {
  auto separated_by = [](const Polygon& edges, const Polygon& other) {
    for (std::size_t i = 0; i < edges.size(); ++i) {
      const Vec2& a = edges[i];
      const Vec2& b = edges[(i + 1) % edges.size()];
      bool all_out = true;
      for (const auto& v : other) {
        if (orient(a, b, v) > 0) {
          all_out = false;
          break;
        }
      }
      if (all_out) return true;
    }
    return false;
  };
  return !separated_by(p, q) && !separated_by(q, p);
}

bool point_in_convex(const Polygon& ccw, const Vec2& x) {
  if (ccw.size() < 3) return !closed_intersection(ccw, {x}).empty();
  for (std::size_t i = 0; i < ccw.size(); ++i) {
    if (orient(ccw[i], ccw[(i + 1) % ccw.size()], x) < 0) return false;
  }
  return true;
}

LineKey line_key(const Vec2& p, const Vec2& q) {
  if (p == q) throw DegenerateError("line through a single point");
  Rational a = q.y - p.y;
  Rational b = p.x - q.x;
  Rational c = a * p.x + b * p.y;
  const Rational s = a.is_zero() ? b : a;
  return {a / s, b / s, c / s};
}

Vec2 line_direction(const LineKey& k) {
  if (k.b.is_zero()) return {0, 1};
  return {1, -k.a / k.b};
}

Rational line_param(const LineKey& k, const Vec2& p) { return k.b.is_zero() ? p.y : p.x; }

Vec2 line_point(const LineKey& k, const Rational& s) {
  if (k.b.is_zero()) return {k.c, s};
  return {s, (k.c - k.a * s) / k.b};
}

BoundingBox bbox(const Polygon& p) {
  BoundingBox b{1e300, 1e300, -1e300, -1e300};
  for (const auto& v : p) {
    const double x = v.x.to_double(), y = v.y.to_double();
    b.xmin = std::min(b.xmin, x);
    b.xmax = std::max(b.xmax, x);
    b.ymin = std::min(b.ymin, y);
    b.ymax = std::max(b.ymax, y);
  }
  // Pad to absorb rounding so exact-touching boxes still overlap.
  const double eps = 1e-12;
  b.xmin -= eps;
  b.ymin -= eps;
  b.xmax += eps;
  b.ymax += eps;
  return b;
}

std::vector<DirectedSegment> union_boundary(const std::vector<std::array<Vec2, 3>>& triangles) {
  struct Event {
    Rational s;
    int dl;
    int dr;
  };
  std::map<LineKey, std::vector<Event>> lines;
  for (const auto& t : triangles) {
    for (int i = 0; i < 3; ++i) {
      const Vec2& p = t[i];
      const Vec2& q = t[(i + 1) % 3];
      if (p == q) continue;
      const LineKey k = line_key(p, q);
      Rational sp = line_param(k, p), sq = line_param(k, q);
      auto& ev = lines[k];
      if (sp < sq) {
        ev.push_back({sp, 1, 0});
        ev.push_back({sq, -1, 0});
      } else {
        ev.push_back({sq, 0, 1});
        ev.push_back({sp, 0, -1});
      }
    }
  }
  std::vector<DirectedSegment> out;
  for (auto& [k, ev] : lines) {
    std::sort(ev.begin(), ev.end(), [](const Event& a, const Event& b) { return a.s < b.s; });
    int left = 0, right = 0;
    int state = 0;
    Rational start;
    auto close = [&](const Rational& s) {
      if (state == 1) out.push_back({line_point(k, start), line_point(k, s)});
      if (state == -1) out.push_back({line_point(k, s), line_point(k, start)});
    };
    for (std::size_t i = 0; i < ev.size();) {
      const Rational s = ev[i].s;
      while (i < ev.size() && ev[i].s == s) {
        left += ev[i].dl;
        right += ev[i].dr;
        ++i;
      }
      const int ns = (left > 0) == (right > 0) ? 0 : (left > 0 ? 1 : -1);
      if (ns != state) {
        close(s);
        state = ns;
        start = s;
      }
    }
  }
  return out;
}

namespace {

Rational y_at(const DirectedSegment& s, const Rational& x) {
  return s.from.y + (x - s.from.x) * (s.to.y - s.from.y) / (s.to.x - s.from.x);
}

std::array<Vec2, 3> canonical_rotation(std::array<Vec2, 3> t) {
  const auto it = std::min_element(t.begin(), t.end());
  std::rotate(t.begin(), it, t.end());
  return t;
}

}  // namespace

std::vector<std::array<Vec2, 3>> canonical_triangulation(const std::vector<std::array<Vec2, 3>>& triangles) {
  const auto boundary = union_boundary(triangles);
  std::vector<Rational> xs;
  std::vector<DirectedSegment> segs;
  for (const auto& s : boundary) {
    xs.push_back(s.from.x);
    xs.push_back(s.to.x);
    if (s.from.x != s.to.x) segs.push_back(s);
  }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

  struct Open {
    std::size_t bottom, top;
    Rational xl;
  };
  std::vector<std::array<Vec2, 3>> out;
  auto emit = [&](std::size_t bi, std::size_t ti, const Rational& xl, const Rational& xr) {
    const Vec2 bl{xl, y_at(segs[bi], xl)}, br{xr, y_at(segs[bi], xr)};
    const Vec2 tl{xl, y_at(segs[ti], xl)}, tr{xr, y_at(segs[ti], xr)};
    if (bl == tl) {
      out.push_back(canonical_rotation({bl, br, tr}));
    } else if (br == tr) {
      out.push_back(canonical_rotation({bl, br, tl}));
    } else {
      out.push_back(canonical_rotation({bl, br, tr}));
      out.push_back(canonical_rotation({bl, tr, tl}));
    }
  };

  std::map<std::pair<std::size_t, std::size_t>, Rational> open;
  for (std::size_t k = 0; k + 1 < xs.size(); ++k) {
    const Rational& x0 = xs[k];
    const Rational& x1 = xs[k + 1];
    const Rational mid = (x0 + x1) / Rational(2);
    std::vector<std::pair<Rational, std::size_t>> active;
    for (std::size_t i = 0; i < segs.size(); ++i) {
      const Rational lo = min(segs[i].from.x, segs[i].to.x);
      const Rational hi = max(segs[i].from.x, segs[i].to.x);
      if (lo <= x0 && x1 <= hi) active.emplace_back(y_at(segs[i], mid), i);
    }
    std::sort(active.begin(), active.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    if (active.size() % 2 != 0) throw Error("canonical_triangulation: inconsistent boundary");
    std::map<std::pair<std::size_t, std::size_t>, Rational> next;
    for (std::size_t j = 0; j < active.size(); j += 2) {
      const auto& b = segs[active[j].second];
      const auto& t = segs[active[j + 1].second];
      if (!(b.from.x < b.to.x) || !(t.from.x > t.to.x)) {
        throw Error("canonical_triangulation: boundary orientation mismatch");
      }
      const std::pair key{active[j].second, active[j + 1].second};
      auto it = open.find(key);
      next.emplace(key, it == open.end() ? x0 : it->second);
    }
    for (const auto& [key, xl] : open) {
      if (!next.count(key)) emit(key.first, key.second, xl, x0);
    }
    open = std::move(next);
  }
  if (!xs.empty()) {
    for (const auto& [key, xl] : open) emit(key.first, key.second, xl, xs.back());
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace plcube::plane
