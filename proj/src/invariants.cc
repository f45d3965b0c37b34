#include "plcube/invariants.h"

#include <algorithm>
#include <map>

#include "plcube/errors.h"
#include "plcube/geometry2d.h"

namespace plcube {

using plane::Polygon;
using plane::Vec2;
using Tri = std::array<Vec2, 3>;

namespace {

Polygon hull_of(const Simplex& s) {
  Polygon p;
  for (const auto& v : s.vertices()) p.push_back(plane::to_vec(v));
  return plane::convex_hull(std::move(p));
}

Simplex simplex_of(const Polygon& p) {
  std::vector<RatPoint> v;
  for (const auto& q : p) v.push_back(plane::to_point(q));
  return Simplex(std::move(v));
}

Tri ccw(const Simplex& s) {
  Tri t{plane::to_vec(s[0]), plane::to_vec(s[1]), plane::to_vec(s[2])};
  if (plane::orient(t[0], t[1], t[2]) < 0) std::swap(t[1], t[2]);
  return t;
}

// Pieces of a closed convex polygon (hull vertices) as simplices.
void add_convex(const Polygon& p, std::vector<Simplex>& out) {
  if (p.empty()) return;
  if (p.size() <= 2) {
    out.push_back(simplex_of(p));
    return;
  }
  for (std::size_t k = 1; k + 1 < p.size(); ++k) out.push_back(simplex_of({p[0], p[k], p[k + 1]}));
}

struct Interval {
  Rational lo, hi;
};

// Union of closed intervals, merging overlapping and touching ones.
std::vector<Interval> merge(std::vector<Interval> v) {
  std::sort(v.begin(), v.end(), [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
  std::vector<Interval> out;
  for (auto& i : v) {
    if (!out.empty() && i.lo <= out.back().hi) {
      out.back().hi = max(out.back().hi, i.hi);
    } else {
      out.push_back(std::move(i));
    }
  }
  return out;
}

// Parts of [lo, hi] not covered by positive-length pieces of `cover`.
std::vector<Interval> subtract(const Interval& base, std::vector<Interval> cover) {
  std::vector<Interval> out;
  Rational cur = base.lo;
  for (const auto& c : merge(std::move(cover))) {
    if (!(c.lo < c.hi)) continue;
    if (cur < c.lo) out.push_back({cur, min(c.lo, base.hi)});
    cur = max(cur, c.hi);
    if (cur >= base.hi) break;
  }
  if (cur < base.hi) out.push_back({cur, base.hi});
  return out;
}

Interval param_range(const plane::LineKey& k, const Polygon& seg) {
  Rational a = plane::line_param(k, seg.front()), b = plane::line_param(k, seg.back());
  if (b < a) std::swap(a, b);
  return {a, b};
}

// Parameter intervals of the line covered by closed triangles.
std::vector<Interval> covered_by_triangles(const plane::LineKey& k, const Polygon& seg, const std::vector<Tri>& tris) {
  std::vector<Interval> out;
  for (const auto& t : tris) {
    Polygon hit = plane::closed_intersection(seg, {t[0], t[1], t[2]});
    if (hit.size() == 2) out.push_back(param_range(k, hit));
  }
  return out;
}

PolyhedralSet normalize1(std::vector<Simplex> pieces) {
  std::vector<Interval> iv;
  std::vector<Rational> pts;
  for (const auto& s : pieces) {
    if (s.size() == 2) {
      iv.push_back({min(s[0][0], s[1][0]), max(s[0][0], s[1][0])});
    } else {
      pts.push_back(s[0][0]);
    }
  }
  PolyhedralSet out{1, {}};
  auto merged = merge(iv);
  for (const auto& i : merged) {
    if (i.lo < i.hi) {
      out.pieces.emplace_back(std::vector<RatPoint>{RatPoint{i.lo}, RatPoint{i.hi}});
    } else {
      pts.push_back(i.lo);
    }
  }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  for (const auto& p : pts) {
    const bool inside = std::any_of(merged.begin(), merged.end(), [&](const Interval& i) { return i.lo < i.hi && i.lo <= p && p <= i.hi; });
    if (!inside) out.pieces.emplace_back(std::vector<RatPoint>{RatPoint{p}});
  }
  return out;
}

PolyhedralSet normalize2(std::vector<Simplex> pieces) {
  std::vector<Tri> tris;
  std::map<plane::LineKey, std::vector<Interval>> lines;
  std::vector<Vec2> pts;
  for (const auto& s : pieces) {
    Polygon h = hull_of(s);
    if (h.size() >= 3) {
      for (std::size_t k = 1; k + 1 < h.size(); ++k) tris.push_back({h[0], h[k], h[k + 1]});
    } else if (h.size() == 2) {
      const auto key = plane::line_key(h[0], h[1]);
      lines[key].push_back(param_range(key, h));
    } else if (h.size() == 1) {
      pts.push_back(h[0]);
    }
  }
  PolyhedralSet out{2, {}};
  std::vector<Tri> area = tris.empty() ? tris : plane::canonical_triangulation(tris);
  std::vector<plane::BoundingBox> boxes;
  for (const auto& t : area) {
    out.pieces.push_back(simplex_of({t[0], t[1], t[2]}));
    boxes.push_back(plane::bbox({t[0], t[1], t[2]}));
  }
  std::vector<Polygon> segs;
  for (auto& [key, iv] : lines) {
    for (const auto& m : merge(iv)) {
      const Polygon seg{plane::line_point(key, m.lo), plane::line_point(key, m.hi)};
      const auto sb = plane::bbox(seg);
      std::vector<Tri> near;
      for (std::size_t i = 0; i < area.size(); ++i) {
        if (boxes[i].overlaps(sb)) near.push_back(area[i]);
      }
      for (const auto& r : subtract(m, covered_by_triangles(key, seg, near))) {
        if (r.lo < r.hi) segs.push_back({plane::line_point(key, r.lo), plane::line_point(key, r.hi)});
      }
    }
  }
  std::sort(segs.begin(), segs.end());
  for (const auto& s : segs) out.pieces.push_back(simplex_of(s));
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  for (const auto& p : pts) {
    bool inside = false;
    for (std::size_t i = 0; i < area.size() && !inside; ++i) inside = plane::point_in_convex({area[i][0], area[i][1], area[i][2]}, p);
    for (std::size_t i = 0; i < segs.size() && !inside; ++i) inside = plane::point_in_convex(segs[i], p);
    if (!inside) out.pieces.push_back(simplex_of({p}));
  }
  return out;
}

bool on_cube_side(const Polygon& seg) {
  for (std::size_t axis = 0; axis < 2; ++axis) {
    auto c = [&](const Vec2& v) { return axis == 0 ? v.x : v.y; };
    if (c(seg[0]) == c(seg[1]) && abs(c(seg[0])) == Rational(1)) return true;
  }
  return false;
}

// Fixed points of one cell: solve (A - I) x = -b on the closed simplex.
void cell_fixed_points(const Cell& c, std::size_t n, std::vector<Simplex>& out) {
  const auto& a = c.map.linear;
  const auto& b = c.map.translation;
  if (n == 1) {
    const Rational lo = min(c.simplex[0][0], c.simplex[1][0]), hi = max(c.simplex[0][0], c.simplex[1][0]);
    const Rational s = a(0, 0) - Rational(1);
    if (s.is_zero()) {
      if (b[0].is_zero()) out.push_back(c.simplex);
      return;
    }
    const Rational x = -b[0] / s;
    if (lo <= x && x <= hi) out.emplace_back(std::vector<RatPoint>{RatPoint{x}});
    return;
  }
  const Polygon tri = hull_of(c.simplex);
  const Rational m00 = a(0, 0) - Rational(1), m01 = a(0, 1), m10 = a(1, 0), m11 = a(1, 1) - Rational(1);
  const Rational r0 = -b[0], r1 = -b[1];
  const Rational det = m00 * m11 - m01 * m10;
  if (!det.is_zero()) {
    const Vec2 p{(r0 * m11 - m01 * r1) / det, (m00 * r1 - m10 * r0) / det};
    if (plane::point_in_convex(tri, p)) out.push_back(simplex_of({p}));
    return;
  }
  const bool row0 = !(m00.is_zero() && m01.is_zero());
  const bool row1 = !(m10.is_zero() && m11.is_zero());
  if (!row0 && !row1) {
    if (r0.is_zero() && r1.is_zero()) add_convex(tri, out);
    return;
  }
  // Rank one: the rows are proportional; the system is consistent iff the
  // augmented rows are too.
  const Rational &al = row0 ? m00 : m10, &be = row0 ? m01 : m11, &ga = row0 ? r0 : r1;
  const Rational &al2 = row0 ? m10 : m00, &be2 = row0 ? m11 : m01, &ga2 = row0 ? r1 : r0;
  if (!(al * be2 - be * al2).is_zero() || !(al * ga2 - ga * al2).is_zero() || !(be * ga2 - ga * be2).is_zero()) return;
  Polygon hit = plane::clip_affine(tri, al, be, -ga);
  hit = plane::clip_affine(hit, -al, -be, ga);
  if (!hit.empty()) out.push_back(simplex_of(hit));
}

std::vector<Vec2> segment_of(const Simplex& s) { return {plane::to_vec(s[0]), plane::to_vec(s[1])}; }

}  // namespace

Rational matrix_norm(const PLMap& f) {
  Rational d(0);
  for (const auto& c : f.cells()) d = max(d, c.map.linear.max_abs_entry());
  return d;
}

std::size_t cell_count(const PLMap& f) {
  if (f.dim() <= 2) return affine_region_count(f.is_suspension() ? f.as_generic() : f);
  return canonicalize(f).size();
}

std::size_t triangle_count(const PLMap& f) {
  return canonicalize(f.is_suspension() && f.dim() <= 2 ? f.as_generic() : f).size();
}

std::vector<Rational> breakpoints(const PLMap& f) {
  if (f.dim() != 1) throw DimensionError("breakpoints are defined for 1-dimensional maps");
  const PLMap c = canonicalize(f);
  std::vector<Rational> out;
  for (std::size_t i = 1; i < c.size(); ++i) out.push_back(c.cells()[i].simplex[0][0]);
  return out;
}

VolumeReport volume_check(const PLMap& f) {
  VolumeReport r;
  bool first = true;
  for (const auto& c : f.cells()) {
    const Rational d = c.map.linear.det();
    if (first || d > r.max_det) r.max_det = d;
    if (first || d < r.min_det) r.min_det = d;
    first = false;
    if (abs(d) != Rational(1)) r.preserves = false;
  }
  return r;
}

std::vector<Simplex> PolyhedralSet::of_dim(int d) const {
  std::vector<Simplex> out;
  for (const auto& p : pieces) {
    if (p.dim() == d) out.push_back(p);
  }
  return out;
}

PolyhedralSet normalize(std::size_t ambient, std::vector<Simplex> pieces) {
  if (ambient == 1) return normalize1(std::move(pieces));
  if (ambient == 2) return normalize2(std::move(pieces));
  throw UnsupportedDimension("polyhedral sets are supported in dimensions 1 and 2");
}

PolyhedralSet intersect(const PolyhedralSet& a, const PolyhedralSet& b) {
  if (a.ambient != b.ambient) throw DimensionError("intersect: dimension mismatch");
  std::vector<Simplex> out;
  if (a.ambient == 1) {
    for (const auto& p : a.pieces) {
      for (const auto& q : b.pieces) {
        const Rational lo = max(p[0][0], q[0][0]);
        const Rational hi = min(p[p.size() - 1][0], q[q.size() - 1][0]);
        if (lo < hi) out.emplace_back(std::vector<RatPoint>{RatPoint{lo}, RatPoint{hi}});
        else if (lo == hi) out.emplace_back(std::vector<RatPoint>{RatPoint{lo}});
      }
    }
    return normalize1(std::move(out));
  }
  std::vector<Polygon> bh;
  std::vector<plane::BoundingBox> bb;
  for (const auto& q : b.pieces) {
    bh.push_back(hull_of(q));
    bb.push_back(plane::bbox(bh.back()));
  }
  for (const auto& p : a.pieces) {
    const Polygon ph = hull_of(p);
    const auto pb = plane::bbox(ph);
    for (std::size_t j = 0; j < bh.size(); ++j) {
      if (!pb.overlaps(bb[j])) continue;
      add_convex(plane::closed_intersection(ph, bh[j]), out);
    }
  }
  return normalize2(std::move(out));
}

bool is_subset(const PolyhedralSet& a, const PolyhedralSet& b) {
  if (a.ambient != b.ambient) throw DimensionError("is_subset: dimension mismatch");
  if (a.ambient == 1) {
    for (const auto& p : a.pieces) {
      const Rational lo = p[0][0], hi = p[p.size() - 1][0];
      const bool covered = std::any_of(b.pieces.begin(), b.pieces.end(), [&](const Simplex& q) {
        return q[0][0] <= lo && hi <= q[q.size() - 1][0];
      });
      if (!covered) return false;
    }
    return true;
  }
  std::vector<Tri> btris;
  std::vector<Polygon> bsegs, bpts;
  for (const auto& q : b.pieces) {
    if (q.dim() == 2) btris.push_back(ccw(q));
    else if (q.dim() == 1) bsegs.push_back(segment_of(q));
    else bpts.push_back({plane::to_vec(q[0])});
  }
  for (const auto& p : a.pieces) {
    if (p.dim() == 2) {
      const Polygon ph = hull_of(p);
      Rational inside(0);
      for (const auto& t : btris) {
        const Polygon hit = plane::closed_intersection(ph, {t[0], t[1], t[2]});
        if (hit.size() >= 3) inside += plane::twice_area(hit);
      }
      if (inside != plane::twice_area(ph)) return false;
    } else if (p.dim() == 1) {
      const Polygon seg = segment_of(p);
      const auto key = plane::line_key(seg[0], seg[1]);
      auto cover = covered_by_triangles(key, seg, btris);
      for (const auto& s : bsegs) {
        if (plane::line_key(s[0], s[1]) == key) cover.push_back(param_range(key, s));
      }
      if (!subtract(param_range(key, seg), cover).empty()) return false;
    } else {
      const Vec2 x = plane::to_vec(p[0]);
      bool found = false;
      for (const auto& t : btris) found = found || plane::point_in_convex({t[0], t[1], t[2]}, x);
      for (const auto& s : bsegs) found = found || plane::point_in_convex(s, x);
      for (const auto& s : bpts) found = found || s[0] == x;
      if (!found) return false;
    }
  }
  return true;
}

PolyhedralSet frontier(const PolyhedralSet& s) {
  std::vector<Simplex> out;
  if (s.ambient == 1) {
    for (const auto& p : s.pieces) {
      for (const auto& v : p.vertices()) {
        if (p.size() == 1 || abs(v[0]) != Rational(1)) out.emplace_back(std::vector<RatPoint>{v});
      }
    }
    return normalize1(std::move(out));
  }
  std::vector<Tri> tris;
  for (const auto& p : s.pieces) {
    if (p.dim() == 2) tris.push_back(ccw(p));
    else out.push_back(p);
  }
  for (const auto& seg : plane::union_boundary(tris)) {
    Polygon e{seg.from, seg.to};
    if (on_cube_side(e)) continue;
    std::sort(e.begin(), e.end());
    out.push_back(simplex_of(e));
  }
  return normalize2(std::move(out));
}

PolyhedralSet fixed_set(const PLMap& f0) {
  const PLMap f = f0.is_suspension() && f0.dim() <= 2 ? f0.as_generic() : f0;
  if (f.dim() > 2) throw UnsupportedDimension("fixed sets are computed in dimensions 1 and 2");
  std::vector<Simplex> pieces;
  for (const auto& c : f.cells()) cell_fixed_points(c, f.dim(), pieces);
  return normalize(f.dim(), std::move(pieces));
}

PolyhedralSet frontier(const PLMap& f) { return frontier(fixed_set(f)); }

GroupFixedSet group_fixed_set(const std::vector<PLMap>& gens) {
  if (gens.empty()) throw DomainError("group_fixed_set needs at least one generator");
  GroupFixedSet r;
  r.fixed = fixed_set(gens.front());
  std::vector<Simplex> union_frontiers;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (gens[i].dim() != gens.front().dim()) throw DimensionError("generators of mixed dimension");
    const PolyhedralSet fi = i == 0 ? r.fixed : fixed_set(gens[i]);
    if (i > 0) r.fixed = intersect(r.fixed, fi);
    const auto fr = frontier(fi);
    union_frontiers.insert(union_frontiers.end(), fr.pieces.begin(), fr.pieces.end());
  }
  r.frontier = frontier(r.fixed);
  r.frontier_contained = is_subset(r.frontier, normalize(r.fixed.ambient, std::move(union_frontiers)));
  return r;
}

namespace {

// Cell of f whose interior lies on the side `dir` of the point p, assuming p
// lies in no cell vertex and on no cell edge transverse to the tangent.
const Cell& side_cell(const PLMap& f, const RatPoint& p, const RatPoint& dir) {
  for (const auto& c : f.cells()) {
    if (!c.simplex.contains(p)) continue;
    if (f.dim() == 1) {
      const Rational lo = min(c.simplex[0][0], c.simplex[1][0]);
      const Rational hi = max(c.simplex[0][0], c.simplex[1][0]);
      if ((dir[0].sign() > 0 && p[0] < hi) || (dir[0].sign() < 0 && lo < p[0])) return c;
      continue;
    }
    // p in the interior of the triangle or of one of its edges: the cell is on
    // the side of dir if the point p + eps dir stays inside.
    const Tri t = ccw(c.simplex);
    const Vec2 x = plane::to_vec(p), d = plane::to_vec(dir);
    bool ok = true;
    for (int i = 0; i < 3 && ok; ++i) {
      const Vec2& a = t[i];
      const Vec2& b = t[(i + 1) % 3];
      if (plane::orient(a, b, x) == 0 && plane::cross(b - a, d).sign() < 0) ok = false;
    }
    if (ok) return c;
  }
  throw NotFoundError("no cell on the requested side of " + p.str());
}

bool admissible(const std::vector<PLMap>& gens, const Vec2& x, const Vec2& tangent) {
  for (const auto& g : gens) {
    for (const auto& c : g.cells()) {
      const Tri t = ccw(c.simplex);
      for (int i = 0; i < 3; ++i) {
        const Vec2& a = t[i];
        const Vec2& b = t[(i + 1) % 3];
        if (x == a) return false;
        if (plane::cross(b - a, tangent).is_zero()) continue;
        if (plane::point_in_convex({a, b}, x)) return false;
      }
    }
  }
  return true;
}

std::vector<Rational> primitive_direction(const Vec2& d) {
  // Scale to coprime integers with the first nonzero entry positive.
  mpz_class l = lcm(d.x.den(), d.y.den());
  mpz_class a = mpq_class(d.x.mpq() * l).get_num(), b = mpq_class(d.y.mpq() * l).get_num();
  mpz_class g = gcd(a, b);
  a /= g;
  b /= g;
  if (a < 0 || (a == 0 && b < 0)) {
    a = -a;
    b = -b;
  }
  return {Rational(mpq_class(a)), Rational(mpq_class(b))};
}

}  // namespace

WitnessReport indicability_witness(const std::vector<PLMap>& gens_in, const std::optional<RatPoint>& preferred) {
  if (gens_in.empty()) throw DomainError("indicability_witness needs generators");
  std::vector<PLMap> gens;
  for (const auto& g : gens_in) gens.push_back(g.is_suspension() && g.dim() <= 2 ? g.as_generic() : g);
  if (std::all_of(gens.begin(), gens.end(), [](const PLMap& g) { return is_identity(g); })) {
    throw DomainError("indicability_witness: all generators are the identity");
  }
  const std::size_t n = gens.front().dim();
  const GroupFixedSet fix = group_fixed_set(gens);
  WitnessReport r;

  if (n == 1) {
    const auto pts = fix.frontier.of_dim(0);
    if (pts.empty()) throw Error("frontier of the fixed set has no points");
    r.point = pts.front()[0];
    if (preferred) {
      for (const auto& p : pts) {
        if (p[0] == *preferred) r.point = p[0];
      }
    }
    RatPoint dir{Rational(r.point[0] < Rational(1) ? 1 : -1)};
    auto moved = [&](const RatPoint& d) {
      return std::any_of(gens.begin(), gens.end(), [&](const PLMap& g) { return !side_cell(g, r.point, d).map.is_identity(); });
    };
    if (!moved(dir) && abs(r.point[0]) != Rational(1)) dir = RatPoint{-dir[0]};
    r.transversal = dir.coords();
    for (const auto& g : gens) r.per_generator.push_back({{}, side_cell(g, r.point, dir).map.linear(0, 0)});
  } else if (n == 2) {
    auto segs = fix.frontier.of_dim(1);
    if (segs.empty()) throw Error("frontier of the fixed set has no codimension-1 piece");
    std::size_t pick = 0;
    if (preferred) {
      const Vec2 want = plane::to_vec(*preferred);
      for (std::size_t i = 0; i < segs.size(); ++i) {
        if (plane::point_in_convex(segment_of(segs[i]), want)) {
          pick = i;
          break;
        }
      }
    }
    const Vec2 a = plane::to_vec(segs[pick][0]), b = plane::to_vec(segs[pick][1]);
    const auto t = primitive_direction(b - a);
    const Vec2 tv{t[0], t[1]};
    std::optional<Vec2> x;
    if (preferred && plane::point_in_convex({a, b}, plane::to_vec(*preferred)) && plane::to_vec(*preferred) != a &&
        plane::to_vec(*preferred) != b && admissible(gens, plane::to_vec(*preferred), tv)) {
      x = plane::to_vec(*preferred);
    }
    // Dyadic scan 1/2, 1/4, 3/4, 1/8, 3/8, ...
    for (long den = 2; !x && den <= (1L << 40); den *= 2) {
      for (long num = 1; num < den && !x; num += 2) {
        const Vec2 cand = a + Rational(num, den) * (b - a);
        if (admissible(gens, cand, tv)) x = cand;
      }
    }
    if (!x) throw Error("no admissible witness point found");
    r.point = plane::to_point(*x);
    r.tangent = t;
    // First standard basis vector transverse to the tangent.
    const std::size_t k = t[1].is_zero() ? 1 : 0;
    RatPoint e(2);
    e[k] = Rational(1);
    auto moved = [&](const RatPoint& d) {
      return std::any_of(gens.begin(), gens.end(), [&](const PLMap& g) { return !side_cell(g, r.point, d).map.is_identity(); });
    };
    const bool plus_inside = r.point[k] < Rational(1);
    if (!(plus_inside && moved(e))) e[k] = Rational(-1);
    r.transversal = e.coords();
    const RatPoint e_unit = [&] {
      RatPoint u(2);
      u[k] = Rational(1);
      return u;
    }();
    for (const auto& g : gens) {
      const auto& m = side_cell(g, r.point, e).map.linear;
      if (m * RatPoint{t[0], t[1]} != RatPoint{t[0], t[1]}) throw Error("generator does not fix the frontier line");
      // A e_k = a e_k + V t
      const RatPoint img = m * e_unit;
      const std::size_t other = 1 - k;
      const Rational v = img[other] / t[other];
      const Rational av = img[k] - v * t[k];
      r.per_generator.push_back({{v}, av});
    }
  } else {
    throw UnsupportedDimension("indicability_witness supports dimensions 1 and 2");
  }
  r.nontrivial = std::any_of(r.per_generator.begin(), r.per_generator.end(), [](const GermData& d) {
    return d.a != Rational(1) || std::any_of(d.v.begin(), d.v.end(), [](const Rational& x) { return !x.is_zero(); });
  });
  return r;
}

}  // namespace plcube
