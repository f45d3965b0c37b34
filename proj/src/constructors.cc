#include "plcube/constructors.h"

#include <algorithm>

#include "plcube/errors.h"
#include "plcube/geometry2d.h"

namespace plcube {

using plane::Affine2;
using plane::Polygon;
using plane::Vec2;

namespace {

RatPoint pt(const Rational& x, const Rational& y) { return RatPoint{x, y}; }

Cell tri_cell(const Vec2& a, const Vec2& b, const Vec2& c, const RatAffineMap& m) {
  return {Simplex({plane::to_point(a), plane::to_point(b), plane::to_point(c)}), m};
}

void fan_cells(const Polygon& poly, const RatAffineMap& m, std::vector<Cell>& out) {
  if (poly.size() < 3) return;
  for (std::size_t k = 1; k + 1 < poly.size(); ++k) out.push_back(tri_cell(poly[0], poly[k], poly[k + 1], m));
}

// Rotation by k quarter turns counterclockwise.
Affine2 quarter_turn(int k) {
  k = ((k % 4) + 4) % 4;
  static const Rational zero(0), one(1), minus(-1);
  switch (k) {
    case 0: return Affine2::identity();
    case 1: return {zero, minus, one, zero, zero, zero};
    case 2: return {minus, zero, zero, minus, zero, zero};
    default: return {zero, one, minus, zero, zero, zero};
  }
}

std::vector<Vec2> square_corners(const Rational& r) {
  return {{-r, -r}, {r, -r}, {r, r}, {-r, r}};
}

// Cells of the region between r I^n and I^n, all with the identity map.
std::vector<Cell> annulus_identity(std::size_t dim, const Rational& r) {
  std::vector<Cell> out;
  if (dim == 1) {
    out.push_back({Simplex({RatPoint{-1}, RatPoint{-r}}), RatAffineMap::identity(1)});
    out.push_back({Simplex({RatPoint{r}, RatPoint{1}}), RatAffineMap::identity(1)});
    return out;
  }
  const auto outer = square_corners(1);
  const auto inner = square_corners(r);
  for (std::size_t i = 0; i < 4; ++i) {
    const std::size_t j = (i + 1) % 4;
    out.push_back(tri_cell(outer[i], outer[j], inner[j], RatAffineMap::identity(2)));
    out.push_back(tri_cell(outer[i], inner[j], inner[i], RatAffineMap::identity(2)));
  }
  return out;
}

PLMap generic_of(const PLMap& f) { return f.is_suspension() ? f.as_generic() : f; }

// One join of x -> Mx on r I^2 to the identity on the boundary; nullopt when
// some quadrilateral of the join folds.
std::optional<PLMap> join_linear(const Affine2& m, const Rational& r) {
  const auto outer = square_corners(1);
  const auto inner = square_corners(r);
  std::vector<Cell> cells;
  const RatAffineMap lin = m.to_map();
  cells.push_back(tri_cell(inner[0], inner[1], inner[2], lin));
  cells.push_back(tri_cell(inner[0], inner[2], inner[3], lin));
  for (std::size_t i = 0; i < 4; ++i) {
    const std::size_t j = (i + 1) % 4;
    const std::array<Vec2, 4> src{inner[i], inner[j], outer[j], outer[i]};
    const std::array<Vec2, 4> dst{m.apply(inner[i]), m.apply(inner[j]), outer[j], outer[i]};
    bool placed = false;
    for (const auto& split : {std::array<int, 6>{0, 1, 2, 0, 2, 3}, std::array<int, 6>{0, 1, 3, 1, 2, 3}}) {
      bool ok = true;
      for (int t = 0; t < 2 && ok; ++t) {
        const int a = split[3 * t], b = split[3 * t + 1], c = split[3 * t + 2];
        const int so = plane::orient(src[a], src[b], src[c]);
        ok = so != 0 && so == plane::orient(dst[a], dst[b], dst[c]);
      }
      if (!ok) continue;
      for (int t = 0; t < 2; ++t) {
        const int a = split[3 * t], b = split[3 * t + 1], c = split[3 * t + 2];
        std::vector<RatPoint> s{plane::to_point(src[a]), plane::to_point(src[b]), plane::to_point(src[c])};
        std::vector<RatPoint> d{plane::to_point(dst[a]), plane::to_point(dst[b]), plane::to_point(dst[c])};
        cells.push_back({Simplex(s), RatAffineMap::from_vertices(s, d)});
      }
      placed = true;
      break;
    }
    if (!placed) return std::nullopt;
  }
  PLMap out(2, std::move(cells));
  if (!validate(out).passed) return std::nullopt;
  return out;
}

Rational shrink_until_inside(const Affine2& m, Rational r) {
  for (;;) {
    bool inside = true;
    for (const auto& c : square_corners(r)) {
      const Vec2 p = m.apply(c);
      if (!(abs(p.x) < Rational(1) && abs(p.y) < Rational(1))) inside = false;
    }
    if (inside) return r;
    r /= Rational(2);
  }
}

Affine2 linear2(const Rational& a, const Rational& b, const Rational& c, const Rational& d) {
  return {a, b, c, d, Rational(0), Rational(0)};
}

// Elementary factors with M = F_1 F_2 ... F_k; shears have |t| <= 1.
std::vector<Affine2> elementary_factors(const Affine2& m) {
  std::vector<Affine2> out;
  auto shear_u = [&](Rational t) {
    while (!t.is_zero()) {
      const Rational step = abs(t) > Rational(1) ? Rational(t.sign()) : t;
      out.push_back(linear2(1, step, 0, 1));
      t -= step;
    }
  };
  auto shear_l = [&](Rational t) {
    while (!t.is_zero()) {
      const Rational step = abs(t) > Rational(1) ? Rational(t.sign()) : t;
      out.push_back(linear2(1, 0, step, 1));
      t -= step;
    }
  };
  const Rational det = m.det();
  if (det != Rational(1)) out.push_back(linear2(det, 0, 0, 1));
  // S = diag(1/det, 1) M has determinant 1.
  Rational a = m.a / det, b = m.b / det, c = m.c, d = m.d;
  if (c.is_zero()) {
    // S = L(-1) (L(1) S)
    shear_l(Rational(-1));
    c = a;
    d = b + d;
  }
  shear_u((a - Rational(1)) / c);
  shear_l(c);
  shear_u((d - Rational(1)) / c);
  return out;
}

}  // namespace

PLMap pl1d(const std::vector<Node>& nodes) {
  if (nodes.size() < 2) throw DomainError("pl1d needs at least two nodes");
  if (nodes.front() != Node{-1, -1} || nodes.back() != Node{1, 1}) {
    throw DomainError("pl1d nodes must start at (-1,-1) and end at (1,1)");
  }
  std::vector<Cell> cells;
  for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
    const auto& [x0, y0] = nodes[i];
    const auto& [x1, y1] = nodes[i + 1];
    if (!(x0 < x1) || !(y0 < y1)) throw DomainError("pl1d nodes must be strictly increasing in x and y");
    const Rational slope = (y1 - y0) / (x1 - x0);
    cells.push_back({Simplex({RatPoint{x0}, RatPoint{x1}}), {RatMatrix{{slope}}, RatPoint{y0 - slope * x0}}});
  }
  return PLMap(1, std::move(cells));
}

PLMap alexander(const PLMap& f, const Rational& t) {
  if (t < Rational(0) || t > Rational(1)) throw DomainError("alexander parameter must lie in [0,1]");
  const std::size_t n = f.dim();
  if (n > 2) throw UnsupportedDimension("alexander is implemented in dimensions 1 and 2");
  if (t.is_zero()) return PLMap::identity(n);
  if (t == Rational(1)) return f;
  std::vector<Cell> cells;
  for (const auto& c : f.cells()) {
    std::vector<RatPoint> v;
    for (const auto& p : c.simplex.vertices()) v.push_back(p * t);
    cells.push_back({Simplex(std::move(v)), {c.map.linear, c.map.translation * t}});
  }
  for (auto& c : annulus_identity(n, t)) cells.push_back(std::move(c));
  return PLMap(n, std::move(cells));
}

PLMap suspend(const PLMap& f) { return PLMap::suspension_of(f); }

PLMap twist_root(const TwistSpec& spec) {
  const Rational& l0 = spec.inner;
  const Rational& frac = spec.fraction;
  if (!(Rational(0) < l0 && l0 < Rational(1))) throw DomainError("twist inner half-width must lie in (0,1)");
  if (frac.is_zero()) throw DomainError("twist fraction must be nonzero");
  const Rational one(1);
  const Rational c = Rational(8) * frac * l0 / (one - l0);
  const Rational inner_rate = Rational(8) * frac;

  // Right wedge {x >= |y|}: outer trapezoid and inner triangle.
  const Polygon annulus = plane::convex_hull({{l0, -l0}, {one, -one}, {one, one}, {l0, l0}});
  const Polygon core = plane::convex_hull({{0, 0}, {l0, -l0}, {l0, l0}});

  // On the square of half-width x, local coordinate y moves to
  // y + s(x) - 2 j x where j counts the quarter turns taken.
  struct Piece {
    Polygon poly;
    int j;
    Affine2 local;
  };
  std::vector<Piece> pieces;
  const long reach = floor_div(abs(inner_rate), one).num().get_si() + 2;
  for (long j = -reach; j <= reach; ++j) {
    const Rational tj(2 * j);
    // annulus: s(x) = c (1 - x); keep (2j-1)x - s <= y <= (2j+1)x - s
    Polygon p = plane::clip_affine(annulus, -(tj - one + c), one, c);
    p = plane::clip_affine(p, tj + one + c, -one, -c);
    if (p.size() >= 3) pieces.push_back({p, static_cast<int>(j), {one, 0, -tj - c, one, 0, c}});
    // core: s(x) = inner_rate x
    Polygon q = plane::clip_affine(core, -(tj - one - inner_rate), one, 0);
    q = plane::clip_affine(q, tj + one - inner_rate, -one, 0);
    if (q.size() >= 3) pieces.push_back({q, static_cast<int>(j), {one, 0, -tj + inner_rate, one, 0, 0}});
  }

  std::vector<Cell> cells;
  for (int k = 0; k < 4; ++k) {
    const Affine2 rk = quarter_turn(k);
    const Affine2 rk_inv = quarter_turn(-k);
    for (const auto& piece : pieces) {
      const Affine2 global = quarter_turn(k + piece.j).after(piece.local).after(rk_inv);
      Polygon poly;
      for (const auto& v : piece.poly) poly.push_back(rk.apply(v));
      fan_cells(plane::convex_hull(std::move(poly)), global.to_map(), cells);
    }
  }
  return PLMap(2, std::move(cells));
}

PLMap embed_support(const PLMap& f0, const Box& box) {
  const PLMap f = generic_of(f0);
  const std::size_t n = f.dim();
  if (box.lo.dim() != n || box.hi.dim() != n) throw DimensionError("box dimension does not match map");
  RatMatrix p(n, n), p_inv(n, n);
  RatPoint centre(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!(box.lo[i] < box.hi[i])) throw DomainError("box must have positive extent");
    if (box.lo[i] < Rational(-1) || box.hi[i] > Rational(1)) throw DomainError("box must lie inside the cube");
    p(i, i) = (box.hi[i] - box.lo[i]) / Rational(2);
    p_inv(i, i) = Rational(1) / p(i, i);
    centre[i] = (box.hi[i] + box.lo[i]) / Rational(2);
  }
  const RatAffineMap phi{p, centre};
  std::vector<Cell> cells;
  for (const auto& c : f.cells()) {
    const RatMatrix conj = p * c.map.linear * p_inv;
    RatPoint t = centre - conj * centre + p * c.map.translation;
    cells.push_back({c.simplex.mapped(phi), {conj, std::move(t)}});
  }
  if (n == 1) {
    if (Rational(-1) < box.lo[0]) cells.push_back({Simplex({RatPoint{-1}, box.lo}), RatAffineMap::identity(1)});
    if (box.hi[0] < Rational(1)) cells.push_back({Simplex({box.hi, RatPoint{1}}), RatAffineMap::identity(1)});
    return PLMap(1, std::move(cells));
  }
  const Rational &x0 = box.lo[0], &y0 = box.lo[1], &x1 = box.hi[0], &y1 = box.hi[1];
  const std::vector<Polygon> frame{
      {{-1, -1}, {1, -1}, {x1, y0}, {x0, y0}},
      {{1, -1}, {1, 1}, {x1, y1}, {x1, y0}},
      {{1, 1}, {-1, 1}, {x0, y1}, {x1, y1}},
      {{-1, 1}, {-1, -1}, {x0, y0}, {x0, y1}},
  };
  for (const auto& quad : frame) {
    // Skip degenerate triangles where the box touches the cube boundary.
    for (const auto& tri : {std::array<int, 3>{0, 1, 2}, std::array<int, 3>{0, 2, 3}}) {
      if (plane::orient(quad[tri[0]], quad[tri[1]], quad[tri[2]]) == 0) continue;
      cells.push_back(tri_cell(quad[tri[0]], quad[tri[1]], quad[tri[2]], RatAffineMap::identity(2)));
    }
  }
  return PLMap(2, std::move(cells));
}

Box figure2_left_square() { return {pt(Rational(-3, 8), Rational(-1, 8)), pt(Rational(-1, 8), Rational(1, 8))}; }
Box figure2_right_square() { return {pt(Rational(1, 8), Rational(-1, 8)), pt(Rational(3, 8), Rational(1, 8))}; }

Figure2 figure2_g() {
  const TwistSpec spec{Rational(1, 2), Rational(1, 12)};
  const PLMap h = twist_root(spec);
  PLMap f = twist_root({spec.inner, spec.fraction * Rational(6)});
  PLMap g = canonicalize(compose(embed_support(h, figure2_left_square()),
                                 embed_support(inverse(h), figure2_right_square())));
  return {std::move(f), std::move(g)};
}

PLMap linear_near_zero(const RatMatrix& m, const Rational& r) {
  if (m.rows() != 2 || m.cols() != 2) throw DimensionError("linear_near_zero expects a 2x2 matrix");
  if (m.det().sign() <= 0) throw DomainError("orientation: linear_near_zero needs det M > 0");
  if (!(Rational(0) < r && r < Rational(1))) throw DomainError("linear_near_zero radius must lie in (0,1)");
  const Affine2 lin = linear2(m(0, 0), m(0, 1), m(1, 0), m(1, 1));
  if (auto direct = join_linear(lin, shrink_until_inside(lin, r))) return *direct;
  // Fold: compose elementary factors, each joined at a smaller radius.
  PLMap acc = PLMap::identity(2);
  Rational radius = r;
  for (const auto& factor : elementary_factors(lin)) {
    radius /= Rational(2);
    auto piece = join_linear(factor, shrink_until_inside(factor, radius));
    if (!piece) throw Error("linear_near_zero: elementary factor failed to join");
    acc = canonicalize(compose(acc, *piece));
  }
  return acc;
}

PLMap embedded_shear() { return linear_near_zero(RatMatrix{{1, 1}, {0, 1}}, Rational(1, 4)); }

}  // namespace plcube
