#include "plcube/geometry.h"

#include <algorithm>
#include <sstream>

#include "plcube/errors.h"
#include "plcube/geometry2d.h"

namespace plcube {

namespace {

void require_same_dim(std::size_t a, std::size_t b) {
  if (a != b) throw DimensionError("dimension mismatch: " + std::to_string(a) + " vs " + std::to_string(b));
}

// Solves the n x k system cols * lambda = rhs exactly. Returns nullopt when
// inconsistent; free variables (rank deficiency) are set to zero.
std::optional<std::vector<Rational>> solve_columns(std::vector<std::vector<Rational>> rows, std::size_t k) {
  const std::size_t n = rows.size();
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < k && r < n; ++c) {
    std::size_t p = r;
    while (p < n && rows[p][c].is_zero()) ++p;
    if (p == n) continue;
    std::swap(rows[p], rows[r]);
    const Rational inv = Rational(1) / rows[r][c];
    for (std::size_t j = c; j <= k; ++j) rows[r][j] *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == r || rows[i][c].is_zero()) continue;
      const Rational f = rows[i][c];
      for (std::size_t j = c; j <= k; ++j) rows[i][j] -= f * rows[r][j];
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < n; ++i) {
    if (!rows[i][k].is_zero()) return std::nullopt;
  }
  std::vector<Rational> sol(k);
  for (std::size_t i = 0; i < r; ++i) sol[pivot_col[i]] = rows[i][k];
  return sol;
}

}  // namespace

RatPoint& RatPoint::operator+=(const RatPoint& o) {
  require_same_dim(dim(), o.dim());
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

RatPoint& RatPoint::operator-=(const RatPoint& o) {
  require_same_dim(dim(), o.dim());
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

RatPoint& RatPoint::operator*=(const Rational& s) {
  for (auto& x : c_) x *= s;
  return *this;
}

std::string RatPoint::str() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < c_.size(); ++i) os << (i ? ", " : "") << c_[i];
  os << ')';
  return os.str();
}

Rational linf_norm(const RatPoint& p) {
  Rational m(0);
  for (const auto& x : p.coords()) m = max(m, abs(x));
  return m;
}

bool in_cube(const RatPoint& p) { return linf_norm(p) <= Rational(1); }

bool on_cube_boundary(const RatPoint& p) { return linf_norm(p) == Rational(1); }

RatMatrix::RatMatrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DimensionError("ragged matrix literal");
    a_.insert(a_.end(), r.begin(), r.end());
  }
}

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Rational(1);
  return m;
}

RatMatrix RatMatrix::operator*(const RatMatrix& o) const {
  require_same_dim(cols_, o.rows_);
  RatMatrix r(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& x = (*this)(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) r(i, j) += x * o(k, j);
    }
  }
  return r;
}

RatPoint RatMatrix::operator*(const RatPoint& x) const {
  require_same_dim(cols_, x.dim());
  RatPoint r(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) r[i] += (*this)(i, j) * x[j];
  }
  return r;
}

Rational RatMatrix::det() const {
  if (rows_ != cols_) throw DimensionError("determinant of a non-square matrix");
  const std::size_t n = rows_;
  if (n == 1) return a_[0];
  if (n == 2) return a_[0] * a_[3] - a_[1] * a_[2];
  std::vector<Rational> m = a_;
  Rational d(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p * n + c].is_zero()) ++p;
    if (p == n) return Rational(0);
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m[p * n + j], m[c * n + j]);
      d = -d;
    }
    d *= m[c * n + c];
    const Rational inv = Rational(1) / m[c * n + c];
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m[i * n + c].is_zero()) continue;
      const Rational f = m[i * n + c] * inv;
      for (std::size_t j = c; j < n; ++j) m[i * n + j] -= f * m[c * n + j];
    }
  }
  return d;
}

RatMatrix RatMatrix::inverse() const {
  if (rows_ != cols_) throw DimensionError("inverse of a non-square matrix");
  const std::size_t n = rows_;
  RatMatrix inv(n, n);
  for (std::size_t col = 0; col < n; ++col) {
    std::vector<std::vector<Rational>> rows(n, std::vector<Rational>(n + 1));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) rows[i][j] = (*this)(i, j);
      rows[i][n] = Rational(i == col ? 1 : 0);
    }
    if (det().is_zero()) throw DegenerateError("singular matrix");
    auto sol = solve_columns(std::move(rows), n);
    for (std::size_t i = 0; i < n; ++i) inv(i, col) = (*sol)[i];
  }
  return inv;
}

bool RatMatrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if ((*this)(i, j) != Rational(i == j ? 1 : 0)) return false;
    }
  }
  return true;
}

Rational RatMatrix::max_abs_entry() const {
  Rational m(0);
  for (const auto& x : a_) m = max(m, abs(x));
  return m;
}

RatAffineMap RatAffineMap::identity(std::size_t n) { return {RatMatrix::identity(n), RatPoint(n)}; }

RatAffineMap RatAffineMap::from_vertices(std::span<const RatPoint> src, std::span<const RatPoint> dst) {
  if (src.size() != dst.size() || src.empty()) throw DimensionError("vertex lists differ in length");
  const std::size_t n = src[0].dim();
  if (src.size() != n + 1) throw DimensionError("affine map needs n+1 vertices");
  // Columns: differences from the first vertex.
  RatMatrix s(n, n);
  RatMatrix d(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      s(i, j) = src[j + 1][i] - src[0][i];
      d(i, j) = dst[j + 1][i] - dst[0][i];
    }
  }
  RatMatrix lin = d * s.inverse();
  RatPoint t = dst[0] - lin * src[0];
  return {std::move(lin), std::move(t)};
}

RatPoint RatAffineMap::apply(const RatPoint& x) const { return linear * x + translation; }

RatAffineMap RatAffineMap::after(const RatAffineMap& other) const {
  return {linear * other.linear, linear * other.translation + translation};
}

RatAffineMap RatAffineMap::inverse() const {
  RatMatrix inv = linear.inverse();
  RatPoint t = inv * translation;
  t *= Rational(-1);
  return {std::move(inv), std::move(t)};
}

bool RatAffineMap::is_identity() const {
  if (!linear.is_identity()) return false;
  for (const auto& x : translation.coords()) {
    if (!x.is_zero()) return false;
  }
  return true;
}

Simplex::Simplex(std::vector<RatPoint> vertices) : v_(std::move(vertices)) {
  if (v_.empty()) throw DimensionError("empty simplex");
  const std::size_t n = v_[0].dim();
  for (const auto& p : v_) require_same_dim(n, p.dim());
  if (v_.size() == n + 1) orientation_ = signed_scaled_volume().sign();
}

Rational Simplex::signed_scaled_volume() const {
  const std::size_t n = ambient_dim();
  if (v_.size() != n + 1) return Rational(0);
  RatMatrix m(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) m(i, j) = v_[j + 1][i] - v_[0][i];
  }
  return m.det();
}

bool Simplex::contains(const RatPoint& x) const {
  require_same_dim(ambient_dim(), x.dim());
  const std::size_t n = ambient_dim();
  if (n == 1 && v_.size() == 2) {
    const auto& a = v_[0][0];
    const auto& b = v_[1][0];
    return min(a, b) <= x[0] && x[0] <= max(a, b);
  }
  if (n == 2 && v_.size() == 3 && orientation_ != 0) {
    const plane::Vec2 p = plane::to_vec(x);
    const plane::Vec2 a = plane::to_vec(v_[0]);
    const plane::Vec2 b = plane::to_vec(v_[1]);
    const plane::Vec2 c = plane::to_vec(v_[2]);
    const int s = orientation_;
    return plane::orient(a, b, p) * s >= 0 && plane::orient(b, c, p) * s >= 0 &&
           plane::orient(c, a, p) * s >= 0;
  }
  const std::size_t k = v_.size() - 1;
  std::vector<std::vector<Rational>> rows(n, std::vector<Rational>(k + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < k; ++j) rows[i][j] = v_[j + 1][i] - v_[0][i];
    rows[i][k] = x[i] - v_[0][i];
  }
  auto lam = solve_columns(std::move(rows), k);
  if (!lam) return false;
  Rational total(0);
  for (const auto& l : *lam) {
    if (l.sign() < 0) return false;
    total += l;
  }
  return total <= Rational(1);
}

Simplex Simplex::mapped(const RatAffineMap& m) const {
  std::vector<RatPoint> w;
  w.reserve(v_.size());
  for (const auto& p : v_) w.push_back(m.apply(p));
  return Simplex(std::move(w));
}

ConvexPolytope ConvexPolytope::interval(const Rational& a, const Rational& b) {
  if (a == b) throw DegenerateError("zero-length interval");
  return {1, {RatPoint{min(a, b)}, RatPoint{max(a, b)}}};
}

ConvexPolytope ConvexPolytope::polygon(std::vector<RatPoint> points) {
  plane::Polygon pts;
  pts.reserve(points.size());
  for (const auto& p : points) {
    require_same_dim(2, p.dim());
    pts.push_back(plane::to_vec(p));
  }
  ConvexPolytope out{2, {}};
  for (const auto& v : plane::convex_hull(std::move(pts))) out.vertices.push_back(plane::to_point(v));
  return out;
}

Rational simplex_volume(const Simplex& s) {
  const Rational scaled = s.signed_scaled_volume();
  if (scaled.is_zero()) throw DegenerateError("degenerate simplex has zero volume");
  Rational fact(1);
  for (int i = 2; i <= s.dim(); ++i) fact *= Rational(i);
  return abs(scaled) / fact;
}

Rational polytope_volume(const ConvexPolytope& p) {
  if (p.dim == 1) return p.vertices.at(1)[0] - p.vertices.at(0)[0];
  plane::Polygon poly;
  for (const auto& v : p.vertices) poly.push_back(plane::to_vec(v));
  return abs(plane::twice_area(poly)) / Rational(2);
}

std::optional<ConvexPolytope> convex_intersect(const ConvexPolytope& p, const ConvexPolytope& q) {
  if (p.dim != q.dim) throw DimensionError("convex_intersect of mixed dimensions");
  if (p.dim == 1) {
    const Rational lo = max(p.vertices[0][0], q.vertices[0][0]);
    const Rational hi = min(p.vertices[1][0], q.vertices[1][0]);
    if (!(lo < hi)) return std::nullopt;
    return ConvexPolytope::interval(lo, hi);
  }
  if (p.dim != 2) throw UnsupportedDimension("convex_intersect supports dimensions 1 and 2");
  plane::Polygon a, b;
  for (const auto& v : p.vertices) a.push_back(plane::to_vec(v));
  for (const auto& v : q.vertices) b.push_back(plane::to_vec(v));
  plane::Polygon r = plane::closed_intersection(a, b);
  if (r.size() < 3) return std::nullopt;
  ConvexPolytope out{2, {}};
  for (const auto& v : r) out.vertices.push_back(plane::to_point(v));
  return out;
}

std::vector<Simplex> fan_triangulate(const ConvexPolytope& p) {
  if (p.dim == 1) return {Simplex(p.vertices)};
  if (p.dim != 2) throw UnsupportedDimension("fan_triangulate supports dimensions 1 and 2");
  if (p.vertices.size() < 3 || polytope_volume(p).is_zero()) {
    throw DegenerateError("cannot triangulate a zero-area polygon");
  }
  std::vector<Simplex> out;
  for (std::size_t i = 1; i + 1 < p.vertices.size(); ++i) {
    out.emplace_back(std::vector<RatPoint>{p.vertices[0], p.vertices[i], p.vertices[i + 1]});
  }
  return out;
}

std::size_t point_locate(std::span<const Simplex> cells, const RatPoint& x) {
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (cells[i].contains(x)) return i;
  }
  throw NotFoundError("point " + x.str() + " lies in no cell");
}

}  // namespace plcube
