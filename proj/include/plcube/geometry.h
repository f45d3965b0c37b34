#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "plcube/rational.h"

namespace plcube {

// A point of R^n with exact coordinates.
class RatPoint {
 public:
  RatPoint() = default;
  explicit RatPoint(std::size_t dim) : c_(dim) {}
  RatPoint(std::initializer_list<Rational> coords) : c_(coords) {}
  explicit RatPoint(std::vector<Rational> coords) : c_(std::move(coords)) {}

  std::size_t dim() const { return c_.size(); }
  const Rational& operator[](std::size_t i) const { return c_[i]; }
  Rational& operator[](std::size_t i) { return c_[i]; }
  const std::vector<Rational>& coords() const { return c_; }

  RatPoint& operator+=(const RatPoint& o);
  RatPoint& operator-=(const RatPoint& o);
  RatPoint& operator*=(const Rational& s);
  friend RatPoint operator+(RatPoint a, const RatPoint& b) { return a += b; }
  friend RatPoint operator-(RatPoint a, const RatPoint& b) { return a -= b; }
  friend RatPoint operator*(RatPoint a, const Rational& s) { return a *= s; }
  friend RatPoint operator*(const Rational& s, RatPoint a) { return a *= s; }

  friend bool operator==(const RatPoint&, const RatPoint&) = default;
  friend std::strong_ordering operator<=>(const RatPoint& a, const RatPoint& b) {
    return a.c_ <=> b.c_;
  }

  std::string str() const;

 private:
  std::vector<Rational> c_;
};

// Sup norm; the cube I^n is its closed unit ball.
Rational linf_norm(const RatPoint& p);
bool in_cube(const RatPoint& p);
bool on_cube_boundary(const RatPoint& p);

class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
  RatMatrix(std::initializer_list<std::initializer_list<Rational>> rows);
  static RatMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
  Rational& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }

  RatMatrix operator*(const RatMatrix& o) const;
  RatPoint operator*(const RatPoint& x) const;
  friend bool operator==(const RatMatrix&, const RatMatrix&) = default;

  Rational det() const;
  // Throws DegenerateError when singular.
  RatMatrix inverse() const;
  bool is_identity() const;
  // max_ij |M_ij|
  Rational max_abs_entry() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> a_;
};

// x -> linear * x + translation
struct RatAffineMap {
  RatMatrix linear;
  RatPoint translation;

  static RatAffineMap identity(std::size_t n);
  // The unique affine map sending src[i] to dst[i]; src must be an
  // affinely independent list of n+1 points in R^n.
  static RatAffineMap from_vertices(std::span<const RatPoint> src, std::span<const RatPoint> dst);

  std::size_t dim() const { return translation.dim(); }
  RatPoint apply(const RatPoint& x) const;
  // (*this) o other
  RatAffineMap after(const RatAffineMap& other) const;
  RatAffineMap inverse() const;
  bool is_identity() const;
  friend bool operator==(const RatAffineMap&, const RatAffineMap&) = default;
};

// Simplex with explicit orientation: the sign of det[v1-v0, ..., vk-v0]
// when k equals the ambient dimension, 0 for lower-dimensional faces.
class Simplex {
 public:
  Simplex() = default;
  explicit Simplex(std::vector<RatPoint> vertices);

  const std::vector<RatPoint>& vertices() const { return v_; }
  const RatPoint& operator[](std::size_t i) const { return v_[i]; }
  std::size_t size() const { return v_.size(); }
  int dim() const { return static_cast<int>(v_.size()) - 1; }
  std::size_t ambient_dim() const { return v_.empty() ? 0 : v_[0].dim(); }
  int orientation() const { return orientation_; }
  bool full_dimensional() const { return orientation_ != 0; }

  // Signed volume times dim!; zero when degenerate or lower-dimensional.
  Rational signed_scaled_volume() const;
  bool contains(const RatPoint& x) const;  // closed simplex
  Simplex mapped(const RatAffineMap& m) const;

  friend bool operator==(const Simplex& a, const Simplex& b) { return a.v_ == b.v_; }

 private:
  std::vector<RatPoint> v_;
  int orientation_ = 0;
};

// Interval (dim 1) or convex polygon (dim 2), vertices in canonical order:
// lexicographically least vertex first, then counterclockwise.
struct ConvexPolytope {
  int dim = 0;
  std::vector<RatPoint> vertices;

  static ConvexPolytope interval(const Rational& a, const Rational& b);
  static ConvexPolytope polygon(std::vector<RatPoint> points);
  friend bool operator==(const ConvexPolytope&, const ConvexPolytope&) = default;
};

Rational simplex_volume(const Simplex& s);
Rational polytope_volume(const ConvexPolytope& p);
// Interior intersection; nullopt when the interiors are disjoint (shared
// edges and points count as empty).
std::optional<ConvexPolytope> convex_intersect(const ConvexPolytope& p, const ConvexPolytope& q);
std::vector<Simplex> fan_triangulate(const ConvexPolytope& p);
// Lowest index i with x in the closed simplex cells[i].
std::size_t point_locate(std::span<const Simplex> cells, const RatPoint& x);

}  // namespace plcube
