#pragma once

#include <array>
#include <vector>

#include "plcube/errors.h"
#include "plcube/plmap.h"

namespace plcube {

// +1, 0 or -1. Zero only for the identity.
int onedim_sign(const PLMap& f);
// Sign of inverse(f) o g: -1 when f < g, 0 when equal, +1 when f > g.
int onedim_compare(const PLMap& f, const PLMap& g);

// A linear ray through the origin, stored as a primitive integer vector.
class Ray {
 public:
  Ray(const Rational& x, const Rational& y);
  explicit Ray(const RatPoint& v) : Ray(v[0], v[1]) {}

  const Rational& x() const { return x_; }
  const Rational& y() const { return y_; }
  RatPoint vec() const { return RatPoint{x_, y_}; }
  // Position on the circle, compared by half-plane then cross product.
  bool angle_less(const Ray& o) const;

  friend bool operator==(const Ray&, const Ray&) = default;

 private:
  Rational x_, y_;
};

Ray operator*(const RatMatrix& m, const Ray& r);

// +1 counterclockwise, -1 clockwise, 0 if two rays coincide.
int ray_circular_order(const Ray& a, const Ray& b, const Ray& c);

// The alternating sum e(s1,s2,s3) - e(s0,s2,s3) + e(s0,s1,s3) - e(s0,s1,s2)
// vanishes. e is opaque; the quadruple must have distinct entries.
template <class T, class E>
bool cocycle_check(E&& e, const std::array<T, 4>& s) {
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (s[i] == s[j]) throw DomainError("cocycle_check: quadruple has a repeated element");
  const int sum = e(s[1], s[2], s[3]) - e(s[0], s[2], s[3]) + e(s[0], s[1], s[3]) - e(s[0], s[1], s[2]);
  return sum == 0;
}

// Piecewise projective map of the circle of rays. Arcs run counterclockwise
// from start to end and are listed in circle order beginning at the arc
// containing (1,0). A single arc with start == end covers the whole circle.
struct CircleMapPP {
  struct Arc {
    Ray start, end;
    RatMatrix m;
    friend bool operator==(const Arc&, const Arc&) = default;
  };
  std::vector<Arc> arcs;

  Ray apply(const Ray& r) const;
  friend bool operator==(const CircleMapPP&, const CircleMapPP&) = default;
};

// f o g
CircleMapPP compose(const CircleMapPP& f, const CircleMapPP& g);

// Action of the linear parts of f at a fixed point p on the rays at p.
CircleMapPP projectivized_germ(const PLMap& f, const RatPoint& p);

}  // namespace plcube
