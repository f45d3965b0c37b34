#pragma once

#include <utility>
#include <vector>

#include "plcube/plmap.h"

namespace plcube {

using Node = std::pair<Rational, Rational>;

// Piecewise-linear map of [-1,1] through the given graph nodes. The nodes must
// start at (-1,-1), end at (1,1) and increase strictly in both coordinates.
PLMap pl1d(const std::vector<Node>& nodes);

// f_t(x) = t f(x/t) on the cube of radius t, identity outside; f_1 = f and
// f_0 = identity. Dimensions 1 and 2.
PLMap alexander(const PLMap& f, const Rational& t);

PLMap suspend(const PLMap& f);

// Layered slide of concentric squares. A point on the square of half-width
// l >= inner moves counterclockwise along it by arclength
// fraction * 8 inner * (1 - l) / (1 - inner); squares inside the inner one
// slide by fraction * 8 l.
struct TwistSpec {
  Rational inner;
  Rational fraction;
};
PLMap twist_root(const TwistSpec& spec);

struct Box {
  RatPoint lo;
  RatPoint hi;
};
// f conjugated into the box by the axis-aligned affine map of the cube onto
// it, extended by the identity.
PLMap embed_support(const PLMap& f, const Box& box);

// f = h^6 and g = (h in the left little square) o (h^-1 in the right one)
// for h = twist_root({1/2, 1/12}); f swaps the little squares and
// f^-1 g f = g^-1.
struct Figure2 {
  PLMap f;
  PLMap g;
};
Figure2 figure2_g();
Box figure2_left_square();
Box figure2_right_square();

// A map equal to x -> Mx near 0 (on r I^2 when a direct join works) and the
// identity on the boundary. det M must be positive.
PLMap linear_near_zero(const RatMatrix& m, const Rational& r);

// linear_near_zero([[1,1],[0,1]], 1/4)
PLMap embedded_shear();

}  // namespace plcube
