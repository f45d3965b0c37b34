#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "plcube/plmap.h"

namespace plcube {

// D(f): largest absolute entry over the linear parts of all cells.
Rational matrix_norm(const PLMap& f);

// Number of maximal affine regions (see affine_region_count). For
// suspensions of dimension >= 3, the number of canonical cells instead.
std::size_t cell_count(const PLMap& f);
// Number of simplices in the canonical triangulation.
std::size_t triangle_count(const PLMap& f);
// Interior points of [-1,1] where the slope changes.
std::vector<Rational> breakpoints(const PLMap& f);

struct VolumeReport {
  bool preserves = true;
  Rational max_det;
  Rational min_det;
};
VolumeReport volume_check(const PLMap& f);

// Finite union of closed simplices of mixed dimension inside I^n (n <= 2),
// kept in a normal form: full-dimensional part canonically triangulated,
// lower-dimensional pieces maximal and not contained in higher ones.
struct PolyhedralSet {
  std::size_t ambient = 0;
  std::vector<Simplex> pieces;

  bool empty() const { return pieces.empty(); }
  std::vector<Simplex> of_dim(int d) const;
  friend bool operator==(const PolyhedralSet&, const PolyhedralSet&) = default;
};

PolyhedralSet normalize(std::size_t ambient, std::vector<Simplex> pieces);
PolyhedralSet intersect(const PolyhedralSet& a, const PolyhedralSet& b);
bool is_subset(const PolyhedralSet& a, const PolyhedralSet& b);
// Frontier relative to the cube: the part of the set meeting the closure of
// its complement in I^n.
PolyhedralSet frontier(const PolyhedralSet& s);

PolyhedralSet fixed_set(const PLMap& f);
PolyhedralSet frontier(const PLMap& f);

struct GroupFixedSet {
  PolyhedralSet fixed;
  PolyhedralSet frontier;
  bool frontier_contained = false;  // frontier within the union of generator frontiers
};
GroupFixedSet group_fixed_set(const std::vector<PLMap>& gens);

struct GermData {
  std::vector<Rational> v;  // tangential part, length n-1
  Rational a;               // transversal eigenvalue
};

struct WitnessReport {
  RatPoint point;
  std::vector<Rational> tangent;     // primitive integer direction (empty in dim 1)
  std::vector<Rational> transversal;  // signed unit vector pointing into the moved side
  std::vector<GermData> per_generator;
  bool nontrivial = false;
};

// Reads off the germ of each generator at a frontier point of fix(G), in the
// coordinates of the stabilizer of a hyperplane. By default the point is the
// first admissible dyadic point of the least codimension-1 frontier piece;
// `preferred` picks the frontier piece containing that point instead.
WitnessReport indicability_witness(const std::vector<PLMap>& gens,
                                   const std::optional<RatPoint>& preferred = std::nullopt);

}  // namespace plcube
