#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "plcube/geometry.h"

namespace plcube {

struct Cell {
  Simplex simplex;
  RatAffineMap map;

  friend bool operator==(const Cell&, const Cell&) = default;
};

// A PL self-map of the cube I^n = [-1,1]^n: finitely many simplices, each
// carrying an affine map. Maps of dimension >= 3 exist only as suspensions,
// which keep a handle on their base map so that group operations can be
// carried out there.
class PLMap {
 public:
  PLMap() = default;
  // Generic kind. Dimensions 1 and 2 only; no validation is performed.
  PLMap(std::size_t dim, std::vector<Cell> cells);

  static PLMap identity(std::size_t dim);
  // Suspension of base: cone cells over base cells to (0,...,0,+-1) and the
  // identity on the complement of the bipyramid.
  static PLMap suspension_of(PLMap base);

  std::size_t dim() const { return dim_; }
  const std::vector<Cell>& cells() const { return cells_; }
  std::size_t size() const { return cells_.size(); }
  bool is_suspension() const { return base_ != nullptr; }
  const PLMap& base() const { return *base_; }
  // Same cells, generic kind (dimension 2 only for suspensions).
  PLMap as_generic() const;

 private:
  std::size_t dim_ = 0;
  std::vector<Cell> cells_;
  std::shared_ptr<const PLMap> base_;
};

struct Violation {
  std::string check;  // covering, continuity, orientation, bijectivity, boundary
  std::string witness;
  std::optional<std::size_t> cell;
};

struct ValidationReport {
  bool passed = true;
  std::vector<Violation> violations;
};

ValidationReport validate(const PLMap& f);
// Throws InvalidMapError carrying the first violation.
void require_valid(const PLMap& f);

RatPoint apply(const PLMap& f, const RatPoint& x);
std::size_t locate(const PLMap& f, const RatPoint& x);

// f o g
PLMap compose(const PLMap& f, const PLMap& g);
PLMap inverse(const PLMap& f);
PLMap power(const PLMap& f, long n);

// Canonical representative: cells with one affine map are merged into their
// maximal edge-connected regions and each region is re-triangulated by a
// rule that depends only on the region as a point set.
PLMap canonicalize(const PLMap& f);
// Exact serialization of canonicalize(f); equal functions give equal keys.
std::string canonical_key(const PLMap& f);

bool is_identity(const PLMap& f);
bool equals(const PLMap& f, const PLMap& g);

// Number of maximal affine regions (edge-connected in dimension 2, intervals
// in dimension 1). A lower bound for the number of simplices of any
// triangulation on which f is affine.
std::size_t affine_region_count(const PLMap& f);

// Kuhn triangulation of an axis-aligned box: n! simplices. Axes with
// lo == hi are collapsed, giving a lower-dimensional triangulation.
std::vector<Simplex> kuhn_triangulation(const RatPoint& lo, const RatPoint& hi);

}  // namespace plcube
