#include "plcube/plmap.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "plcube/errors.h"
#include "plcube/geometry2d.h"

namespace plcube {

using plane::Affine2;
using plane::Polygon;
using plane::Vec2;
using Tri = std::array<Vec2, 3>;

namespace {

// Uniform bucket grid over [-1,1]^2 for bounding-box candidate queries.
class BoxGrid {
 public:
  explicit BoxGrid(const std::vector<plane::BoundingBox>& boxes) {
    k_ = std::clamp(static_cast<int>(std::sqrt(static_cast<double>(boxes.size()))), 1, 64);
    buckets_.resize(static_cast<std::size_t>(k_ * k_));
    for (std::size_t i = 0; i < boxes.size(); ++i) {
      for (int ix = index(boxes[i].xmin); ix <= index(boxes[i].xmax); ++ix) {
        for (int iy = index(boxes[i].ymin); iy <= index(boxes[i].ymax); ++iy) bucket(ix, iy).push_back(i);
      }
    }
  }

  std::vector<std::size_t> query(const plane::BoundingBox& b) const {
    std::vector<std::size_t> out;
    for (int ix = index(b.xmin); ix <= index(b.xmax); ++ix) {
      for (int iy = index(b.ymin); iy <= index(b.ymax); ++iy) {
        const auto& v = buckets_[static_cast<std::size_t>(ix * k_ + iy)];
        out.insert(out.end(), v.begin(), v.end());
      }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

 private:
  int index(double v) const {
    const int i = static_cast<int>(std::floor((v + 1.0) / 2.0 * k_));
    return std::clamp(i, 0, k_ - 1);
  }
  std::vector<std::size_t>& bucket(int ix, int iy) { return buckets_[static_cast<std::size_t>(ix * k_ + iy)]; }

  int k_ = 1;
  std::vector<std::vector<std::size_t>> buckets_;
};

Tri ccw_triangle(const Simplex& s) {
  Tri t{plane::to_vec(s[0]), plane::to_vec(s[1]), plane::to_vec(s[2])};
  if (plane::orient(t[0], t[1], t[2]) < 0) std::swap(t[1], t[2]);
  return t;
}

Polygon as_polygon(const Tri& t) { return {t[0], t[1], t[2]}; }

Simplex tri_simplex(const Vec2& a, const Vec2& b, const Vec2& c) {
  return Simplex({plane::to_point(a), plane::to_point(b), plane::to_point(c)});
}

struct Edge {
  std::size_t cell;
  Rational s0, s1;  // s0 < s1
};

// Calls visit(i, j, key, lo, hi) for every pair of cell edges (i < j as edge
// records, cells may coincide) lying on one line and overlapping in a segment
// of positive length [lo, hi].
template <class F>
void for_each_edge_overlap(const std::vector<Tri>& tris, F&& visit) {
  std::map<plane::LineKey, std::vector<Edge>> lines;
  for (std::size_t c = 0; c < tris.size(); ++c) {
    const Tri& t = tris[c];
    for (int i = 0; i < 3; ++i) {
      const Vec2& p = t[i];
      const Vec2& q = t[(i + 1) % 3];
      if (p == q) continue;
      const auto k = plane::line_key(p, q);
      Rational a = plane::line_param(k, p), b = plane::line_param(k, q);
      if (b < a) std::swap(a, b);
      lines[k].push_back({c, std::move(a), std::move(b)});
    }
  }
  for (auto& [k, edges] : lines) {
    std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) { return a.s0 < b.s0; });
    for (std::size_t i = 0; i < edges.size(); ++i) {
      for (std::size_t j = i + 1; j < edges.size() && edges[j].s0 < edges[i].s1; ++j) {
        const Rational& lo = edges[j].s0;
        const Rational& hi = min(edges[i].s1, edges[j].s1);
        if (lo < hi) visit(edges[i].cell, edges[j].cell, k, lo, hi);
      }
    }
  }
}

struct UnionFind {
  std::vector<std::size_t> p;
  explicit UnionFind(std::size_t n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  std::size_t find(std::size_t x) {
    while (p[x] != x) x = p[x] = p[p[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { p[find(a)] = find(b); }
};

void add(ValidationReport& r, std::string check, std::string witness, std::optional<std::size_t> cell = {}) {
  r.passed = false;
  r.violations.push_back({std::move(check), std::move(witness), cell});
}

std::string cells_witness(std::size_t i, std::size_t j) {
  return "cells " + std::to_string(i) + " and " + std::to_string(j);
}

// Interior-disjointness and containment of a family of full-dimensional
// simplices, reported under the given check name.
void check_dissection(const std::vector<Simplex>& simplices, std::size_t dim, const std::string& check,
                      ValidationReport& r) {
  Rational total(0);
  for (std::size_t i = 0; i < simplices.size(); ++i) {
    for (const auto& v : simplices[i].vertices()) {
      if (!in_cube(v)) {
        add(r, check, "vertex " + v.str() + " outside the cube", i);
        return;
      }
    }
    total += abs(simplices[i].signed_scaled_volume());
  }
  Rational fact(1);
  for (std::size_t i = 2; i <= dim; ++i) fact *= Rational(static_cast<long>(i));
  const Rational cube = pow(Rational(2), static_cast<unsigned>(dim));
  if (total / fact != cube) {
    add(r, check, "total volume " + (total / fact).str() + " differs from " + cube.str());
  }
  if (dim == 1) {
    std::vector<std::pair<Rational, std::size_t>> iv;
    for (std::size_t i = 0; i < simplices.size(); ++i) iv.emplace_back(min(simplices[i][0][0], simplices[i][1][0]), i);
    std::sort(iv.begin(), iv.end());
    for (std::size_t k = 0; k + 1 < iv.size(); ++k) {
      const Simplex& s = simplices[iv[k].second];
      const Rational hi = max(s[0][0], s[1][0]);
      if (iv[k + 1].first < hi) {
        add(r, check, cells_witness(iv[k].second, iv[k + 1].second) + " overlap", iv[k].second);
        return;
      }
    }
    return;
  }
  std::vector<Polygon> polys;
  std::vector<plane::BoundingBox> boxes;
  for (const auto& s : simplices) {
    polys.push_back(as_polygon(ccw_triangle(s)));
    boxes.push_back(plane::bbox(polys.back()));
  }
  BoxGrid grid(boxes);
  for (std::size_t i = 0; i < polys.size(); ++i) {
    for (std::size_t j : grid.query(boxes[i])) {
      if (j <= i || !boxes[i].overlaps(boxes[j])) continue;
      if (plane::interiors_overlap(polys[i], polys[j])) {
        add(r, check, cells_witness(i, j) + " overlap", i);
        return;
      }
    }
  }
}

ValidationReport validate_generic(const PLMap& f) {
  ValidationReport r;
  const std::size_t n = f.dim();
  const auto& cells = f.cells();
  if (cells.empty()) {
    add(r, "covering", "no cells");
    return r;
  }
  bool degenerate = false;
  int sign = 0;
  std::optional<std::size_t> sign_cell;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (!cells[i].simplex.full_dimensional()) {
      add(r, "covering", "degenerate simplex", i);
      degenerate = true;
      continue;
    }
    const int s = cells[i].map.linear.det().sign();
    if (s == 0) {
      add(r, "bijectivity", "linear part has determinant 0", i);
      degenerate = true;
      continue;
    }
    if (sign == 0) {
      sign = s;
    } else if (s != sign && !sign_cell) {
      sign_cell = i;
    }
  }
  if (sign_cell) add(r, "orientation", "determinant sign differs from cell 0", sign_cell);
  if (degenerate) return r;

  std::vector<Simplex> sources, images;
  for (const auto& c : cells) {
    sources.push_back(c.simplex);
    images.push_back(c.simplex.mapped(c.map));
  }
  check_dissection(sources, n, "covering", r);
  check_dissection(images, n, "bijectivity", r);

  // Continuity across shared faces.
  if (n == 1) {
    std::vector<std::size_t> order(cells.size());
    std::iota(order.begin(), order.end(), 0);
    auto lo = [&](std::size_t i) { return min(cells[i].simplex[0][0], cells[i].simplex[1][0]); };
    auto hi = [&](std::size_t i) { return max(cells[i].simplex[0][0], cells[i].simplex[1][0]); };
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return lo(a) < lo(b); });
    for (std::size_t k = 0; k + 1 < order.size(); ++k) {
      const std::size_t a = order[k], b = order[k + 1];
      if (hi(a) != lo(b)) continue;
      const RatPoint x{hi(a)};
      if (cells[a].map.apply(x) != cells[b].map.apply(x)) {
        add(r, "continuity", cells_witness(a, b) + " disagree at " + x.str(), a);
        break;
      }
    }
  } else {
    std::vector<Tri> tris;
    std::vector<Affine2> maps;
    for (const auto& c : cells) {
      tris.push_back(ccw_triangle(c.simplex));
      maps.push_back(Affine2::from(c.map));
    }
    bool reported = false;
    for_each_edge_overlap(tris, [&](std::size_t i, std::size_t j, const plane::LineKey& k, const Rational& lo,
                                    const Rational& hi) {
      if (reported || i == j || maps[i] == maps[j]) return;
      for (const Rational* s : {&lo, &hi}) {
        const Vec2 p = plane::line_point(k, *s);
        if (maps[i].apply(p) != maps[j].apply(p)) {
          add(r, "continuity", cells_witness(i, j) + " disagree at " + plane::to_point(p).str(), i);
          reported = true;
          return;
        }
      }
    });
  }

  for (std::size_t i = 0; i < cells.size(); ++i) {
    bool bad = false;
    for (const auto& v : cells[i].simplex.vertices()) {
      if (on_cube_boundary(v) && cells[i].map.apply(v) != v) {
        add(r, "boundary", "boundary point " + v.str() + " moved", i);
        bad = true;
        break;
      }
    }
    if (bad) break;
  }
  return r;
}

PLMap compose1(const PLMap& f, const PLMap& g) {
  struct Piece {
    Rational lo, hi;
    const RatAffineMap* map;
  };
  std::vector<Piece> fp;
  for (const auto& c : f.cells()) {
    fp.push_back({min(c.simplex[0][0], c.simplex[1][0]), max(c.simplex[0][0], c.simplex[1][0]), &c.map});
  }
  std::sort(fp.begin(), fp.end(), [](const Piece& a, const Piece& b) { return a.lo < b.lo; });
  std::vector<Cell> out;
  for (const auto& c : g.cells()) {
    const Rational a = min(c.simplex[0][0], c.simplex[1][0]);
    const Rational b = max(c.simplex[0][0], c.simplex[1][0]);
    const Rational ga = c.map.apply(RatPoint{a})[0];
    const Rational gb = c.map.apply(RatPoint{b})[0];
    const Rational lo = min(ga, gb), hi = max(ga, gb);
    const RatAffineMap ginv = c.map.inverse();
    auto it = std::upper_bound(fp.begin(), fp.end(), lo, [](const Rational& v, const Piece& p) { return v < p.lo; });
    if (it != fp.begin()) --it;
    for (; it != fp.end() && it->lo < hi; ++it) {
      const Rational l = max(lo, it->lo), h = min(hi, it->hi);
      if (!(l < h)) continue;
      Rational x0 = ginv.apply(RatPoint{l})[0], x1 = ginv.apply(RatPoint{h})[0];
      if (x1 < x0) std::swap(x0, x1);
      out.push_back({Simplex({RatPoint{x0}, RatPoint{x1}}), it->map->after(c.map)});
    }
  }
  return PLMap(1, std::move(out));
}

PLMap compose2(const PLMap& f, const PLMap& g) {
  std::vector<Polygon> ftri;
  std::vector<Affine2> fmap;
  std::vector<plane::BoundingBox> fbox;
  for (const auto& c : f.cells()) {
    ftri.push_back(as_polygon(ccw_triangle(c.simplex)));
    fmap.push_back(Affine2::from(c.map));
    fbox.push_back(plane::bbox(ftri.back()));
  }
  BoxGrid grid(fbox);
  std::vector<Cell> out;
  for (const auto& c : g.cells()) {
    const Affine2 gm = Affine2::from(c.map);
    const Affine2 ginv = gm.inverse();
    const Tri src = ccw_triangle(c.simplex);
    Polygon img = plane::convex_hull({gm.apply(src[0]), gm.apply(src[1]), gm.apply(src[2])});
    const auto box = plane::bbox(img);
    for (std::size_t j : grid.query(box)) {
      if (!box.overlaps(fbox[j])) continue;
      Polygon piece = plane::closed_intersection(img, ftri[j]);
      if (piece.size() < 3) continue;
      for (auto& v : piece) v = ginv.apply(v);
      piece = plane::convex_hull(std::move(piece));
      const RatAffineMap m = fmap[j].after(gm).to_map();
      for (std::size_t k = 1; k + 1 < piece.size(); ++k) {
        out.push_back({tri_simplex(piece[0], piece[k], piece[k + 1]), m});
      }
    }
  }
  return PLMap(2, std::move(out));
}

// Components of cells joined by positive-length edge contact with an equal map.
std::vector<std::vector<std::size_t>> affine_regions2(const PLMap& f, std::vector<Tri>& tris) {
  const auto& cells = f.cells();
  tris.clear();
  for (const auto& c : cells) tris.push_back(ccw_triangle(c.simplex));
  UnionFind uf(cells.size());
  for_each_edge_overlap(tris, [&](std::size_t i, std::size_t j, const plane::LineKey&, const Rational&,
                                  const Rational&) {
    if (i != j && cells[i].map == cells[j].map) uf.unite(i, j);
  });
  std::map<std::size_t, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < cells.size(); ++i) groups[uf.find(i)].push_back(i);
  std::vector<std::vector<std::size_t>> out;
  for (auto& [root, members] : groups) out.push_back(std::move(members));
  return out;
}

std::vector<Cell> merged_intervals(const PLMap& f) {
  std::vector<Cell> cells = f.cells();
  for (auto& c : cells) {
    if (c.simplex[1][0] < c.simplex[0][0]) c.simplex = Simplex({c.simplex[1], c.simplex[0]});
  }
  std::sort(cells.begin(), cells.end(), [](const Cell& a, const Cell& b) { return a.simplex[0] < b.simplex[0]; });
  std::vector<Cell> out;
  for (auto& c : cells) {
    if (!out.empty() && out.back().map == c.map && out.back().simplex[1] == c.simplex[0]) {
      out.back().simplex = Simplex({out.back().simplex[0], c.simplex[1]});
    } else {
      out.push_back(std::move(c));
    }
  }
  return out;
}

void write_cells(std::ostringstream& os, const PLMap& f) {
  os << f.dim() << '[';
  for (const auto& c : f.cells()) {
    for (const auto& v : c.simplex.vertices()) os << v.str();
    os << ':';
    for (std::size_t i = 0; i < f.dim(); ++i) {
      for (std::size_t j = 0; j < f.dim(); ++j) os << c.map.linear(i, j) << ',';
    }
    os << c.map.translation.str() << ';';
  }
  os << ']';
}

}  // namespace

PLMap::PLMap(std::size_t dim, std::vector<Cell> cells) : dim_(dim), cells_(std::move(cells)) {
  if (dim == 0) throw DimensionError("dimension must be positive");
  if (dim > 2) throw UnsupportedDimension("generic maps exist only in dimensions 1 and 2");
  for (const auto& c : cells_) {
    if (c.simplex.ambient_dim() != dim || c.simplex.size() != dim + 1 || c.map.dim() != dim ||
        c.map.linear.rows() != dim || c.map.linear.cols() != dim) {
      throw DimensionError("cell dimension does not match map dimension " + std::to_string(dim));
    }
  }
}

std::vector<Simplex> kuhn_triangulation(const RatPoint& lo, const RatPoint& hi) {
  std::vector<std::size_t> free;
  for (std::size_t i = 0; i < lo.dim(); ++i) {
    if (lo[i] != hi[i]) free.push_back(i);
  }
  std::vector<Simplex> out;
  do {
    std::vector<RatPoint> v{lo};
    RatPoint cur = lo;
    for (std::size_t axis : free) {
      cur[axis] = hi[axis];
      v.push_back(cur);
    }
    out.emplace_back(std::move(v));
  } while (std::next_permutation(free.begin(), free.end()));
  return out;
}

PLMap PLMap::identity(std::size_t dim) {
  if (dim == 0) throw DimensionError("dimension must be positive");
  if (dim >= 3) return suspension_of(identity(dim - 1));
  RatPoint lo(dim), hi(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    lo[i] = Rational(-1);
    hi[i] = Rational(1);
  }
  std::vector<Cell> cells;
  for (auto& s : kuhn_triangulation(lo, hi)) cells.push_back({std::move(s), RatAffineMap::identity(dim)});
  return PLMap(dim, std::move(cells));
}

PLMap PLMap::suspension_of(PLMap base) {
  const std::size_t n = base.dim();
  PLMap out;
  out.dim_ = n + 1;
  for (const auto& c : base.cells()) {
    for (int t : {1, -1}) {
      std::vector<RatPoint> v;
      for (const auto& p : c.simplex.vertices()) {
        std::vector<Rational> q = p.coords();
        q.emplace_back(0);
        v.emplace_back(std::move(q));
      }
      RatPoint apex(n + 1);
      apex[n] = Rational(t);
      v.push_back(apex);
      RatMatrix lin(n + 1, n + 1);
      RatPoint tr(n + 1);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) lin(i, j) = c.map.linear(i, j);
        lin(i, n) = Rational(-t) * c.map.translation[i];
        tr[i] = c.map.translation[i];
      }
      lin(n, n) = Rational(1);
      out.cells_.push_back({Simplex(std::move(v)), {std::move(lin), std::move(tr)}});
    }
  }
  for (int t : {1, -1}) {
    for (std::size_t axis = 0; axis < n; ++axis) {
      for (int s : {-1, 1}) {
        RatPoint lo(n + 1), hi(n + 1);
        for (std::size_t i = 0; i < n; ++i) {
          lo[i] = Rational(i == axis ? s : -1);
          hi[i] = Rational(i == axis ? s : 1);
        }
        lo[n] = Rational(std::min(0, t));
        hi[n] = Rational(std::max(0, t));
        RatPoint apex(n + 1);
        apex[n] = Rational(t);
        for (const auto& face : kuhn_triangulation(lo, hi)) {
          std::vector<RatPoint> v = face.vertices();
          v.push_back(apex);
          out.cells_.push_back({Simplex(std::move(v)), RatAffineMap::identity(n + 1)});
        }
      }
    }
  }
  out.base_ = std::make_shared<const PLMap>(std::move(base));
  return out;
}

PLMap PLMap::as_generic() const {
  if (dim_ > 2) throw UnsupportedDimension("generic maps exist only in dimensions 1 and 2");
  return PLMap(dim_, cells_);
}

ValidationReport validate(const PLMap& f) {
  if (!f.is_suspension()) return validate_generic(f);
  ValidationReport r = validate(f.base());
  for (auto& v : r.violations) v.witness = "base map: " + v.witness;
  if (f.dim() == 2) {
    ValidationReport own = validate_generic(f.as_generic());
    for (auto& v : own.violations) r.violations.push_back(std::move(v));
    r.passed = r.violations.empty();
  }
  return r;
}

void require_valid(const PLMap& f) {
  auto r = validate(f);
  if (!r.passed) {
    const auto& v = r.violations.front();
    throw InvalidMapError(v.check + ": " + v.witness);
  }
}

std::size_t locate(const PLMap& f, const RatPoint& x) {
  if (x.dim() != f.dim()) throw DimensionError("point dimension does not match map");
  if (!in_cube(x)) throw DomainError("point " + x.str() + " outside the cube");
  std::vector<Simplex> s;
  s.reserve(f.size());
  for (const auto& c : f.cells()) s.push_back(c.simplex);
  return point_locate(s, x);
}

RatPoint apply(const PLMap& f, const RatPoint& x) {
  if (x.dim() != f.dim()) throw DimensionError("point dimension does not match map");
  if (!in_cube(x)) throw DomainError("point " + x.str() + " outside the cube");
  if (f.is_suspension()) {
    const std::size_t n = f.dim() - 1;
    const Rational z = x[n];
    const Rational scale = Rational(1) - abs(z);
    RatPoint xs(std::vector<Rational>(x.coords().begin(), x.coords().end() - 1));
    if (linf_norm(xs) >= scale) return x;
    RatPoint y = apply(f.base(), xs * (Rational(1) / scale)) * scale;
    std::vector<Rational> out = y.coords();
    out.push_back(z);
    return RatPoint(std::move(out));
  }
  for (const auto& c : f.cells()) {
    if (c.simplex.contains(x)) return c.map.apply(x);
  }
  throw NotFoundError("point " + x.str() + " lies in no cell");
}

PLMap compose(const PLMap& f, const PLMap& g) {
  if (f.dim() != g.dim()) throw DimensionError("compose: dimension mismatch");
  if (f.is_suspension() && g.is_suspension()) return PLMap::suspension_of(compose(f.base(), g.base()));
  if (f.dim() >= 3) throw UnsupportedDimension("compose: generic maps of dimension >= 3");
  if (f.dim() == 1) return compose1(f, g);
  return compose2(f, g);
}

PLMap inverse(const PLMap& f) {
  if (f.is_suspension()) return PLMap::suspension_of(inverse(f.base()));
  std::vector<Cell> cells;
  cells.reserve(f.size());
  for (const auto& c : f.cells()) cells.push_back({c.simplex.mapped(c.map), c.map.inverse()});
  return PLMap(f.dim(), std::move(cells));
}

PLMap power(const PLMap& f, long n) {
  PLMap step = n < 0 ? canonicalize(inverse(f)) : canonicalize(f);
  PLMap acc = PLMap::identity(f.dim());
  for (long i = 0; i < std::labs(n); ++i) acc = canonicalize(compose(step, acc));
  return acc;
}

PLMap canonicalize(const PLMap& f) {
  if (f.is_suspension()) return PLMap::suspension_of(canonicalize(f.base()));
  if (f.dim() == 1) return PLMap(1, merged_intervals(f));
  std::vector<Tri> tris;
  std::vector<Cell> out;
  for (const auto& region : affine_regions2(f, tris)) {
    std::vector<Tri> members;
    for (std::size_t i : region) members.push_back(tris[i]);
    const RatAffineMap& m = f.cells()[region.front()].map;
    for (const auto& t : plane::canonical_triangulation(members)) out.push_back({tri_simplex(t[0], t[1], t[2]), m});
  }
  std::sort(out.begin(), out.end(), [](const Cell& a, const Cell& b) { return a.simplex.vertices() < b.simplex.vertices(); });
  return PLMap(2, std::move(out));
}

std::string canonical_key(const PLMap& f) {
  std::ostringstream os;
  if (f.dim() <= 2) {
    write_cells(os, canonicalize(f.is_suspension() ? f.as_generic() : f));
    return os.str();
  }
  if (f.is_suspension()) {
    os << 'S' << canonical_key(f.base());
    return os.str();
  }
  write_cells(os, canonicalize(f));
  return os.str();
}

bool is_identity(const PLMap& f) {
  if (f.is_suspension()) return is_identity(f.base());
  return std::all_of(f.cells().begin(), f.cells().end(), [](const Cell& c) { return c.map.is_identity(); });
}

namespace {

// Two valid 2D maps agree iff every pair of cells with overlapping interiors
// carries the same affine map. Candidate pairs come from a bucket grid; a
// double-precision separating-axis test with a safety margin discards the
// clearly disjoint ones before the exact test.
struct EqCell {
  Polygon poly;
  std::array<std::array<double, 2>, 3> approx;
  plane::BoundingBox box;
  const RatAffineMap* map;
};

EqCell eq_cell(const Cell& c) {
  const Tri t = ccw_triangle(c.simplex);
  EqCell e{as_polygon(t), {}, {}, &c.map};
  for (int i = 0; i < 3; ++i) e.approx[i] = {t[i].x.to_double(), t[i].y.to_double()};
  e.box = plane::bbox(e.poly);
  return e;
}

// True when some edge line of a has every vertex of b strictly outside by a
// margin far above rounding error.
bool clearly_separated_by(const EqCell& a, const EqCell& b) {
  for (int i = 0; i < 3; ++i) {
    const auto& p = a.approx[i];
    const auto& q = a.approx[(i + 1) % 3];
    const double dx = q[0] - p[0], dy = q[1] - p[1];
    const double scale = std::abs(dx) + std::abs(dy);
    bool all_out = true;
    for (const auto& v : b.approx) {
      const double cr = dx * (v[1] - p[1]) - dy * (v[0] - p[0]);
      all_out = all_out && cr < -1e-9 * scale;
    }
    if (all_out) return true;
  }
  return false;
}

bool equals2(const PLMap& f, const PLMap& g) {
  std::vector<EqCell> gc;
  std::vector<plane::BoundingBox> gbox;
  for (const auto& c : g.cells()) {
    gc.push_back(eq_cell(c));
    gbox.push_back(gc.back().box);
  }
  BoxGrid grid(gbox);
  for (const auto& c : f.cells()) {
    const EqCell a = eq_cell(c);
    for (std::size_t j : grid.query(a.box)) {
      const EqCell& b = gc[j];
      if (!a.box.overlaps(b.box) || *b.map == c.map) continue;
      if (clearly_separated_by(a, b) || clearly_separated_by(b, a)) continue;
      if (plane::interiors_overlap(a.poly, b.poly)) return false;
    }
  }
  return true;
}

}  // namespace

bool equals(const PLMap& f, const PLMap& g) {
  if (f.dim() != g.dim()) throw DimensionError("equals: dimension mismatch");
  if (f.is_suspension() && g.is_suspension()) return equals(f.base(), g.base());
  if (f.dim() == 2) return equals2(f.is_suspension() ? f.as_generic() : f, g.is_suspension() ? g.as_generic() : g);
  return is_identity(compose(f, inverse(g)));
}

std::size_t affine_region_count(const PLMap& f) {
  if (f.dim() == 1) return merged_intervals(f).size();
  if (f.dim() == 2) {
    std::vector<Tri> tris;
    return affine_regions2(f, tris).size();
  }
  throw UnsupportedDimension("affine regions are counted in dimensions 1 and 2");
}

}  // namespace plcube
