#include "plcube/json_io.h"

#include "plcube/errors.h"

namespace plcube {

json to_json(const Rational& r) { return r.str(); }

json to_json(const RatPoint& p) {
  json a = json::array();
  for (const auto& c : p.coords()) a.push_back(to_json(c));
  return a;
}

json to_json(const RatMatrix& m) {
  json a = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    a.push_back(std::move(row));
  }
  return a;
}

json to_json(const PLMap& f) {
  json j{{"dim", f.dim()}};
  if (f.is_suspension()) {
    j["kind"] = "suspension";
    j["base"] = to_json(f.base());
    return j;
  }
  j["kind"] = "generic";
  json cells = json::array();
  for (const auto& c : f.cells()) {
    json verts = json::array();
    for (const auto& v : c.simplex.vertices()) verts.push_back(to_json(v));
    cells.push_back({{"simplex", verts}, {"linear", to_json(c.map.linear)}, {"translation", to_json(c.map.translation)}});
  }
  j["cells"] = std::move(cells);
  return j;
}

std::string serialize(const PLMap& f) { return to_json(f).dump(); }

Rational rational_from_json(const json& j, const std::string& path) {
  try {
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long>());
  } catch (const std::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
  throw ParseError(path + ": expected a rational string such as \"1/3\"");
}

RatPoint point_from_json(const json& j, const std::string& path) {
  if (!j.is_array()) throw ParseError(path + ": expected an array of coordinates");
  std::vector<Rational> c;
  for (std::size_t i = 0; i < j.size(); ++i) c.push_back(rational_from_json(j[i], path + "/" + std::to_string(i)));
  return RatPoint(std::move(c));
}

namespace {

const json& field(const json& j, const char* key, const std::string& path) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(path + ": missing field '" + key + "'");
  return j.at(key);
}

RatMatrix matrix_from_json(const json& j, std::size_t n, const std::string& path) {
  if (!j.is_array() || j.size() != n) throw ParseError(path + ": expected " + std::to_string(n) + " rows");
  RatMatrix m(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    const RatPoint row = point_from_json(j[r], path + "/" + std::to_string(r));
    if (row.dim() != n) throw ParseError(path + "/" + std::to_string(r) + ": expected " + std::to_string(n) + " entries");
    for (std::size_t c = 0; c < n; ++c) m(r, c) = row[c];
  }
  return m;
}

}  // namespace

PLMap map_from_json(const json& j) {
  const json& d = field(j, "dim", "");
  if (!d.is_number_unsigned() || d.get<std::size_t>() == 0) throw ParseError("/dim: expected a positive integer");
  const std::size_t dim = d.get<std::size_t>();
  const std::string kind = j.contains("kind") ? j.at("kind").get<std::string>() : "generic";
  if (kind == "suspension") {
    PLMap base = map_from_json(field(j, "base", ""));
    if (base.dim() + 1 != dim) throw ParseError("/base: dimension must be one less than /dim");
    return PLMap::suspension_of(std::move(base));
  }
  if (kind != "generic") throw ParseError("/kind: expected 'generic' or 'suspension'");
  if (dim > 2) throw ParseError("/dim: generic maps exist in dimensions 1 and 2 only");
  const json& cells = field(j, "cells", "");
  if (!cells.is_array()) throw ParseError("/cells: expected an array");
  std::vector<Cell> out;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    const std::string p = "/cells/" + std::to_string(i);
    const json& s = field(cells[i], "simplex", p);
    if (!s.is_array() || s.size() != dim + 1) throw ParseError(p + "/simplex: expected " + std::to_string(dim + 1) + " vertices");
    std::vector<RatPoint> verts;
    for (std::size_t k = 0; k < s.size(); ++k) {
      verts.push_back(point_from_json(s[k], p + "/simplex/" + std::to_string(k)));
      if (verts.back().dim() != dim) throw ParseError(p + "/simplex/" + std::to_string(k) + ": wrong dimension");
    }
    RatMatrix lin = matrix_from_json(field(cells[i], "linear", p), dim, p + "/linear");
    RatPoint t = point_from_json(field(cells[i], "translation", p), p + "/translation");
    if (t.dim() != dim) throw ParseError(p + "/translation: wrong dimension");
    out.push_back({Simplex(std::move(verts)), RatAffineMap{std::move(lin), std::move(t)}});
  }
  return PLMap(dim, std::move(out));
}

PLMap parse_map(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError("syntax error at byte " + std::to_string(e.byte) + ": " + e.what());
  }
  PLMap f;
  try {
    f = map_from_json(j);
  } catch (const json::exception& e) {
    throw ParseError(std::string("schema error: ") + e.what());
  }
  require_valid(f);
  return f;
}

json to_json(const ValidationReport& r) {
  json v = json::array();
  for (const auto& x : r.violations) {
    json e{{"check", x.check}, {"witness", x.witness}};
    if (x.cell) e["cell"] = *x.cell;
    v.push_back(std::move(e));
  }
  return {{"passed", r.passed}, {"violations", v}};
}

json to_json(const PolyhedralSet& s) {
  json pieces = json::array();
  for (const auto& p : s.pieces) {
    json verts = json::array();
    for (const auto& v : p.vertices()) verts.push_back(to_json(v));
    pieces.push_back(std::move(verts));
  }
  return {{"ambient", s.ambient}, {"pieces", pieces}};
}

namespace {

json rational_list(const std::vector<Rational>& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(to_json(x));
  return a;
}

}  // namespace

json to_json(const WitnessReport& w) {
  json gens = json::array();
  for (const auto& g : w.per_generator) gens.push_back({{"V", rational_list(g.v)}, {"a", to_json(g.a)}});
  return {{"point", to_json(w.point)},
          {"tangent", rational_list(w.tangent)},
          {"transversal", rational_list(w.transversal)},
          {"generators", gens},
          {"nontrivial", w.nontrivial}};
}

json to_json(const BraidWord& w) {
  json letters = json::array();
  for (const auto& l : w.letters) letters.push_back(l.sign * l.index);
  return {{"strands", w.strands}, {"letters", letters}};
}

json to_json(const Trajectory& t) {
  json pieces = json::array();
  for (const auto& p : t.pieces)
    pieces.push_back({{"s0", to_json(p.s0)}, {"s1", to_json(p.s1)}, {"u", to_json(p.u)}, {"v", to_json(p.v)}});
  return {{"pieces", pieces}};
}

json to_json(const CircleMapPP& c) {
  json arcs = json::array();
  for (const auto& a : c.arcs)
    arcs.push_back({{"start", to_json(a.start.vec())}, {"end", to_json(a.end.vec())}, {"matrix", to_json(a.m)}});
  return {{"arcs", arcs}};
}

json to_json(const PhiReport& r) {
  return {{"estimate", to_json(r.estimate)},       {"estimate_decimal", r.estimate.to_double()},
          {"variance", to_json(r.variance)},       {"mean_variance", to_json(r.mean_variance)},
          {"stderr_decimal", r.stderr_approx},     {"samples", r.samples},
          {"resampled", r.resampled}};
}

json to_json(const GrowthReport& r) {
  json series = json::array();
  for (const auto& row : r.series) {
    json e{{"n", row.n}, {"D", to_json(row.d)}, {"cells", row.cells}, {"breakpoints", row.breakpoints}};
    e["word_length"] = row.word_length ? json(*row.word_length) : json(nullptr);
    series.push_back(std::move(e));
  }
  json profile = json::array();
  for (const auto& [m, n] : r.profile) profile.push_back({{"m", m}, {"phi", n}});
  return {{"generators", r.generators}, {"series", series}, {"C", to_json(r.c)}, {"profile", profile}};
}

json to_json(const BoundsReport& r) {
  return {{"elements", r.elements}, {"checked", r.checked}, {"violations", r.violations}, {"passed", r.passed()}};
}

json to_json(const WordBall& b) {
  json elems = json::array();
  for (const auto& e : b.elements) elems.push_back({{"word", e.word}, {"cells", e.map.size()}});
  return {{"radius", b.radius}, {"size", b.elements.size()}, {"elements", elems}};
}

}  // namespace plcube
