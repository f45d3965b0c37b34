#include "plcube/acceptance.h"

#include <chrono>
#include <cmath>
#include <functional>
#include <sstream>

#include "plcube/braid.h"
#include "plcube/constructors.h"
#include "plcube/distortion.h"
#include "plcube/errors.h"
#include "plcube/invariants.h"
#include "plcube/json_io.h"
#include "plcube/orders.h"
#include "plcube/reference.h"
#include "plcube/sampling.h"

namespace plcube {

namespace {

const TwistSpec kTwist{Rational(1, 2), Rational(1, 12)};

RatPoint pt(Rational x, Rational y) { return RatPoint{std::move(x), std::move(y)}; }

PLMap random_map(Rng& rng, std::size_t dim) { return dim == 1 ? random_1d_map(rng) : random_2d_map(rng); }

template <class... T>
std::string cat(const T&... parts) {
  std::ostringstream os;
  (os << ... << parts);
  return os.str();
}

CriterionResult group_axioms(const AcceptanceOptions& opt) {
  Rng rng(opt.seed + 1);
  int bad = 0, total = 0;
  for (std::size_t dim : {1, 2}) {
    for (int i = 0; i < 100; ++i) {
      const PLMap f = random_map(rng, dim), g = random_map(rng, dim), h = random_map(rng, dim);
      const PLMap id = PLMap::identity(dim);
      bool ok = equals(compose(f, id), f) && equals(compose(id, f), f);
      ok = ok && is_identity(compose(f, inverse(f))) && is_identity(compose(inverse(f), f));
      ok = ok && equals(compose(compose(f, g), h), compose(f, compose(g, h)));
      bad += !ok;
      ++total;
    }
  }
  return {1, "", bad == 0, cat(total, " triples, ", bad, " failures")};
}

CriterionResult twist(const AcceptanceOptions& opt) {
  const PLMap h = twist_root(kTwist);
  bool unimodular = true;
  for (const auto& c : h.cells()) unimodular = unimodular && c.map.linear.det() == Rational(1);
  const bool valid = validate(h).passed;

  const PLMap h6 = power(h, 6);
  const Rational half(1, 2);
  std::vector<RatPoint> inner;
  for (const auto& c : h6.cells())
    for (const auto& v : c.simplex.vertices())
      if (linf_norm(v) <= half) inner.push_back(v);
  Rng rng(opt.seed + 2);
  for (int i = 0; i < 50; ++i) inner.push_back(random_dyadic_point(rng) * half);
  int rot_bad = 0;
  for (const auto& x : inner) rot_bad += apply(h6, x) != x * Rational(-1);

  const PLMap h12 = power(h, 12);
  const auto fixed = fixed_set(h12);
  const auto square = normalize(2, {Simplex({pt(-half, -half), pt(half, -half), pt(half, half)}),
                                    Simplex({pt(-half, -half), pt(half, half), pt(-half, half)})});
  const Rational one(1);
  const auto boundary = normalize(2, {Simplex({pt(-one, -one), pt(one, -one)}), Simplex({pt(one, -one), pt(one, one)}),
                                      Simplex({pt(one, one), pt(-one, one)}), Simplex({pt(-one, one), pt(-one, -one)})});
  const bool inner_fixed = is_subset(square, fixed);
  const bool boundary_fixed = is_subset(boundary, fixed);
  const bool nontrivial = !is_identity(h12);
  const bool ok = valid && unimodular && rot_bad == 0 && inner_fixed && boundary_fixed && nontrivial;
  return {2, "", ok,
          cat("valid=", valid, " det1=", unimodular, " rotation misses=", rot_bad, "/", inner.size(),
              " h12 fixes inner=", inner_fixed, " boundary=", boundary_fixed, " nontrivial=", nontrivial)};
}

CriterionResult klein(const AcceptanceOptions&) {
  const auto [f, g] = figure2_g();
  const bool rel = equals(compose(inverse(f), compose(g, f)), inverse(g));
  const bool nontrivial = !is_identity(g);
  return {3, "", rel && nontrivial, cat("f^-1 g f = g^-1: ", rel, ", g != id: ", nontrivial)};
}

CriterionResult suspension(const AcceptanceOptions& opt) {
  Rng rng(opt.seed + 4);
  int bad = 0, injective_checks = 0, injective_bad = 0;
  for (int i = 0; i < 50; ++i) {
    const PLMap a = random_1d_map(rng), b = random_1d_map(rng);
    bad += !equals(suspend(compose(a, b)), compose(suspend(a), suspend(b)));
    if (i < 10) bad += !equals(suspend(compose(a, b)).as_generic(), compose(suspend(a).as_generic(), suspend(b).as_generic()));
    if (!equals(a, b)) {
      ++injective_checks;
      injective_bad += equals(suspend(a), suspend(b)) || equals(suspend(a).as_generic(), suspend(b).as_generic());
    }
  }
  return {4, "", bad == 0 && injective_bad == 0,
          cat("50 pairs, ", bad, " failures; injectivity ", injective_checks - injective_bad, "/", injective_checks)};
}

CriterionResult distortion_bounds(const AcceptanceOptions& opt) {
  const PLMap h = twist_root(kTwist);
  const BoundsReport two = verify_bounds({h, embedded_shear()}, 4, opt.jobs);
  const PLMap f = pl1d({{-1, -1}, {0, Rational(1, 2)}, {1, 1}});
  const PLMap g = pl1d({{-1, -1}, {Rational(-1, 2), Rational(-1, 4)}, {Rational(1, 4), Rational(1, 2)}, {1, 1}});
  const BoundsReport one = verify_bounds({f, g}, 6, opt.jobs);
  const GrowthReport pg = power_growth(h, 30);
  bool linear = pg.c > Rational(0), cells = true;
  for (const auto& r : pg.series) {
    linear = linear && r.d >= pg.c * Rational(r.n);
    cells = cells && r.cells >= std::size_t(r.n);
  }
  const bool ok = two.passed() && one.passed() && linear && cells;
  return {5, "", ok,
          cat("2D ball ", two.elements, " elements, ", two.violations.size(), " violations; 1D ball ", one.elements,
              " elements, ", one.violations.size(), " violations; C=", pg.c, " D>=nC:", linear, " cells>=n:", cells)};
}

CriterionResult undistorted(const AcceptanceOptions&) {
  const PLMap f = pl1d({{-1, -1}, {0, Rational(1, 2)}, {1, 1}});
  int bad = 0;
  PLMap p = PLMap::identity(1);
  for (long n = 1; n <= 50; ++n) {
    p = canonicalize(compose(f, p));
    bad += breakpoints(p).size() != std::size_t(n);
  }
  const GrowthReport r = power_growth(f, 6, {f}, 6);
  int len_bad = 0;
  for (const auto& row : r.series) len_bad += row.word_length != row.n;
  return {6, "", bad == 0 && len_bad == 0, cat("breakpoint mismatches ", bad, "/50, word length mismatches ", len_bad, "/6")};
}

CriterionResult order_axioms(const AcceptanceOptions& opt) {
  Rng rng(opt.seed + 7);
  int tri = 0, cone = 0, conj = 0;
  PLMap prev = random_1d_map(rng);
  for (int i = 0; i < 500; ++i) {
    const PLMap f = random_1d_map(rng), g = random_1d_map(rng);
    const int s = onedim_sign(f);
    tri += (s == 1) + (onedim_sign(inverse(f)) == 1) + int(is_identity(f)) != 1;
    if (s == 1 && onedim_sign(prev) == 1) cone += onedim_sign(compose(f, prev)) != 1;
    conj += onedim_sign(compose(g, compose(f, inverse(g)))) != s;
    prev = f;
  }
  int trans = 0;
  for (int i = 0; i < 100; ++i) {
    const PLMap a = random_1d_map(rng), b = random_1d_map(rng), c = random_1d_map(rng);
    const int ab = onedim_compare(a, b), bc = onedim_compare(b, c), ac = onedim_compare(a, c);
    if (ab <= 0 && bc <= 0) trans += ac > 0;
    if (ab >= 0 && bc >= 0) trans += ac < 0;
  }
  const bool ok = tri == 0 && cone == 0 && conj == 0 && trans == 0;
  return {7, "", ok, cat("500 maps: trichotomy ", tri, ", cone ", cone, ", conjugation ", conj, " failures; transitivity ", trans, "/100")};
}

CriterionResult circular(const AcceptanceOptions& opt) {
  Rng rng(opt.seed + 8);
  auto e = [](const Ray& a, const Ray& b, const Ray& c) { return ray_circular_order(a, b, c); };
  int tested = 0, cocycle_bad = 0;
  while (tested < 1000) {
    std::array<Ray, 4> q{random_ray(rng, 50), random_ray(rng, 50), random_ray(rng, 50), random_ray(rng, 50)};
    bool distinct = true;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) distinct = distinct && !(q[i] == q[j]);
    if (!distinct) continue;
    cocycle_bad += !cocycle_check(e, q);
    ++tested;
  }
  int inv_bad = 0;
  for (int i = 0; i < 200; ++i) {
    const RatMatrix m = random_glplus(rng, 20);
    const Ray a = random_ray(rng, 50), b = random_ray(rng, 50), c = random_ray(rng, 50);
    inv_bad += ray_circular_order(m * a, m * b, m * c) != ray_circular_order(a, b, c);
  }
  return {8, "", cocycle_bad == 0 && inv_bad == 0,
          cat("cocycle failures ", cocycle_bad, "/1000, GL+ invariance failures ", inv_bad, "/200")};
}

CriterionResult braid_cocycle(const AcceptanceOptions& opt) {
  const PLMap h = twist_root(kTwist);
  const std::vector<PLMap> pool{h, power(h, 2), power(h, 3), inverse(h), embed_support(h, figure2_left_square()),
                                embed_support(inverse(h), figure2_right_square()),
                                embed_support(h, {pt(Rational(-1, 2), Rational(-1, 2)), pt(Rational(1, 4), Rational(1, 4))})};
  Rng rng(opt.seed + 9);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  const auto base = default_basepoints(3);
  int ok = 0, degenerate = 0, mismatch = 0;
  while (ok < 100) {
    const PLMap& g = pool[pick(rng)];
    const PLMap& f = pool[pick(rng)];
    std::vector<RatPoint> x{random_dyadic_point(rng), random_dyadic_point(rng), random_dyadic_point(rng)};
    std::vector<RatPoint> fx;
    for (const auto& p : x) fx.push_back(apply(f, p));
    try {
      const BraidWord lhs = braid_word(compose(g, f), base, x);
      const BraidWord rhs = (braid_word(f, base, x) * braid_word(g, base, fx)).reduced();
      mismatch += !(lhs == rhs);
      ++ok;
    } catch (const BraidDegeneracy&) {
      ++degenerate;
    }
  }
  const double rate = double(degenerate) / double(degenerate + ok);
  return {9, "", mismatch == 0 && rate < 0.05,
          cat(ok, " generic samples, ", mismatch, " mismatches, degeneracy rate ", rate)};
}

CriterionResult phi(const AcceptanceOptions& opt) {
  const QuasimorphismSpec lk{QuasimorphismSpec::Kind::pair_linking, 2, 0, {}};
  const PhiReport zero = phi_estimate(PLMap::identity(2), lk, 2, 64, opt.seed, opt.jobs);
  const PLMap h12 = power(twist_root(kTwist), 12);
  const PhiReport est = phi_estimate(h12, lk, 2, opt.phi_samples, opt.seed + 10, opt.jobs);
  const auto base = default_basepoints(2);
  const reference::P b1{base[0][0].to_double(), 0}, b2{base[1][0].to_double(), 0};
  const double oracle = reference::grid_pair_linking({0.5, 1.0}, opt.grid, b1, b2);
  const double diff = est.estimate.to_double() - oracle;
  const bool close = diff * diff <= 9 * est.mean_variance.to_double();

  const PhiReport est2 = phi_estimate(power(h12, 2), lk, 2, opt.phi_samples, opt.seed + 11, opt.jobs);
  const double lin = est2.estimate.to_double() - 2 * est.estimate.to_double();
  const double lin_var = est2.mean_variance.to_double() + 4 * est.mean_variance.to_double();
  const bool linear = lin * lin <= 9 * lin_var;
  const bool ok = zero.estimate.is_zero() && close && linear;
  return {10, "", ok,
          cat("Phi(id)=", zero.estimate, "; Phi(h^12)=", est.estimate.to_double(), " oracle=", oracle, " stderr=", est.stderr_approx,
              "; Phi(h^24)=", est2.estimate.to_double(), " vs 2 Phi(h^12), stderr=", std::sqrt(lin_var),
              "; resampled ", est.resampled + est2.resampled)};
}

CriterionResult witness(const AcceptanceOptions& opt) {
  Rng rng(opt.seed + 12);
  int trivial = 0, tested = 0;
  while (tested < 20) {
    const PLMap g = tested % 2 ? random_2d_map(rng) : random_1d_map(rng);
    if (is_identity(g)) continue;
    trivial += !indicability_witness({g}).nontrivial;
    ++tested;
  }
  const WitnessReport w = indicability_witness({twist_root(kTwist)});
  const bool edge = on_cube_boundary(w.point) && w.per_generator.size() == 1 &&
                    w.per_generator[0].v == std::vector<Rational>{Rational(-2, 3)} && w.per_generator[0].a == Rational(1);
  return {11, "", trivial == 0 && edge,
          cat(tested - trivial, "/20 witnesses nontrivial; <h> at ", w.point.str(), ": V=",
              w.per_generator.empty() || w.per_generator[0].v.empty() ? std::string("?") : w.per_generator[0].v[0].str(),
              " a=", w.per_generator.empty() ? std::string("?") : w.per_generator[0].a.str())};
}

CriterionResult serialization(const AcceptanceOptions& opt) {
  Rng rng(opt.seed + 13);
  int bad = 0;
  for (int i = 0; i < 100; ++i) {
    const PLMap f = random_map(rng, i % 2 ? 2 : 1);
    const std::string text = serialize(f);
    const PLMap back = parse_map(text);
    bad += serialize(back) != text || serialize(canonicalize(back)) != serialize(canonicalize(f)) || !equals(back, f);
  }
  return {12, "", bad == 0, cat("100 maps, ", bad, " round-trip failures")};
}

using Runner = std::function<CriterionResult(const AcceptanceOptions&)>;

const std::vector<std::pair<std::string, Runner>>& table() {
  static const std::vector<std::pair<std::string, Runner>> t{
      {"group-axioms", group_axioms},   {"twist", twist},
      {"klein-relation", klein},        {"suspension", suspension},
      {"distortion-bounds", distortion_bounds}, {"undistorted", undistorted},
      {"order-axioms", order_axioms},   {"circular-order", circular},
      {"braid-cocycle", braid_cocycle}, {"phi-estimator", phi},
      {"witness", witness},             {"serialization", serialization}};
  return t;
}

}  // namespace

const std::vector<std::string>& criterion_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [n, r] : table()) v.push_back(n);
    return v;
  }();
  return names;
}

int criterion_id(const std::string& name) {
  const auto& names = criterion_names();
  for (std::size_t i = 0; i < names.size(); ++i)
    if (names[i] == name) return int(i) + 1;
  return 0;
}

CriterionResult run_criterion(int id, const AcceptanceOptions& opt) {
  if (id < 1 || id > int(table().size())) throw DomainError("run_criterion: no criterion " + std::to_string(id));
  const auto start = std::chrono::steady_clock::now();
  CriterionResult r;
  try {
    r = table()[id - 1].second(opt);
  } catch (const std::exception& e) {
    r.passed = false;
    r.detail = std::string("error: ") + e.what();
  }
  r.id = id;
  r.name = table()[id - 1].first;
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace plcube
