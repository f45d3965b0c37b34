#include "plcube/cli.h"

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "plcube/acceptance.h"
#include "plcube/constructors.h"
#include "plcube/errors.h"
#include "plcube/sampling.h"

namespace plcube {

namespace {

class Inputs {
 public:
  explicit Inputs(std::istream& in) : in_(in) {}

  std::string text(const std::string& path) {
    if (path == "-") {
      if (stdin_text_) return *stdin_text_;
      std::ostringstream os;
      os << in_.rdbuf();
      stdin_text_ = os.str();
      return *stdin_text_;
    }
    std::ifstream f(path);
    if (!f) throw ParseError("cannot read " + path);
    std::ostringstream os;
    os << f.rdbuf();
    return os.str();
  }

  PLMap map(const std::string& path) { return parse_map(text(path)); }

 private:
  std::istream& in_;
  std::optional<std::string> stdin_text_;
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, sep)) out.push_back(cur);
  return out;
}

RatPoint parse_point(const std::string& s) {
  std::vector<Rational> c;
  for (const auto& part : split(s, ',')) c.push_back(Rational::parse(part));
  if (c.empty()) throw ParseError("empty point");
  return RatPoint(std::move(c));
}

std::vector<RatPoint> parse_points(const std::string& s) {
  std::vector<RatPoint> out;
  for (const auto& part : split(s, ';')) out.push_back(parse_point(part));
  return out;
}

RatMatrix parse_matrix(const std::string& s) {
  const auto rows = parse_points(s);
  RatMatrix m(rows.size(), rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].dim() != rows.size()) throw ParseError("matrix must be square: " + s);
    for (std::size_t j = 0; j < rows.size(); ++j) m(i, j) = rows[i][j];
  }
  return m;
}

std::vector<Node> parse_nodes(const std::string& s) {
  std::vector<Node> out;
  for (const auto& part : split(s, ',')) {
    const auto xy = split(part, ':');
    if (xy.size() != 2) throw ParseError("node must look like x:y, got " + part);
    out.push_back({Rational::parse(xy[0]), Rational::parse(xy[1])});
  }
  return out;
}

std::uint64_t default_seed() {
  if (const char* s = std::getenv("PLCUBE_SEED")) return std::strtoull(s, nullptr, 10);
  return AcceptanceOptions{}.seed;
}

CommandResult ok(json payload, std::string summary) { return {0, std::move(payload), std::move(summary)}; }

CommandResult map_result(const PLMap& f) {
  return ok(to_json(f), std::to_string(f.dim()) + "-dimensional map with " + std::to_string(f.size()) + " cells");
}

json check_payload(const PLMap& f) {
  const ValidationReport v = validate(f);
  json j{{"dim", f.dim()}, {"cells", f.size()}, {"valid", v.passed}, {"violations", to_json(v)["violations"]}};
  if (v.passed) {
    const VolumeReport vol = volume_check(f);
    j["preserves_area"] = vol.preserves;
    j["max_det"] = to_json(vol.max_det);
    j["min_det"] = to_json(vol.min_det);
  }
  return j;
}

}  // namespace

CommandResult run(const std::vector<std::string>& args, std::istream& in) {
  Inputs inputs(in);
  CLI::App app{"Exact PL homeomorphisms of cubes", "plcube"};
  app.require_subcommand(1);
  std::string out_path;
  app.add_option("--out", out_path, "Write the JSON payload to this file");

  std::function<CommandResult()> action;
  std::string map_a, map_b, point, points, basepoints, prefer, nodes, matrix, csv, mu = "exponent_sum";
  std::string inner = "1/2", fraction = "1/12", t = "1/2", lo, hi, radius_q = "1/4", which = "g";
  std::vector<std::string> maps, suites;
  long n = 1, n_max = 30;
  int dim = 2, radius = 2, strands = 2, jobs = 1, grid = 64;
  std::optional<int> cap;
  std::size_t samples = 1000;
  std::uint64_t seed = default_seed();

  // construct
  auto* construct = app.add_subcommand("construct", "Build a map and print it as JSON");
  construct->require_subcommand(1);
  auto* c_id = construct->add_subcommand("identity", "Identity map");
  c_id->add_option("--dim", dim)->check(CLI::Range(1, 8));
  c_id->callback([&] {
    action = [&] { return map_result(PLMap::identity(dim)); };
  });
  auto* c_1d = construct->add_subcommand("pl1d", "Map of [-1,1] through graph nodes");
  c_1d->add_option("--nodes", nodes, "e.g. -1:-1,0:1/2,1:1")->required();
  c_1d->callback([&] { action = [&] { return map_result(pl1d(parse_nodes(nodes))); }; });
  auto* c_tw = construct->add_subcommand("twist", "Layered twist of concentric squares");
  c_tw->add_option("--inner", inner);
  c_tw->add_option("--fraction", fraction);
  c_tw->callback([&] {
    action = [&] { return map_result(twist_root({Rational::parse(inner), Rational::parse(fraction)})); };
  });
  auto* c_al = construct->add_subcommand("alexander", "Rescale a map into the cube of radius t");
  c_al->add_option("--map", map_a)->required();
  c_al->add_option("--t", t);
  c_al->callback([&] { action = [&] { return map_result(alexander(inputs.map(map_a), Rational::parse(t))); }; });
  auto* c_su = construct->add_subcommand("suspend", "Suspension into one dimension higher");
  c_su->add_option("--map", map_a)->required();
  c_su->callback([&] { action = [&] { return map_result(suspend(inputs.map(map_a))); }; });
  auto* c_em = construct->add_subcommand("embed", "Conjugate a map into a box");
  c_em->add_option("--map", map_a)->required();
  c_em->add_option("--lo", lo)->required();
  c_em->add_option("--hi", hi)->required();
  c_em->callback([&] {
    action = [&] { return map_result(embed_support(inputs.map(map_a), {parse_point(lo), parse_point(hi)})); };
  });
  auto* c_f2 = construct->add_subcommand("figure2", "The pair f, g with f^-1 g f = g^-1");
  c_f2->add_option("--which", which)->check(CLI::IsMember({"f", "g"}));
  c_f2->callback([&] {
    action = [&] {
      const Figure2 p = figure2_g();
      return map_result(which == "f" ? p.f : p.g);
    };
  });
  auto* c_li = construct->add_subcommand("linear", "Map that is linear near 0");
  c_li->add_option("--matrix", matrix, "a,b;c,d")->required();
  c_li->add_option("--radius", radius_q);
  c_li->callback([&] {
    action = [&] { return map_result(linear_near_zero(parse_matrix(matrix), Rational::parse(radius_q))); };
  });
  auto* c_sh = construct->add_subcommand("shear", "The shear [[1,1],[0,1]] near 0");
  c_sh->callback([&] { action = [&] { return map_result(embedded_shear()); }; });
  auto* c_pw = construct->add_subcommand("power", "n-th power of a map");
  c_pw->add_option("--map", map_a)->required();
  c_pw->add_option("--n", n)->required();
  c_pw->callback([&] { action = [&] { return map_result(canonicalize(power(inputs.map(map_a), n))); }; });

  // check: does not throw on invalid input, reports instead
  auto* check = app.add_subcommand("check", "Validate a map and test area preservation");
  check->add_option("map", map_a, "JSON file or - for stdin")->required();
  check->callback([&] {
    action = [&] {
      const PLMap f = map_from_json(json::parse(inputs.text(map_a)));
      json j = check_payload(f);
      const bool valid = j["valid"];
      return CommandResult{valid ? 0 : 1, j, valid ? "valid" : "invalid"};
    };
  });

  auto* app_apply = app.add_subcommand("apply", "Evaluate a map at a point");
  app_apply->add_option("--map", map_a)->required();
  app_apply->add_option("--point", point, "x,y")->required();
  app_apply->callback([&] {
    action = [&] {
      const RatPoint y = apply(inputs.map(map_a), parse_point(point));
      return ok({{"image", to_json(y)}}, y.str());
    };
  });

  auto* comp = app.add_subcommand("compose", "f o g");
  comp->add_option("f", map_a)->required();
  comp->add_option("g", map_b)->required();
  comp->callback([&] { action = [&] { return map_result(canonicalize(compose(inputs.map(map_a), inputs.map(map_b)))); }; });

  auto* inv = app.add_subcommand("inverse", "Inverse map");
  inv->add_option("map", map_a)->required();
  inv->callback([&] { action = [&] { return map_result(inverse(inputs.map(map_a))); }; });

  auto* invariants = app.add_subcommand("invariants", "Matrix norm, cell counts, breakpoints, volume");
  invariants->add_option("map", map_a)->required();
  invariants->callback([&] {
    action = [&] {
      const PLMap f = inputs.map(map_a);
      const VolumeReport vol = volume_check(f);
      json j{{"D", to_json(matrix_norm(f))}, {"cell_count", cell_count(f)}, {"preserves_volume", vol.preserves},
             {"max_det", to_json(vol.max_det)}, {"min_det", to_json(vol.min_det)}};
      if (f.dim() <= 2) j["triangle_count"] = triangle_count(f);
      if (f.dim() == 1) {
        json b = json::array();
        for (const auto& x : breakpoints(f)) b.push_back(to_json(x));
        j["breakpoints"] = b;
      }
      return ok(j, "D = " + matrix_norm(f).str());
    };
  });

  auto* fixed = app.add_subcommand("fixed-set", "Fixed set of a map or group and its frontier");
  fixed->add_option("maps", maps)->required();
  fixed->callback([&] {
    action = [&] {
      std::vector<PLMap> gens;
      for (const auto& m : maps) gens.push_back(inputs.map(m));
      const GroupFixedSet g = group_fixed_set(gens);
      return ok({{"fixed", to_json(g.fixed)}, {"frontier", to_json(g.frontier)}, {"frontier_contained", g.frontier_contained}},
                std::to_string(g.fixed.pieces.size()) + " fixed pieces");
    };
  });

  auto* wit = app.add_subcommand("witness", "Germ data at a frontier point of the fixed set");
  wit->add_option("maps", maps)->required();
  wit->add_option("--prefer", prefer, "x,y");
  wit->callback([&] {
    action = [&] {
      std::vector<PLMap> gens;
      for (const auto& m : maps) gens.push_back(inputs.map(m));
      std::optional<RatPoint> p;
      if (!prefer.empty()) p = parse_point(prefer);
      const WitnessReport w = indicability_witness(gens, p);
      return CommandResult{w.nontrivial ? 0 : 1, to_json(w), w.nontrivial ? "nontrivial" : "trivial germs"};
    };
  });

  // order
  auto* order = app.add_subcommand("order", "Order structures");
  order->require_subcommand(1);
  auto* o_sign = order->add_subcommand("sign", "Sign in the positive cone of PL(I)");
  o_sign->add_option("--map", map_a)->required();
  o_sign->callback([&] {
    action = [&] {
      const int s = onedim_sign(inputs.map(map_a));
      return ok({{"sign", s}}, std::to_string(s));
    };
  });
  auto* o_cmp = order->add_subcommand("compare", "Compare two maps of [-1,1]");
  o_cmp->add_option("f", map_a)->required();
  o_cmp->add_option("g", map_b)->required();
  o_cmp->callback([&] {
    action = [&] {
      const int c = onedim_compare(inputs.map(map_a), inputs.map(map_b));
      return ok({{"compare", c}}, c < 0 ? "f < g" : (c > 0 ? "f > g" : "f = g"));
    };
  });
  auto* o_co = order->add_subcommand("cocycle-test", "Cocycle identity for the circular order on rays");
  o_co->add_option("--samples", samples);
  o_co->add_option("--seed", seed);
  o_co->callback([&] {
    action = [&] {
      Rng rng(seed);
      auto e = [](const Ray& a, const Ray& b, const Ray& c) { return ray_circular_order(a, b, c); };
      std::size_t tested = 0, failures = 0;
      while (tested < samples) {
        std::array<Ray, 4> q{random_ray(rng, 50), random_ray(rng, 50), random_ray(rng, 50), random_ray(rng, 50)};
        bool distinct = true;
        for (int i = 0; i < 4; ++i)
          for (int j = i + 1; j < 4; ++j) distinct = distinct && !(q[i] == q[j]);
        if (!distinct) continue;
        failures += !cocycle_check(e, q);
        ++tested;
      }
      return CommandResult{failures ? 1 : 0, {{"samples", tested}, {"failures", failures}, {"seed", seed}},
                           std::to_string(failures) + " failures"};
    };
  });
  auto* o_germ = order->add_subcommand("germ", "Action on rays at a fixed point");
  o_germ->add_option("--map", map_a)->required();
  o_germ->add_option("--point", point)->required();
  o_germ->callback([&] {
    action = [&] {
      const CircleMapPP c = projectivized_germ(inputs.map(map_a), parse_point(point));
      return ok(to_json(c), std::to_string(c.arcs.size()) + " arcs");
    };
  });

  // braid
  auto* braid = app.add_subcommand("braid", "Braids traced by the Alexander isotopy");
  braid->require_subcommand(1);
  auto* b_tr = braid->add_subcommand("trace", "Trajectory of a point");
  b_tr->add_option("--map", map_a)->required();
  b_tr->add_option("--point", point)->required();
  b_tr->callback([&] {
    action = [&] {
      const Trajectory tr = trajectory(inputs.map(map_a), parse_point(point));
      return ok(to_json(tr), std::to_string(tr.pieces.size()) + " pieces");
    };
  });
  auto* b_wd = braid->add_subcommand("word", "Braid of a tuple of points");
  b_wd->add_option("--map", map_a)->required();
  b_wd->add_option("--points", points, "x,y;x,y;...")->required();
  b_wd->add_option("--basepoints", basepoints);
  b_wd->callback([&] {
    action = [&] {
      const auto x = parse_points(points);
      const auto base = basepoints.empty() ? default_basepoints(int(x.size())) : parse_points(basepoints);
      const BraidWord w = braid_word(inputs.map(map_a), base, x);
      return ok(to_json(w), w.str().empty() ? "trivial" : w.str());
    };
  });
  auto* b_phi = braid->add_subcommand("phi", "Monte Carlo estimate of the averaged quasimorphism");
  b_phi->add_option("--map", map_a)->required();
  b_phi->add_option("--mu", mu)->check(CLI::IsMember({"exponent_sum", "pair_linking"}));
  b_phi->add_option("--strands", strands)->check(CLI::Range(1, 16));
  b_phi->add_option("--samples", samples);
  b_phi->add_option("--seed", seed);
  b_phi->add_option("--jobs", jobs);
  b_phi->callback([&] {
    action = [&] {
      QuasimorphismSpec spec;
      spec.kind = mu == "pair_linking" ? QuasimorphismSpec::Kind::pair_linking : QuasimorphismSpec::Kind::exponent_sum;
      const PhiReport r = phi_estimate(inputs.map(map_a), spec, strands, samples, seed, jobs);
      json j = to_json(r);
      j["mu"] = mu;
      j["strands"] = strands;
      j["seed"] = seed;
      return ok(j, "estimate " + std::to_string(r.estimate.to_double()) + " +- " + std::to_string(r.stderr_approx));
    };
  });

  // distortion
  auto* dist = app.add_subcommand("distortion", "Word growth experiments");
  dist->require_subcommand(1);
  auto* d_ball = dist->add_subcommand("ball", "Enumerate a word ball");
  d_ball->add_option("maps", maps)->required();
  d_ball->add_option("--radius", radius);
  d_ball->add_option("--cap", cap);
  d_ball->add_option("--jobs", jobs);
  d_ball->callback([&] {
    action = [&] {
      std::vector<PLMap> gens;
      for (const auto& m : maps) gens.push_back(inputs.map(m));
      const WordBall b = word_ball(gens, radius, cap, jobs);
      return ok(to_json(b), std::to_string(b.elements.size()) + " elements");
    };
  });
  auto* d_pow = dist->add_subcommand("powers", "Growth of D and cell counts under powers");
  d_pow->add_option("--map", map_a)->required();
  d_pow->add_option("--n-max", n_max);
  d_pow->add_option("--csv", csv, "Also write the series as CSV");
  d_pow->callback([&] {
    action = [&] {
      const GrowthReport r = power_growth(inputs.map(map_a), n_max);
      if (!csv.empty()) {
        std::ofstream f(csv);
        f << "n,word_length,D,cells,breakpoints\n";
        for (const auto& row : r.series)
          f << row.n << ',' << (row.word_length ? std::to_string(*row.word_length) : "") << ',' << row.d << ','
            << row.cells << ',' << row.breakpoints << '\n';
      }
      return ok(to_json(r), "C = " + r.c.str());
    };
  });
  auto* d_ver = dist->add_subcommand("verify", "Check the growth inequalities on a ball");
  d_ver->add_option("maps", maps)->required();
  d_ver->add_option("--radius", radius);
  d_ver->add_option("--jobs", jobs);
  d_ver->callback([&] {
    action = [&] {
      std::vector<PLMap> gens;
      for (const auto& m : maps) gens.push_back(inputs.map(m));
      const BoundsReport r = verify_bounds(gens, radius, jobs);
      return CommandResult{r.passed() ? 0 : 1, to_json(r),
                           std::to_string(r.elements) + " elements, " + std::to_string(r.violations.size()) + " violations"};
    };
  });

  // verify
  auto* verify = app.add_subcommand("verify", "Run acceptance suites by name, or all");
  verify->add_option("suites", suites)->required();
  verify->add_option("--seed", seed);
  verify->add_option("--jobs", jobs);
  verify->add_option("--samples", samples);
  verify->add_option("--grid", grid);
  verify->callback([&] {
    action = [&] {
      AcceptanceOptions opt;
      opt.seed = seed;
      opt.jobs = jobs;
      if (verify->count("--samples")) opt.phi_samples = samples;
      opt.grid = grid;
      std::vector<int> ids;
      for (const auto& s : suites) {
        if (s == "all") {
          for (std::size_t i = 1; i <= criterion_names().size(); ++i) ids.push_back(int(i));
        } else if (int id = criterion_id(s)) {
          ids.push_back(id);
        } else {
          throw CLI::ValidationError("suites", "unknown suite " + s);
        }
      }
      json results = json::array();
      std::string summary;
      bool all = true;
      for (int id : ids) {
        const CriterionResult r = run_criterion(id, opt);
        all = all && r.passed;
        results.push_back({{"id", r.id}, {"name", r.name}, {"passed", r.passed}, {"detail", r.detail}, {"seconds", r.seconds}});
        summary += std::string(r.passed ? "PASS " : "FAIL ") + r.name + ": " + r.detail + "\n";
      }
      return CommandResult{all ? 0 : 1, {{"results", results}}, summary};
    };
  });

  std::vector<std::string> argv_store{"plcube"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());

  CommandResult result;
  try {
    app.parse(int(argv.size()), argv.data());
    result = action();
  } catch (const CLI::CallForHelp&) {
    return {0, json::object(), app.help()};
  } catch (const CLI::CallForAllHelp&) {
    return {0, json::object(), app.help("", CLI::AppFormatMode::All)};
  } catch (const CLI::Error& e) {
    return {2, {{"error", e.what()}}, std::string(e.what()) + "\n" + app.help()};
  } catch (const InvalidMapError& e) {
    return {1, {{"error", e.what()}, {"kind", "invalid_map"}}, e.what()};
  } catch (const Error& e) {
    return {2, {{"error", e.what()}}, e.what()};
  } catch (const json::exception& e) {
    return {2, {{"error", e.what()}}, e.what()};
  }
  if (!out_path.empty()) {
    std::ofstream f(out_path);
    if (!f) return {2, {{"error", "cannot write " + out_path}}, "cannot write " + out_path};
    f << result.payload.dump(2) << '\n';
  }
  return result;
}

}  // namespace plcube
