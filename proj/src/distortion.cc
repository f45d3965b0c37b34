#include "plcube/distortion.h"

#include <algorithm>
#include <exception>
#include <map>
#include <thread>
#include <unordered_map>

#include "plcube/errors.h"
#include "plcube/invariants.h"

namespace plcube {

namespace {

template <class F>
void parallel_for(std::size_t count, int jobs, const F& body) {
  jobs = std::max(1, jobs);
  if (jobs == 1 || count < 2) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::vector<std::exception_ptr> errors(jobs);
  std::vector<std::thread> pool;
  for (int j = 0; j < jobs; ++j) {
    pool.emplace_back([&, j] {
      try {
        for (std::size_t i = j; i < count; i += jobs) body(i);
      } catch (...) {
        errors[j] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

std::string word_str(const std::vector<int>& w) {
  std::string s;
  for (int l : w) s += (s.empty() ? "" : " ") + std::to_string(l);
  return s.empty() ? "e" : s;
}

}  // namespace

int default_radius_cap(std::size_t dim) { return dim <= 1 ? 6 : 4; }

WordBall word_ball(const std::vector<PLMap>& gens, int radius, std::optional<int> cap, int jobs) {
  if (gens.empty()) throw DomainError("word_ball: no generators");
  const std::size_t dim = gens[0].dim();
  for (const auto& g : gens) {
    if (g.dim() != dim) throw DimensionError("word_ball: generators of different dimensions");
  }
  if (dim > 2) throw UnsupportedDimension("word_ball: dimension above 2");
  if (radius < 0 || radius > cap.value_or(default_radius_cap(dim)))
    throw DomainError("word_ball: radius " + std::to_string(radius) + " exceeds the cap");

  std::vector<std::pair<int, PLMap>> letters;
  for (std::size_t k = 0; k < gens.size(); ++k) {
    letters.push_back({int(k) + 1, canonicalize(gens[k])});
    letters.push_back({-int(k) - 1, canonicalize(inverse(gens[k]))});
  }

  WordBall ball{radius, {}};
  std::unordered_map<std::string, std::vector<std::size_t>> seen;
  auto insert = [&](PLMap m, std::string key, std::vector<int> word) {
    auto& bucket = seen[key];
    for (std::size_t i : bucket) {
      if (equals(ball.elements[i].map, m)) return false;
    }
    bucket.push_back(ball.elements.size());
    ball.elements.push_back({std::move(m), std::move(word)});
    return true;
  };
  const PLMap id = PLMap::identity(dim);
  insert(id, canonical_key(id), {});

  std::vector<std::size_t> frontier{0};
  for (int r = 1; r <= radius && !frontier.empty(); ++r) {
    const std::size_t count = frontier.size() * letters.size();
    std::vector<PLMap> maps(count);
    std::vector<std::string> keys(count);
    parallel_for(count, jobs, [&](std::size_t i) {
      const auto& e = ball.elements[frontier[i / letters.size()]];
      maps[i] = canonicalize(compose(e.map, letters[i % letters.size()].second));
      keys[i] = canonical_key(maps[i]);
    });
    std::vector<std::size_t> next;
    for (std::size_t i = 0; i < count; ++i) {
      auto word = ball.elements[frontier[i / letters.size()]].word;
      word.push_back(letters[i % letters.size()].first);
      if (insert(std::move(maps[i]), std::move(keys[i]), std::move(word))) next.push_back(ball.elements.size() - 1);
    }
    frontier = std::move(next);
  }
  return ball;
}

GrowthReport power_growth(const PLMap& g, long n_max, const std::vector<PLMap>& gens, int radius) {
  if (is_identity(g)) throw DomainError("power_growth: identity has no growth");
  if (n_max < 1) throw DomainError("power_growth: n_max must be positive");
  GrowthReport rep;
  rep.generators = gens.empty() ? "<g>" : std::to_string(gens.size()) + " generators, radius " + std::to_string(radius);

  std::unordered_map<std::string, long> lengths;
  if (!gens.empty()) {
    for (const auto& e : word_ball(gens, radius, radius).elements) lengths.emplace(canonical_key(e.map), long(e.word.size()));
  }

  PLMap p = PLMap::identity(g.dim());
  const PLMap cg = canonicalize(g);
  for (long n = 1; n <= n_max; ++n) {
    p = canonicalize(compose(cg, p));
    GrowthRow row{n, std::nullopt, matrix_norm(p), cell_count(p), 0};
    if (gens.empty()) {
      row.word_length = n;
    } else if (auto it = lengths.find(canonical_key(p)); it != lengths.end()) {
      row.word_length = it->second;
    }
    if (g.dim() == 1) row.breakpoints = breakpoints(p).size();
    const Rational ratio = row.d / Rational(n);
    if (n == 1 || ratio < rep.c) rep.c = ratio;
    rep.series.push_back(std::move(row));
  }

  long max_len = 0;
  for (const auto& r : rep.series)
    if (r.word_length) max_len = std::max(max_len, *r.word_length);
  for (long m = 0; m <= max_len; ++m) {
    long best = 0;
    for (const auto& r : rep.series)
      if (r.word_length && *r.word_length <= m) best = std::max(best, r.n);
    rep.profile.push_back({m, best});
  }
  return rep;
}

BoundsReport verify_bounds(const std::vector<PLMap>& gens, int radius, int jobs) {
  const WordBall ball = word_ball(gens, radius, std::nullopt, jobs);
  const std::size_t dim = gens[0].dim();
  Rational max_d;
  std::size_t max_cells = 0, max_breaks = 0;
  for (const auto& g : gens) {
    for (const PLMap& s : {g, inverse(g)}) {
      max_d = max(max_d, matrix_norm(s));
      max_cells = std::max(max_cells, cell_count(s));
      if (dim == 1) max_breaks = std::max(max_breaks, breakpoints(s).size());
    }
  }
  BoundsReport rep;
  rep.elements = ball.elements.size();
  std::vector<std::vector<std::string>> found(ball.elements.size());
  parallel_for(ball.elements.size(), jobs, [&](std::size_t i) {
    const auto& e = ball.elements[i];
    const unsigned len = e.word.size();
    const Rational d = matrix_norm(e.map);
    if (d > pow(Rational(long(dim)) * max_d, len))
      found[i].push_back("D bound fails for " + word_str(e.word) + ": D = " + d.str());
    const std::size_t cells = cell_count(e.map);
    if (Rational(long(cells)) > pow(Rational(4 * long(max_cells)), len))
      found[i].push_back("cell bound fails for " + word_str(e.word) + ": " + std::to_string(cells) + " cells");
    if (dim == 1) {
      const std::size_t b = breakpoints(e.map).size();
      if (b > max_breaks * len)
        found[i].push_back("breakpoint bound fails for " + word_str(e.word) + ": " + std::to_string(b));
    }
  });
  for (auto& v : found) {
    rep.checked += 1;
    rep.violations.insert(rep.violations.end(), v.begin(), v.end());
  }
  return rep;
}

}  // namespace plcube
