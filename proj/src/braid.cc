#include "plcube/braid.h"

#include <algorithm>
#include <cmath>
#include <exception>
#include <random>
#include <sstream>
#include <thread>

#include "plcube/errors.h"
#include "plcube/invariants.h"

namespace plcube {

BraidWord BraidWord::reduced() const {
  BraidWord out{strands, {}};
  for (const auto& l : letters) {
    if (!out.letters.empty() && out.letters.back().index == l.index && out.letters.back().sign == -l.sign) {
      out.letters.pop_back();
    } else {
      out.letters.push_back(l);
    }
  }
  return out;
}

BraidWord BraidWord::inverse() const {
  BraidWord out{strands, {}};
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) out.letters.push_back({it->index, -it->sign});
  return out;
}

std::string BraidWord::str() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < letters.size(); ++i) os << (i ? " " : "") << letters[i].sign * letters[i].index;
  return os.str();
}

BraidWord operator*(const BraidWord& a, const BraidWord& b) {
  if (a.strands != b.strands) throw DomainError("braid product: strand counts differ");
  BraidWord out = a;
  out.letters.insert(out.letters.end(), b.letters.begin(), b.letters.end());
  return out;
}

namespace {

using FreeWord = std::vector<int>;  // generator k as k, its inverse as -k

void push_reduced(FreeWord& w, int g) {
  if (!w.empty() && w.back() == -g) {
    w.pop_back();
  } else {
    w.push_back(g);
  }
}

// Image of x_k under the Artin automorphism of one letter.
FreeWord artin_image(const BraidLetter& l, int k) {
  const int i = l.index, j = l.index + 1;
  if (k != i && k != j) return {k};
  if (l.sign > 0) return k == i ? FreeWord{i, j, -i} : FreeWord{i};
  return k == i ? FreeWord{j} : FreeWord{-j, i, j};
}

FreeWord substitute(const FreeWord& w, const BraidLetter& l) {
  FreeWord out;
  for (int g : w) {
    FreeWord img = artin_image(l, std::abs(g));
    if (g < 0) {
      std::reverse(img.begin(), img.end());
      for (int& x : img) x = -x;
    }
    for (int x : img) push_reduced(out, x);
  }
  return out;
}

}  // namespace

bool braid_equal(const BraidWord& a, const BraidWord& b) {
  const BraidWord w = (a * b.inverse()).reduced();
  for (int k = 1; k <= w.strands; ++k) {
    FreeWord img{k};
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) img = substitute(img, *it);
    if (img != FreeWord{k}) return false;
  }
  return true;
}

RatPoint Trajectory::at(const Rational& s) const {
  for (const auto& p : pieces) {
    if (s >= p.s0 && s <= p.s1) return p.u + p.v * s;
  }
  throw DomainError("trajectory: parameter outside [0,1]");
}

Trajectory trajectory(const PLMap& g, const RatPoint& x) {
  if (g.dim() != 2) throw DimensionError("trajectory: expected a 2-dimensional map");
  const Rational zero, one(1);
  const Rational l = linf_norm(x);
  if (l > one) throw DomainError("trajectory: point outside the cube");
  if (l.is_zero() || l == one) return {{{zero, one, x, RatPoint(2)}}};
  const PLMap f = g.is_suspension() ? g.as_generic() : g;

  // The point x/s runs outward along the ray through x as s decreases; with
  // t = 1/s it is t*x for t in [1, 1/l], and each cell cuts out a t-interval.
  const Rational tmax = one / l;
  std::vector<TrajectoryPiece> found;
  for (const auto& c : f.cells()) {
    if (!c.simplex.full_dimensional()) continue;
    Rational lo(1), hi = tmax;
    bool empty = false;
    for (int i = 0; i < 3 && !empty; ++i) {
      const RatPoint& a = c.simplex[i];
      const RatPoint& b = c.simplex[(i + 1) % 3];
      const RatPoint e = b - a;
      // orientation * cross(e, t x - a) >= 0
      Rational alpha = e[0] * x[1] - e[1] * x[0];
      Rational beta = e[1] * a[0] - e[0] * a[1];
      if (c.simplex.orientation() < 0) {
        alpha = -alpha;
        beta = -beta;
      }
      if (alpha.is_zero()) {
        empty = beta < zero;
      } else if (alpha > zero) {
        lo = max(lo, -beta / alpha);
      } else {
        hi = min(hi, -beta / alpha);
      }
      empty = empty || lo >= hi;
    }
    if (empty) continue;
    // s (A x/s + b) = A x + s b
    found.push_back({one / hi, one / lo, c.map.linear * x, c.map.translation});
  }
  std::sort(found.begin(), found.end(), [](const auto& p, const auto& q) { return p.s0 < q.s0; });
  Trajectory t;
  t.pieces.push_back({zero, l, x, RatPoint(2)});
  Rational cur = l;
  for (auto& p : found) {
    if (p.s1 <= cur) continue;
    if (p.s0 > cur) throw Error("trajectory: cells do not cover the ray");
    p.s0 = cur;
    cur = p.s1;
    auto& last = t.pieces.back();
    if (last.u == p.u && last.v == p.v) {
      last.s1 = p.s1;
    } else {
      t.pieces.push_back(std::move(p));
    }
  }
  if (cur != one) throw Error("trajectory: cells do not cover the ray");
  return t;
}

std::vector<RatPoint> default_basepoints(int n) {
  std::vector<RatPoint> out;
  for (int i = 1; i <= n; ++i) out.push_back(RatPoint{Rational(2 * i - n - 1, n + 1), 0});
  return out;
}

namespace {

// p(T) = u + T v on [t0, t1]; global time runs over [0,3].
struct Segment {
  Rational t0, t1;
  RatPoint u, v;
};

using Path = std::vector<Segment>;

Segment line(const Rational& t0, const RatPoint& from, const RatPoint& to) {
  // from at t0, to at t0+1
  RatPoint v = to - from;
  return {t0, t0 + Rational(1), from - v * t0, v};
}

RatPoint eval(const Path& p, const Rational& t) {
  for (const auto& s : p) {
    if (t <= s.t1) return s.u + s.v * t;
  }
  return p.back().u + p.back().v * t;
}

[[noreturn]] void degenerate(std::size_t i, std::size_t j, const std::string& what, const Rational& t) {
  throw BraidDegeneracy("strands " + std::to_string(i + 1) + "," + std::to_string(j + 1) + " " + what + " at time " +
                        t.str());
}

}  // namespace

BraidWord braid_word(const PLMap& g, const std::vector<RatPoint>& basepoints, const std::vector<RatPoint>& samples) {
  const std::size_t n = basepoints.size();
  if (samples.size() != n || n == 0) throw DomainError("braid_word: need equally many basepoints and samples");
  std::vector<Path> paths(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (linf_norm(samples[i]) >= Rational(1) || linf_norm(basepoints[i]) >= Rational(1))
      throw DomainError("braid_word: points must lie in the open square");
    const Trajectory tr = trajectory(g, samples[i]);
    Path& p = paths[i];
    p.push_back(line(0, basepoints[i], samples[i]));
    for (const auto& q : tr.pieces) {
      p.push_back({q.s0 + Rational(1), q.s1 + Rational(1), q.u - q.v, q.v});
    }
    p.push_back(line(2, tr.pieces.back().u + tr.pieces.back().v, basepoints[i]));
  }

  std::vector<Rational> breaks;
  for (const auto& p : paths)
    for (const auto& s : p) breaks.push_back(s.t0), breaks.push_back(s.t1);
  std::sort(breaks.begin(), breaks.end());
  breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());

  std::vector<Rational> events;
  for (std::size_t b = 0; b + 1 < breaks.size(); ++b) {
    const Rational &a = breaks[b], &c = breaks[b + 1];
    const Rational mid = (a + c) / Rational(2);
    std::vector<std::pair<Rational, Rational>> lin(n);  // x-coordinate as u + T v
    for (std::size_t i = 0; i < n; ++i) {
      const RatPoint pa = eval(paths[i], a), pc = eval(paths[i], c);
      const Rational v = (pc[0] - pa[0]) / (c - a);
      lin[i] = {pa[0] - v * a, v};
    }
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        const Rational du = lin[i].first - lin[j].first, dv = lin[i].second - lin[j].second;
        if (dv.is_zero()) {
          if (du.is_zero()) degenerate(i, j, "share an x-coordinate on an interval", mid);
          continue;
        }
        const Rational r = -du / dv;
        if (r >= a && r <= c) events.push_back(r);
      }
    }
  }
  std::sort(events.begin(), events.end());
  events.erase(std::unique(events.begin(), events.end()), events.end());

  std::vector<Rational> crit = breaks;
  crit.insert(crit.end(), events.begin(), events.end());
  std::sort(crit.begin(), crit.end());
  crit.erase(std::unique(crit.begin(), crit.end()), crit.end());

  auto order_at = [&](const Rational& t) {
    std::vector<std::size_t> ord(n);
    std::vector<Rational> xs(n);
    for (std::size_t i = 0; i < n; ++i) ord[i] = i, xs[i] = eval(paths[i], t)[0];
    std::sort(ord.begin(), ord.end(), [&](std::size_t a, std::size_t b) { return xs[a] < xs[b]; });
    for (std::size_t k = 0; k + 1 < n; ++k) {
      if (xs[ord[k]] == xs[ord[k + 1]]) degenerate(ord[k], ord[k + 1], "share an x-coordinate", t);
    }
    return ord;
  };

  BraidWord w{int(n), {}};
  std::vector<std::size_t> order = order_at(Rational(0));
  for (const auto& e : events) {
    std::vector<RatPoint> pos(n);
    for (std::size_t i = 0; i < n; ++i) pos[i] = eval(paths[i], e);
    std::vector<int> touched(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (pos[i][0] != pos[j][0]) continue;
        if (pos[i][1] == pos[j][1]) degenerate(i, j, "collide", e);
        if (++touched[i] > 1 || ++touched[j] > 1) degenerate(i, j, "take part in a triple crossing", e);
      }
    }
    auto next = std::upper_bound(crit.begin(), crit.end(), e);
    if (next == crit.end()) continue;
    const std::vector<std::size_t> after = order_at((e + *next) / Rational(2));
    std::vector<std::size_t> expect = order;
    for (std::size_t k = 0; k + 1 < n; ++k) {
      const std::size_t a = order[k], b = order[k + 1];
      if (pos[a][0] != pos[b][0] || after[k] != b || after[k + 1] != a) continue;
      w.letters.push_back({int(k) + 1, pos[a][1] < pos[b][1] ? 1 : -1});
      std::swap(expect[k], expect[k + 1]);
      ++k;
    }
    if (expect != after) throw Error("braid_word: unexpected reordering of strands");
    order = after;
  }
  return w.reduced();
}

Rational mu_eval(const QuasimorphismSpec& spec, const BraidWord& w) {
  if (spec.strands != 0 && spec.strands != w.strands) throw DomainError("mu_eval: arity mismatch");
  switch (spec.kind) {
    case QuasimorphismSpec::Kind::exponent_sum: {
      long s = 0;
      for (const auto& l : w.letters) s += l.sign;
      return Rational(s);
    }
    case QuasimorphismSpec::Kind::pair_linking: {
      // Signed crossings between each pair of strands, halved and summed.
      std::vector<int> perm(w.strands);
      for (int i = 0; i < w.strands; ++i) perm[i] = i;
      std::map<std::pair<int, int>, long> cross;
      for (const auto& l : w.letters) {
        int& a = perm[l.index - 1];
        int& b = perm[l.index];
        cross[{std::min(a, b), std::max(a, b)}] += l.sign;
        std::swap(a, b);
      }
      Rational total;
      for (const auto& [pair, c] : cross) total += Rational(c, 2);
      return total;
    }
    case QuasimorphismSpec::Kind::table: {
      auto it = spec.table.find(w.reduced().str());
      if (it == spec.table.end()) throw NotFoundError("mu_eval: word '" + w.reduced().str() + "' not in table");
      return it->second;
    }
  }
  return Rational();
}

PhiReport phi_estimate(const PLMap& g, const QuasimorphismSpec& spec, int n, std::size_t samples, std::uint64_t seed,
                       int jobs) {
  if (g.dim() != 2) throw DimensionError("phi_estimate: expected a 2-dimensional map");
  if (samples == 0 || n < 1) throw DomainError("phi_estimate: need at least one strand and one sample");
  if (!volume_check(g).preserves) throw DomainError("phi_estimate: map does not preserve area");
  const auto base = default_basepoints(n);
  const long scale = 1L << 20;
  const Rational volume = pow(Rational(4), unsigned(n));

  std::vector<Rational> values(samples);
  std::vector<std::size_t> retries(samples, 0);
  auto work = [&](std::size_t i) {
    for (std::uint64_t attempt = 0;; ++attempt) {
      if (attempt == 1000) throw Error("phi_estimate: too many degenerate samples");
      std::seed_seq seq{std::uint64_t(seed), std::uint64_t(i), attempt};
      std::mt19937_64 rng(seq);
      std::uniform_int_distribution<long> coord(-(scale - 1), scale - 1);
      std::vector<RatPoint> pts;
      for (int k = 0; k < n; ++k) {
        const long a = coord(rng), b = coord(rng);
        pts.push_back(RatPoint{Rational(a, scale), Rational(b, scale)});
      }
      try {
        values[i] = mu_eval(spec, braid_word(g, base, pts)) * volume;
        return;
      } catch (const BraidDegeneracy&) {
        ++retries[i];
      }
    }
  };

  jobs = std::max(1, jobs);
  std::vector<std::exception_ptr> errors(jobs);
  std::vector<std::thread> pool;
  for (int j = 0; j < jobs; ++j) {
    pool.emplace_back([&, j] {
      try {
        for (std::size_t i = j; i < samples; i += jobs) work(i);
      } catch (...) {
        errors[j] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);

  PhiReport r;
  r.samples = samples;
  for (auto c : retries) r.resampled += c;
  Rational sum;
  for (const auto& v : values) sum += v;
  r.estimate = sum / Rational(long(samples));
  if (samples > 1) {
    Rational ss;
    for (const auto& v : values) ss += (v - r.estimate) * (v - r.estimate);
    r.variance = ss / Rational(long(samples) - 1);
  }
  r.mean_variance = r.variance / Rational(long(samples));
  r.stderr_approx = std::sqrt(r.mean_variance.to_double());
  return r;
}

Rational homogenize(const std::vector<std::pair<long, Rational>>& values) {
  if (values.size() < 2) throw DomainError("homogenize: need at least two powers");
  Rational sx, sy, sxx, sxy;
  const Rational m(long(values.size()));
  for (const auto& [n, y] : values) {
    const Rational x(n);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const Rational den = m * sxx - sx * sx;
  if (den.is_zero()) throw DomainError("homogenize: powers must not all be equal");
  return (m * sxy - sx * sy) / den;
}

}  // namespace plcube
