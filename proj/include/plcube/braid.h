#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "plcube/plmap.h"

namespace plcube {

struct BraidLetter {
  int index;  // 1 .. strands-1
  int sign;   // +1 or -1
  friend bool operator==(const BraidLetter&, const BraidLetter&) = default;
};

struct BraidWord {
  int strands = 0;
  std::vector<BraidLetter> letters;

  BraidWord reduced() const;  // cancels adjacent s_i s_i^-1
  BraidWord inverse() const;
  std::string str() const;  // e.g. "1 -2 1"
  friend bool operator==(const BraidWord&, const BraidWord&) = default;
};

BraidWord operator*(const BraidWord& a, const BraidWord& b);

// Equality in B_n, decided through the (faithful) Artin action on the free
// group of rank n.
bool braid_equal(const BraidWord& a, const BraidWord& b);

// Path s -> u + s v on [s0, s1].
struct TrajectoryPiece {
  Rational s0, s1;
  RatPoint u, v;
};

struct Trajectory {
  std::vector<TrajectoryPiece> pieces;
  RatPoint at(const Rational& s) const;
};

// Path of x under the Alexander isotopy s -> s g(./s), s in [0,1]. Constant
// until s reaches the sup norm of x.
Trajectory trajectory(const PLMap& g, const RatPoint& x);

// Basepoints travel in straight lines to the samples, follow the isotopy of
// g, and return in straight lines to their own basepoints. Crossings are read
// off in the x-projection; the strand on the left passing below (smaller y)
// gives a positive letter. Throws BraidDegeneracy on non-generic input.
BraidWord braid_word(const PLMap& g, const std::vector<RatPoint>& basepoints, const std::vector<RatPoint>& samples);

std::vector<RatPoint> default_basepoints(int n);

struct QuasimorphismSpec {
  enum class Kind { exponent_sum, pair_linking, table };
  Kind kind = Kind::exponent_sum;
  int strands = 0;  // 0 accepts any arity
  Rational defect;
  std::map<std::string, Rational> table;  // keyed by reduced word str()
};

Rational mu_eval(const QuasimorphismSpec& spec, const BraidWord& w);

struct PhiReport {
  Rational estimate;
  Rational variance;       // sample variance of the scaled values
  Rational mean_variance;  // variance / N
  double stderr_approx = 0;
  std::size_t samples = 0;
  std::size_t resampled = 0;
};

// Monte Carlo integral of mu over n-tuples of points in the square. Each
// sample draws from a generator seeded by (seed, sample index, attempt), so
// the result is independent of jobs.
PhiReport phi_estimate(const PLMap& g, const QuasimorphismSpec& spec, int n, std::size_t samples, std::uint64_t seed,
                       int jobs = 1);

// Least-squares slope of the values against n.
Rational homogenize(const std::vector<std::pair<long, Rational>>& values);

}  // namespace plcube
