#pragma once

#include <optional>
#include <string>
#include <vector>

#include "plcube/plmap.h"

namespace plcube {

// Letters are generator indices k >= 1 for gens[k-1] and -k for its inverse.
struct BallElement {
  PLMap map;  // canonical form
  std::vector<int> word;
};

struct WordBall {
  int radius = 0;
  std::vector<BallElement> elements;  // in BFS order
};

// Default radius caps: 6 in dimension 1, 4 in dimension 2.
int default_radius_cap(std::size_t dim);

// Breadth-first enumeration of all products of length <= radius.
// Duplicates are detected by canonical key and confirmed with equals.
WordBall word_ball(const std::vector<PLMap>& gens, int radius, std::optional<int> cap = std::nullopt, int jobs = 1);

struct GrowthRow {
  long n;
  std::optional<long> word_length;  // |g^n|_S when g^n lies in the explored ball
  Rational d;
  std::size_t cells;
  std::size_t breakpoints;  // dimension 1 only
};

struct GrowthReport {
  std::string generators;
  std::vector<GrowthRow> series;
  Rational c;  // min over n of D(g^n)/n
  // phi(m): largest n with |g^n|_S <= m among the measured powers.
  std::vector<std::pair<long, long>> profile;
};

// Powers g^1..g^n_max with D and cell counts. Word lengths are taken from a
// ball of the given radius in <gens>; gens defaults to {g}.
GrowthReport power_growth(const PLMap& g, long n_max, const std::vector<PLMap>& gens = {}, int radius = 0);

struct BoundsReport {
  std::size_t elements = 0;
  std::size_t checked = 0;
  std::vector<std::string> violations;
  bool passed() const { return violations.empty(); }
};

// Checks on every element w of the ball:
//   D(w) <= (n * max_s D(s))^|w|
//   cell_count(w) <= (4 * max_s cell_count(s))^|w|
//   in dimension 1, #breakpoints(w) <= max_s #breakpoints(s) * |w|
BoundsReport verify_bounds(const std::vector<PLMap>& gens, int radius, int jobs = 1);

}  // namespace plcube
