#include "doctest.h"
#include "plcube/constructors.h"
#include "plcube/distortion.h"
#include "plcube/errors.h"
#include "plcube/invariants.h"

using namespace plcube;

namespace {

RatPoint pt(Rational x, Rational y) { return RatPoint{std::move(x), std::move(y)}; }

const TwistSpec kSpec{Rational(1, 2), Rational(1, 12)};

}  // namespace

TEST_CASE("word balls") {
  auto f = pl1d({{-1, -1}, {0, Rational(1, 2)}, {1, 1}});
  auto b = word_ball({f}, 3);
  CHECK(b.elements.size() == 7);
  for (const auto& e : b.elements) CHECK(e.word.size() <= 3);
  CHECK(word_ball({PLMap::identity(1)}, 5).elements.size() == 1);
  CHECK_THROWS_AS(word_ball({f}, 7), DomainError);
  CHECK(word_ball({f}, 7, 7).elements.size() == 15);

  auto h = twist_root(kSpec);
  auto left = embed_support(h, figure2_left_square());
  auto right = embed_support(h, figure2_right_square());
  auto ab = word_ball({left, right}, 2);
  CHECK(ab.elements.size() == 13);
  for (std::size_t i = 0; i < ab.elements.size(); ++i)
    for (std::size_t j = i + 1; j < ab.elements.size(); ++j) CHECK_FALSE(equals(ab.elements[i].map, ab.elements[j].map));
  // Same ball with threads.
  auto ab2 = word_ball({left, right}, 2, std::nullopt, 3);
  REQUIRE(ab2.elements.size() == ab.elements.size());
  for (std::size_t i = 0; i < ab.elements.size(); ++i) CHECK(ab2.elements[i].word == ab.elements[i].word);
}

TEST_CASE("power growth") {
  auto h = twist_root(kSpec);
  auto rep = power_growth(h, 8);
  REQUIRE(rep.series.size() == 8);
  CHECK(rep.c > Rational(0));
  for (const auto& r : rep.series) {
    CHECK(r.d >= rep.c * Rational(r.n));
    CHECK(r.cells >= std::size_t(r.n));
    CHECK(r.word_length == r.n);
  }
  CHECK(rep.series.back().d > rep.series.front().d);
  // D(h^n) is 4n/3 up to a correction of period 3, exact at multiples of 3.
  CHECK(rep.c == Rational(4, 3));
  for (const auto& r : rep.series) {
    CHECK(r.d <= Rational(4, 3) * Rational(r.n + 1));
    if (r.n % 3 == 0) CHECK(r.d == Rational(4 * r.n, 3));
  }
  CHECK_THROWS_AS(power_growth(PLMap::identity(2), 3), DomainError);

  auto f = pl1d({{-1, -1}, {0, Rational(1, 2)}, {1, 1}});
  auto r1 = power_growth(f, 12, {f}, 6);
  for (const auto& r : r1.series) {
    CHECK(r.breakpoints == std::size_t(r.n));
    if (r.n <= 6) {
      CHECK(r.word_length == r.n);
    } else {
      CHECK_FALSE(r.word_length.has_value());
    }
  }
  REQUIRE(r1.profile.size() == 7);
  CHECK(r1.profile[4] == std::pair<long, long>{4, 4});
}

TEST_CASE("verify_bounds") {
  CHECK(verify_bounds({PLMap::identity(2)}, 4).passed());
  auto f = pl1d({{-1, -1}, {0, Rational(1, 2)}, {1, 1}});
  auto g = pl1d({{-1, -1}, {Rational(-1, 2), Rational(-1, 4)}, {Rational(1, 4), Rational(1, 2)}, {1, 1}});
  auto r1 = verify_bounds({f, g}, 4);
  CHECK(r1.passed());
  CHECK(r1.elements > 20);
  auto r2 = verify_bounds({twist_root(kSpec), embedded_shear()}, 2);
  CHECK(r2.passed());
  CHECK(r2.checked == r2.elements);
}
