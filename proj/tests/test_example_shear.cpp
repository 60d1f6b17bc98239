#include <doctest.h>

#include <cmath>

#include "farey/example_shear.hpp"
#include "test_support.hpp"

using namespace farey;

namespace {
const ExtRat inf = ExtRat::infinity();

Int pow_i(int b, int e) {
  Int r = 1;
  while (e-- > 0) r *= b;
  return r;
}
}  // namespace

TEST_CASE("power of sixteen detection") {
  CHECK(pow16_exponent(1) == 0);
  CHECK(pow16_exponent(-16) == 1);
  CHECK(pow16_exponent(256) == 2);
  CHECK_FALSE(pow16_exponent(0).has_value());
  CHECK_FALSE(pow16_exponent(32).has_value());
  CHECK_FALSE(pow16_exponent(5).has_value());
}

TEST_CASE("the example rule") {
  CHECK(example_shear_multiplier(make_edge(ExtRat(16), inf)) == Rat(1, 2));
  CHECK(example_shear_multiplier(make_edge(ExtRat(-1), inf)) == Rat(2));
  CHECK(example_shear_multiplier(make_edge(ExtRat(5), inf)) == Rat(1));
  CHECK(example_shear_multiplier(make_edge(ExtRat(0), ExtRat(1))) == Rat(1));
  CHECK_THROWS_AS(example_shear_multiplier(make_edge(ExtRat(0), ExtRat(2))), std::invalid_argument);
}

TEST_CASE("the closed form map") {
  CHECK(example_h(Rat(16)) == Rat(119, 14));
  CHECK(example_h(Rat(-256)) == Rat(-959, 14));
  CHECK(example_h(Rat(1, 2)) == Rat(1, 2));
  CHECK(example_h(Rat(0)) == Rat(0));
  for (int k = 1; k <= 8; ++k) {
    const Rat x(pow_i(16, k));
    CHECK(example_h(x) == make_rat(Int(15 * pow_i(8, k) - 1), 14));
    CHECK(example_h(-x) == -example_h(x));  // odd
  }
  // strictly increasing across the breakpoints
  Rat prev = example_h(Rat(-300));
  for (int i = -299; i <= 300; ++i) {
    const Rat cur = example_h(Rat(i, 7));
    CHECK(cur > prev);
    prev = cur;
  }
  CHECK(example_h_ext(inf) == inf);
}

TEST_CASE("symmetric ratio samples") {
  SUBCASE("inside one affine piece the ratio is one") {
    CHECK(qs_symmetric_ratio(Rat(20), Rat(1)) == Rat(1));
    CHECK(classify_qs_sample(Rat(20), Rat(1)) == QsSampleCase::interior);
  }
  SUBCASE("one boundary crossing, frozen by direct evaluation") {
    const Rat x(256), t(240);
    CHECK(classify_qs_sample(x, t) == QsSampleCase::single_boundary);
    CHECK(qs_symmetric_ratio(x, t) == Rat(1, 2));
  }
  SUBCASE("a full block sample") {
    // [x, x+t] contains [16, 256]
    const Rat x(10), t(300);
    CHECK(classify_qs_sample(x, t) == QsSampleCase::full_block);
    const Rat r = qs_symmetric_ratio(x, t);
    CHECK(r >= Rat(7, 128));
    CHECK(r <= Rat(64));
  }
  SUBCASE("near zero") {
    CHECK(classify_qs_sample(Rat(1, 2), Rat(3)) == QsSampleCase::near_zero);
  }
}

TEST_CASE("the default grid scan passes the global certificate") {
  const auto grid = default_qs_grid(5);
  const QsScanReport rep = qs_ratio_scan(grid);
  CHECK(rep.samples == long(grid.size()));
  CHECK(rep.pass);
  CHECK(rep.full_block_ok);
  CHECK(rep.global.min_ratio >= Rat(1, 512));
  CHECK(rep.global.max_ratio <= Rat(512));
  // jittered samples stay within the certificate too
  const QsScanReport rep2 = qs_ratio_scan(default_qs_grid(5, 12345, 500));
  CHECK(rep2.pass);
}

TEST_CASE("mirrored samples invert the ratio") {
  // oddness of the map sends (x, t) ratios to reciprocals on the other side
  for (const auto& [x, t] : {std::pair<int, int>{20, 7}, {300, 100}, {50, 45}}) {
    const Rat r = qs_symmetric_ratio(Rat(x), Rat(t));
    const Rat num = example_h(Rat(-x + t)) - example_h(Rat(-x));
    const Rat den = example_h(Rat(-x)) - example_h(Rat(-x - t));
    CHECK(num / den == 1 / r);
  }
}

TEST_CASE("the pinching falsifier") {
  SUBCASE("frozen small case") {
    const FalsifierReport rep = not_pinched_falsifier(3, Rat(2));
    CHECK(rep.gap == Rat(1, 16));
    CHECK(rep.forced_lambda_upper_bound == Rat(1, 4));
    CHECK(rep.fails_pinching);  // 1/4 < 1/2
  }
  SUBCASE("the gaps are the halved powers") {
    for (int k = 1; k <= 8; ++k) {
      CHECK(not_pinched_falsifier(k, Rat(2)).gap == make_rat(1, pow_i(2, k + 1)));
    }
  }
  SUBCASE("the forced bound decreases and crosses every threshold") {
    for (const long m : {2L, 10L, 100L}) {
      const Rat M(m);
      Rat prev;
      bool crossed = false;
      int crossed_at = 0;
      for (int k = 1; k <= 40; ++k) {
        const FalsifierReport rep = not_pinched_falsifier(k, M);
        if (k > 1) CHECK(rep.forced_lambda_upper_bound < prev);
        prev = rep.forced_lambda_upper_bound;
        if (rep.fails_pinching && !crossed) {
          crossed = true;
          crossed_at = k;
        }
      }
      CHECK(crossed);
      // 2^{k+1} > M^3 first happens here
      if (m == 2) CHECK(crossed_at == 3);
      if (m == 10) CHECK(crossed_at == 9);
      if (m == 100) CHECK(crossed_at == 19);
    }
  }
}
