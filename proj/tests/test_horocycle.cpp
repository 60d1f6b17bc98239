#include <doctest.h>

#include <cmath>
#include <random>

#include "farey/horocycle.hpp"
#include "test_support.hpp"

using namespace farey;
using farey::test::close;

namespace {
const ExtRat inf = ExtRat::infinity();
}

TEST_CASE("lambda length closed forms") {
  CHECK(lambda_from_horocycles({ExtRat(0), 1}, {inf, 1}) == doctest::Approx(1.0));
  CHECK(lambda_from_horocycles({ExtRat(0), 1}, {ExtRat(1), 1}) == doctest::Approx(1.0));
  const Rat e2(std::exp(2.0));
  CHECK(close(lambda_from_horocycles({ExtRat(0), 1}, {inf, e2}), std::exp(1.0), 1e-12));
  CHECK(lambda_sq_from_horocycles({ExtRat(1, 2), Rat(1, 4)}, {ExtRat(0), 1}) == Rat(1));
  CHECK_THROWS_AS(lambda_from_horocycles({ExtRat(0), 1}, {ExtRat(0), 2}), std::invalid_argument);
}

TEST_CASE("lambda lengths against the vertical-geodesic oracle") {
  std::mt19937_64 rng(23);
  int done = 0;
  while (done < 300) {
    const ExtRat a = test::random_vertex(rng, 12, 6);
    ExtRat b = test::random_vertex(rng, 12, 6);
    if (done % 5 == 0) b = inf;
    if (a == b) continue;
    const Horocycle h1{a, test::random_positive_rat(rng, 8)};
    const Horocycle h2{b, test::random_positive_rat(rng, 8)};
    const double got = lambda_from_horocycles(h1, h2);
    const double want = test::lambda_oracle(h1, h2);
    CHECK(close(got, want));
    ++done;
  }
}

TEST_CASE("lambda is invariant under a common isometry") {
  // transport both horocycles through a unimodular map numerically (three
  // sample points, circle refit) and compare
  std::mt19937_64 rng(29);
  std::uniform_int_distribution<int> coeff(-3, 3);
  int done = 0;
  while (done < 100) {
    const IntMat g = [&] {
      IntMat acc{1, 0, 0, 1};
      for (int i = 0; i < 3; ++i) {
        const IntMat t{1, Int(coeff(rng)), 0, 1};
        const IntMat s{0, -1, 1, 0};
        const IntMat& m = i % 2 ? s : t;
        acc = IntMat{acc.a * m.a + acc.b * m.c, acc.a * m.b + acc.b * m.d,
                     acc.c * m.a + acc.d * m.c, acc.c * m.b + acc.d * m.d};
      }
      return acc;
    }();
    const ExtRat a = test::random_vertex(rng, 6, 4);
    const ExtRat b = test::random_vertex(rng, 6, 4);
    if (a == b) continue;
    if (g.apply(a) == inf || g.apply(b) == inf) continue;  // transported size read off circles
    const Horocycle h1{a, test::random_positive_rat(rng, 4)};
    const Horocycle h2{b, test::random_positive_rat(rng, 4)};
    const test::MobiusD gd{g.a.convert_to<double>(), g.b.convert_to<double>(),
                           g.c.convert_to<double>(), g.d.convert_to<double>()};
    const auto transport = [&](const Horocycle& h) -> Horocycle {
      const ExtRat base2 = g.apply(h.base);
      const auto s = test::horocycle_samples(h);
      test::Cx c;
      double r;
      REQUIRE(test::circle_through({gd.apply(s[0]), gd.apply(s[1]), gd.apply(s[2])}, c, r));
      return Horocycle{base2, Rat(2 * r)};
    };
    const Horocycle t1 = transport(h1), t2 = transport(h2);
    CHECK(close(lambda_from_horocycles(h1, h2), lambda_from_horocycles(t1, t2)));
    ++done;
  }
}

TEST_CASE("arc length in a decorated triangle") {
  CHECK(arc_length_in_triangle(1.0, 1.0, 1.0) == doctest::Approx(1.0));
  CHECK(arc_length_in_triangle(Rat(2), Rat(2), Rat(2)) == Rat(1, 2));
  CHECK(arc_length_in_triangle(Rat(3), Rat(2), Rat(1)) == Rat(3, 2));
  CHECK_THROWS_AS(arc_length_in_triangle(0.0, 1.0, 1.0), std::invalid_argument);
}

TEST_CASE("arc formula agrees with direct horocyclic measurement") {
  std::mt19937_64 rng(31);
  int done = 0;
  while (done < 200) {
    ExtRat a = test::random_vertex(rng, 10, 5);
    ExtRat b = test::random_vertex(rng, 10, 5);
    ExtRat c = test::random_vertex(rng, 10, 5);
    if (done % 7 == 0) c = inf;
    if (a == b || b == c || a == c) continue;
    const Horocycle ha{a, test::random_positive_rat(rng, 6)};
    const Horocycle hb{b, test::random_positive_rat(rng, 6)};
    const Horocycle hc{c, test::random_positive_rat(rng, 6)};
    const double formula = arc_length_in_triangle(lambda_from_horocycles(hb, hc),
                                                  lambda_from_horocycles(ha, hb),
                                                  lambda_from_horocycles(ha, hc));
    const double direct = test::arc_oracle(ha, b, c);
    CHECK(close(formula, direct));
    // the exact arc depends only on the horocycle at the tip
    CHECK(close(horocyclic_arc(ha, b, c).convert_to<double>(), direct));
    ++done;
  }
}

TEST_CASE("ptolemy exchange") {
  CHECK(ptolemy(2.0, 2.0, 2.0, 2.0, 2.0) == doctest::Approx(4.0));
  CHECK(ptolemy(Rat(1), Rat(1), Rat(1), Rat(1), Rat(1)) == Rat(2));
  // exchanging twice restores the first diagonal
  const Rat bd = ptolemy(Rat(2), Rat(2), Rat(2), Rat(2), Rat(2));
  const Rat ac = ptolemy(Rat(2), Rat(2), Rat(2), Rat(2), bd);
  CHECK(ac == Rat(2));
  CHECK_THROWS_AS(ptolemy(Rat(0), Rat(1), Rat(1), Rat(1), Rat(1)), std::invalid_argument);
}

TEST_CASE("measured lambda lengths satisfy the ptolemy relation") {
  std::mt19937_64 rng(37);
  int done = 0;
  while (done < 200) {
    ExtRat v[4];
    for (auto& x : v) x = test::random_vertex(rng, 12, 5);
    if (done % 6 == 0) v[3] = inf;
    std::sort(v, v + 4);
    if (v[0] == v[1] || v[1] == v[2] || v[2] == v[3]) continue;
    Horocycle h[4];
    for (int i = 0; i < 4; ++i) h[i] = Horocycle{v[i], test::random_positive_rat(rng, 6)};
    const double lab = lambda_from_horocycles(h[0], h[1]);
    const double lbc = lambda_from_horocycles(h[1], h[2]);
    const double lcd = lambda_from_horocycles(h[2], h[3]);
    const double lda = lambda_from_horocycles(h[3], h[0]);
    const double lac = lambda_from_horocycles(h[0], h[2]);
    const double lbd = lambda_from_horocycles(h[1], h[3]);
    CHECK(close(lac * lbd, lab * lcd + lbc * lda));
    CHECK(close(ptolemy(lab, lbc, lcd, lda, lac), lbd));
    ++done;
  }
}

TEST_CASE("geodesic length inside a horoball") {
  CHECK(geodesic_length_in_horoball(make_edge(ExtRat(-1), ExtRat(1)), {inf, 2}) == 0.0);
  CHECK(geodesic_length_in_horoball(make_edge(ExtRat(-2), ExtRat(2)), {inf, 1}) ==
        doctest::Approx(2.0 * std::acosh(2.0)));
  CHECK_THROWS_AS(geodesic_length_in_horoball(make_edge(ExtRat(0), inf), {inf, 1}),
                  InfinitePenetration);
  CHECK_THROWS_AS(geodesic_length_in_horoball(make_edge(ExtRat(0), ExtRat(1)), {ExtRat(0), 1}),
                  InfinitePenetration);
}

TEST_CASE("horoball length against the integration oracle") {
  std::mt19937_64 rng(41);
  int done = 0;
  while (done < 60) {
    ExtRat a = test::random_vertex(rng, 8, 4);
    ExtRat b = test::random_vertex(rng, 8, 4);
    if (done % 4 == 0) b = inf;
    if (a == b) continue;
    ExtRat base = test::random_vertex(rng, 8, 4);
    if (done % 5 == 0) base = inf;
    if (base == a || base == b) continue;
    const Horocycle h{base, test::random_positive_rat(rng, 6)};
    const GeodesicEdge e = make_edge(a, b);
    const double got = geodesic_length_in_horoball(e, h);
    const double want = test::length_in_horoball_oracle(e, h);
    CHECK(std::abs(got - want) <= 1e-6);
    ++done;
  }
}

TEST_CASE("penetration depth") {
  CHECK(horoball_penetration_depth(make_edge(ExtRat(-2), ExtRat(2)), {inf, 1}) ==
        doctest::Approx(std::log(2.0)));
  CHECK(horoball_penetration_depth(make_edge(ExtRat(-1), ExtRat(1)), {inf, 2}) == 0.0);
}
