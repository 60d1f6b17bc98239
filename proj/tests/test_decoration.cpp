#include <doctest.h>

#include <cmath>
#include <random>

#include "farey/decoration.hpp"
#include "farey/triangulation.hpp"
#include "test_support.hpp"

using namespace farey;
using farey::test::close;

namespace {
const ExtRat inf = ExtRat::infinity();

Int pow_i(int b, int e) {
  Int r = 1;
  while (e-- > 0) r *= b;
  return r;
}
}  // namespace

TEST_CASE("the canonical decoration is the tangent one") {
  CHECK(canonical_horocycle(ExtRat(0)).size == Rat(1));
  CHECK(canonical_horocycle(ExtRat(1, 2)).size == Rat(1, 4));
  CHECK(canonical_horocycle(inf).size == Rat(1));
  const Window w{6, 6, true};
  const Decoration dec = canonical_decoration(w);
  for (const auto& e : farey_edges_in_window(w)) {
    CHECK(lambda_sq_from_horocycles(dec.horocycle(e.lo), dec.horocycle(e.hi)) == Rat(1));
  }
}

TEST_CASE("lambda lengths of decorated windowed triangulations") {
  const Window w{5, 4, true};
  const WindowTriangulation fw = WindowTriangulation::farey(w);
  SUBCASE("canonical decoration gives unit lengths") {
    const LambdaAssignment lams = lambda_lengths(fw, canonical_decoration(w));
    for (const auto& [e, l] : lams.lam) CHECK(l == Rat(1));
  }
  SUBCASE("rescaling the horocycle at infinity scales its fan only") {
    Decoration dec = canonical_decoration(w);
    dec.at.at(inf).size = Rat(4);
    const LambdaAssignment lams = lambda_lengths(fw, dec);
    for (const auto& [e, l] : lams.lam) {
      CHECK(l == (e.hi.is_infinity() ? Rat(2) : Rat(1)));
    }
  }
  SUBCASE("missing horocycle is an error") {
    Decoration dec = canonical_decoration(w);
    dec.at.erase(ExtRat(0));
    CHECK_THROWS_AS(lambda_lengths(fw, dec), std::out_of_range);
  }
  SUBCASE("the ptolemy relation holds on every interior quad") {
    std::mt19937_64 rng(67);
    for (int round = 0; round < 10; ++round) {
      const Decoration dec = test::random_decoration(rng, w);
      const LambdaAssignment lams = lambda_lengths(fw, dec);
      for (const auto& e : fw.edges()) {
        if (!has_complete_quad(fw, e)) continue;
        const Quad q = quad_of_edge(fw, e);
        const double ac = lams.at(make_edge(q.a, q.c)).convert_to<double>();
        const double bd = lambda_from_horocycles(dec.horocycle(q.b), dec.horocycle(q.d));
        const double ab = lams.at(make_edge(q.a, q.b)).convert_to<double>();
        const double bc = lams.at(make_edge(q.b, q.c)).convert_to<double>();
        const double cd = lams.at(make_edge(q.c, q.d)).convert_to<double>();
        const double da = lams.at(make_edge(q.d, q.a)).convert_to<double>();
        CHECK(close(ac * bd, ab * cd + bc * da));
      }
    }
  }
}

TEST_CASE("pinching reports") {
  LambdaAssignment ones;
  for (const auto& e : farey_edges_in_window(Window{3, 2, true})) ones.lam[e] = Rat(1);
  CHECK(is_pinched(ones, Rat(2)).pass);
  LambdaAssignment with3 = ones;
  with3.lam[make_edge(ExtRat(0), ExtRat(1))] = Rat(3);
  const PinchReport rep = is_pinched(with3, Rat(2));
  CHECK_FALSE(rep.pass);
  CHECK(rep.max_lambda == Rat(3));
  CHECK(rep.max_edge == make_edge(ExtRat(0), ExtRat(1)));
  CHECK_THROWS_AS(is_pinched(ones, Rat(1)), std::invalid_argument);
}

TEST_CASE("the zero shear decorates canonically") {
  const Window w{8, 6, true};
  const DevelopedDecoration dd = developed_decoration(ShearFunction::zero(), w);
  const Decoration canon = canonical_decoration(w);
  for (const auto& [v, h] : dd.dec.at) {
    CHECK(h.size == canon.horocycle(v).size);
  }
}

TEST_CASE("developed sector arcs are the multiplier partial products") {
  const ShearFunction ex = ShearFunction::example();
  const Window w{Int(pow_i(16, 2)), 1, true};
  const DevelopedDecoration dd = developed_decoration(ex, w);
  Developer dev(ex);
  SUBCASE("at the fan of infinity") {
    const auto mults = fan_arc_mults(ex, inf, 1, -40, 40);  // alpha_0 = 1 centering
    for (long j = -40; j <= 40; ++j) {
      CHECK(developed_sector_arc(dd, dev, inf, Int(j)) == mults[j + 40]);
    }
  }
  SUBCASE("at a finite tip crossing the supported edge") {
    for (const ExtRat& tip : {ExtRat(16), ExtRat(1), ExtRat(3)}) {
      const auto mults = fan_arc_mults(ex, tip, 1, -6, 6);
      for (long j = -6; j <= 6; ++j) {
        CHECK(developed_sector_arc(dd, dev, tip, Int(j)) == mults[j + 6]);
      }
    }
  }
  SUBCASE("arc extremes grow with the window") {
    const auto extremes = [&](int pow) {
      const DevelopedDecoration d2 = developed_decoration(ex, Window{Int(pow_i(16, pow)), 1, true});
      Developer de(ex);
      Rat lo(1), hi(1);
      const Int reach = pow_i(16, pow) - 1;
      for (Int j = -reach; j <= reach; j += max(Int(1), reach / 64)) {
        const Rat a = developed_sector_arc(d2, de, inf, j);
        lo = min(lo, a);
        hi = max(hi, a);
      }
      // hit the support straddles exactly
      for (int i = 0; i < pow; ++i) {
        const Rat a = developed_sector_arc(d2, de, inf, pow_i(16, i));
        const Rat b = developed_sector_arc(d2, de, inf, -pow_i(16, i) - 1);
        lo = min(min(lo, a), b);
        hi = max(max(hi, a), b);
      }
      return std::pair<Rat, Rat>(lo, hi);
    };
    // this shear only shrinks away from the anchor (odd symmetry, negative
    // partial sums off sector 0), so the spread shows up in the arc ratio
    const auto [lo1, hi1] = extremes(1);
    const auto [lo2, hi2] = extremes(2);
    CHECK(hi1 == Rat(1));
    CHECK(hi2 == Rat(1));
    CHECK(lo1 == Rat(1, 2));
    CHECK(lo2 == Rat(1, 4));
    CHECK(hi2 / lo2 > hi1 / lo1);  // unbounded spread as the window grows
  }
}

TEST_CASE("bounded partial sums produce bounded decorations") {
  std::mt19937_64 rng(71);
  const Window w{10, 5, true};
  for (int round = 0; round < 15; ++round) {
    const ShearFunction s = test::random_sparse_shear(rng, Window{6, 3, true}, 3);
    FanScanParams p;
    p.tips = window_vertices(w);
    p.k_lo = -12;
    p.k_hi = 12;
    p.n_max = 1;
    const auto ps = check_ps_certificate(s, p);
    REQUIRE(ps.sup_mult.has_value());
    const Rat S = *ps.sup_mult;
    const DevelopedDecoration dd = developed_decoration(s, w);
    Developer dev(s);
    for (const ExtRat& tip : p.tips) {
      for (Int j = -11; j <= 10; ++j) {
        const Rat arc = developed_sector_arc(dd, dev, tip, j);
        CHECK(arc >= 1 / S);
        CHECK(arc <= S);
      }
    }
  }
}

TEST_CASE("pinched lambda lengths force bounded arcs and ratios") {
  const Window w{6, 4, true};
  SUBCASE("all twos") {
    LambdaAssignment twos;
    for (const auto& e : farey_edges_in_window(w)) twos.lam[e] = Rat(2);
    const CertChainReport rep = pinched_forces_qs(w, twos, Rat(2));
    CHECK(rep.pass);
    CHECK(rep.arc_min == Rat(1, 2));
    CHECK(rep.arc_max == Rat(1, 2));
    CHECK(rep.ratio_min == Rat(1));
    CHECK(rep.ratio_max == Rat(1));
  }
  SUBCASE("random pinched assignments stay within the sixth-power window") {
    std::mt19937_64 rng(73);
    for (const long m : {2L, 5L}) {
      for (int round = 0; round < 10; ++round) {
        const LambdaAssignment lams = test::random_pinched_assignment(rng, w, Rat(m));
        REQUIRE(is_pinched(lams, Rat(m)).pass);
        const CertChainReport rep = pinched_forces_qs(w, lams, Rat(m));
        CHECK(rep.pass);
        CHECK(rep.arcs_checked > 0);
        CHECK(rep.ratios_checked > 0);
      }
    }
  }
}

TEST_CASE("retraction") {
  const Window w{4, 3, true};
  const Decoration canon = canonical_decoration(w);
  SUBCASE("zero distance is the identity") {
    const Decoration same = retract_decoration(canon, 0.0);
    for (const auto& [v, h] : same.at) CHECK(h.size == canon.horocycle(v).size);
  }
  SUBCASE("unit distance scales by e") {
    const Decoration r = retract_decoration(canon, 1.0);
    CHECK(close(r.horocycle(ExtRat(0)).size.convert_to<double>(), std::exp(-1.0), 1e-15));
    CHECK(close(r.horocycle(inf).size.convert_to<double>(), std::exp(1.0), 1e-15));
  }
  SUBCASE("retracting past the depth clears every edge") {
    Decoration dec = canonical_decoration(w);
    dec.at.at(ExtRat(0)).size = Rat(3);  // a fat horoball the edge (-1,1) dives into
    const GeodesicEdge e = make_edge(ExtRat(-1), ExtRat(1));
    const double depth = arc_depth(e, dec);
    CHECK(close(depth, std::log(3.0), 1e-12));
    const Decoration r = retract_decoration(dec, depth + 1.0);
    for (const auto& [v, h] : r.at) {
      if (v == e.lo || v == e.hi) continue;
      CHECK(geodesic_length_in_horoball(e, h) == 0.0);
    }
  }
}
