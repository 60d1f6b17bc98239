#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <random>
#include <vector>

#include "farey/decoration.hpp"
#include "farey/farey.hpp"
#include "farey/horocycle.hpp"
#include "farey/rational.hpp"
#include "farey/shear.hpp"
#include "farey/triangulation.hpp"

namespace farey::test {

// 1e-9 absolute below 10^3, relative above.
inline bool close(double a, double b, double tol = 1e-9) {
  const double scale = std::max(std::abs(a), std::abs(b));
  return std::abs(a - b) <= (scale > 1e3 ? tol * scale : tol);
}

inline ExtRat random_vertex(std::mt19937_64& rng, long max_num, long max_den) {
  std::uniform_int_distribution<long> num(-max_num, max_num);
  std::uniform_int_distribution<long> den(1, max_den);
  while (true) {
    const long p = num(rng), q = den(rng);
    if (p == 0 && q == 0) continue;
    return reduce(Int(p), Int(q));
  }
}

inline Rat random_positive_rat(std::mt19937_64& rng, long max = 6) {
  std::uniform_int_distribution<long> d(1, max);
  return Rat(d(rng), d(rng));
}

// positive rational in [1/M, M] for integer-ish M
inline Rat random_pinched_rat(std::mt19937_64& rng, const Rat& M) {
  const long scale = 1000;
  const double logM = std::log(M.convert_to<double>());
  std::uniform_real_distribution<double> u(-logM, logM);
  const double v = std::exp(u(rng));
  Rat r(static_cast<long long>(std::floor(v * scale)), scale);
  if (r < 1 / M) r = 1 / M;
  if (r > M) r = M;
  return r;
}

// sparse shear supported on interior window edges, rational multipliers
inline ShearFunction random_sparse_shear(std::mt19937_64& rng, const Window& w, int support) {
  const WindowTriangulation f = WindowTriangulation::farey(w);
  std::vector<GeodesicEdge> interior;
  for (const auto& e : f.edges()) {
    if (has_complete_quad(f, e)) interior.push_back(e);
  }
  std::uniform_int_distribution<size_t> pick(0, interior.size() - 1);
  std::map<GeodesicEdge, ShearValue> entries;
  for (int i = 0; i < support; ++i) {
    entries[interior[pick(rng)]] = ShearValue::from_mult(random_positive_rat(rng));
  }
  return ShearFunction::sparse(std::move(entries));
}

inline LambdaAssignment random_pinched_assignment(std::mt19937_64& rng, const Window& w,
                                                  const Rat& M) {
  LambdaAssignment lams;
  for (const auto& e : farey_edges_in_window(w)) lams.lam[e] = random_pinched_rat(rng, M);
  return lams;
}

inline Decoration random_decoration(std::mt19937_64& rng, const Window& w) {
  Decoration d;
  for (const ExtRat& v : window_vertices(w)) {
    d.at.emplace(v, Horocycle{v, random_positive_rat(rng, 8)});
  }
  return d;
}

// a random simultaneous flip of interior non-Farey-frozen edges
inline FlipSet random_flip_set(std::mt19937_64& rng, const WindowTriangulation& t, int tries) {
  FlipSet fs;
  std::set<std::array<ExtRat, 3>> used;
  std::vector<GeodesicEdge> flippable;
  for (const auto& e : t.edges()) {
    if (has_complete_quad(t, e)) flippable.push_back(e);
  }
  if (flippable.empty()) return fs;
  std::uniform_int_distribution<size_t> pick(0, flippable.size() - 1);
  for (int i = 0; i < tries; ++i) {
    const GeodesicEdge e = flippable[pick(rng)];
    const Quad q = quad_of_edge(t, e);
    std::array<ExtRat, 3> f1{q.a, q.b, q.c}, f2{q.a, q.c, q.d};
    std::sort(f1.begin(), f1.end());
    std::sort(f2.begin(), f2.end());
    if (used.count(f1) || used.count(f2)) continue;
    bool dup = false;
    for (const auto& chosen : fs.edges) dup |= (chosen == e);
    if (dup) continue;
    used.insert(f1);
    used.insert(f2);
    fs.edges.push_back(e);
  }
  return fs;
}

// ---------------------------------------------------------------------------
// numeric-geometry oracles (independent computation paths for the closed
// forms under test)

using Cx = std::complex<double>;

// Möbius map as a complex 2x2 matrix acting on the Riemann sphere.
struct MobiusD {
  Cx a{1}, b{0}, c{0}, d{1};
  Cx apply(const Cx& z) const { return (a * z + b) / (c * z + d); }
  Cx apply_inf() const { return a / c; }
};

// map sending p -> 0, q -> ∞ (both finite reals), preserving the half-plane
inline MobiusD to_zero_inf(double p, double q) {
  if (p > q) return MobiusD{1, -p, 1, -q};
  return MobiusD{-1, p, 1, -q};
}

// three points on a horocycle circle in the upper half-plane
inline std::array<Cx, 3> horocycle_samples(const Horocycle& h) {
  const double s = h.size.convert_to<double>();
  if (h.base.is_infinity()) return {Cx(-1, s), Cx(0, s), Cx(2, s)};
  const double x = h.base.to_double();
  const double r = s / 2.0;
  return {Cx(x, 0.0) + Cx(r * std::cos(0.3), r + r * std::sin(0.3)), Cx(x, s),
          Cx(x, 0.0) + Cx(r * std::cos(2.1), r + r * std::sin(2.1))};
}

inline bool circle_through(const std::array<Cx, 3>& p, Cx& center, double& radius) {
  const double ax = p[0].real(), ay = p[0].imag();
  const double bx = p[1].real(), by = p[1].imag();
  const double cx = p[2].real(), cy = p[2].imag();
  const double d = 2.0 * (ax * (by - cy) + bx * (cy - ay) + cx * (ay - by));
  if (std::abs(d) < 1e-13) return false;
  const double a2 = ax * ax + ay * ay, b2 = bx * bx + by * by, c2 = cx * cx + cy * cy;
  center = Cx((a2 * (by - cy) + b2 * (cy - ay) + c2 * (ay - by)) / d,
              (a2 * (cx - bx) + b2 * (ax - cx) + c2 * (bx - ax)) / d);
  radius = std::abs(p[0] - center);
  return true;
}

// Oracle for lambda lengths: transport the configuration so the geodesic is
// the vertical (0, ∞), read both horocycles off as circles/lines and take
// e^{δ/2} from the log-height difference.
inline double lambda_oracle(const Horocycle& h1, const Horocycle& h2) {
  const Horocycle& top = h1.base.is_infinity() ? h1 : h2;
  const Horocycle& bot = h1.base.is_infinity() ? h2 : h1;
  MobiusD m;
  if (h1.base.is_infinity() || h2.base.is_infinity()) {
    // translate the finite base to 0; ∞ stays put
    m = MobiusD{1, Cx(-bot.base.to_double()), 0, 1};
  } else {
    m = to_zero_inf(h1.base.to_double(), h2.base.to_double());
  }
  // image of the horocycle at the ∞ end: a horizontal line of height t
  const Horocycle& at_inf = (h1.base.is_infinity() || h2.base.is_infinity()) ? top : h2;
  const Horocycle& at_zero = (&at_inf == &h1) ? h2 : h1;
  const auto s_inf = horocycle_samples(at_inf);
  const double t = (m.apply(s_inf[0])).imag();
  // image of the other: a circle tangent at 0; its top point has height d
  const auto s0 = horocycle_samples(at_zero);
  Cx c;
  double r;
  if (!circle_through({m.apply(s0[0]), m.apply(s0[1]), m.apply(s0[2])}, c, r)) return -1;
  const double d = c.imag() + r;  // top of the tangent circle
  return std::exp(0.5 * (std::log(t) - std::log(d)));
}

// Oracle for the horocyclic arc at vertex a of the decorated ideal triangle
// (a, b, c): send a to ∞ and measure the horizontal run between the two
// vertical edges at the image height.
inline double arc_oracle(const Horocycle& ha, const ExtRat& b, const ExtRat& c) {
  MobiusD m;
  if (ha.base.is_infinity()) {
    m = MobiusD{1, 0, 0, 1};
  } else {
    m = MobiusD{0, 1, -1, Cx(ha.base.to_double())};  // z -> 1/(b0 - z), sends base to ∞
  }
  const auto to_real = [&](const ExtRat& v) {
    if (v.is_infinity()) return m.apply_inf().real();
    return m.apply(Cx(v.to_double(), 0.0)).real();
  };
  const auto s = horocycle_samples(ha);
  const double t = m.apply(s[0]).imag();
  return std::abs(to_real(b) - to_real(c)) / t;
}

// Oracle for geodesic length inside a horoball: numeric integration of the
// hyperbolic speed along the geodesic, membership tested against the
// Euclidean disk picture.
inline double length_in_horoball_oracle(const GeodesicEdge& e, const Horocycle& h) {
  const auto inside = [&](const Cx& z) {
    if (h.base.is_infinity()) return z.imag() > h.size.convert_to<double>();
    const double s = h.size.convert_to<double>();
    return std::abs(z - Cx(h.base.to_double(), s / 2.0)) < s / 2.0;
  };
  // parametrize the geodesic with unit-speed-free parameter u and integrate
  // |z'(u)| / Im z(u) over the inside set
  std::function<Cx(double)> z;
  std::function<Cx(double)> dz;
  double u0, u1;
  if (e.hi.is_infinity()) {
    const double x = e.lo.to_double();
    z = [x](double u) { return Cx(x, std::exp(u)); };
    dz = [](double u) { return Cx(0.0, std::exp(u)); };
    u0 = -30.0;
    u1 = 30.0;
  } else {
    const double a = e.lo.to_double(), b = e.hi.to_double();
    const double cx = (a + b) / 2.0, r = std::abs(b - a) / 2.0;
    z = [cx, r](double u) { return Cx(cx + r * std::cos(u), r * std::sin(u)); };
    dz = [r](double u) { return Cx(-r * std::sin(u), r * std::cos(u)); };
    u0 = 1e-8;
    u1 = M_PI - 1e-8;
  }
  // locate the inside window by fine scan + bisection
  const int scan = 20000;
  double enter = NAN, exit = NAN;
  bool prev = inside(z(u0));
  if (prev) enter = u0;
  for (int i = 1; i <= scan; ++i) {
    const double u = u0 + (u1 - u0) * i / scan;
    const bool cur = inside(z(u));
    if (cur != prev) {
      double lo = u0 + (u1 - u0) * (i - 1) / scan, hi = u;
      for (int b2 = 0; b2 < 80; ++b2) {
        const double mid = (lo + hi) / 2;
        if (inside(z(mid)) == prev) {
          lo = mid;
        } else {
          hi = mid;
        }
      }
      if (std::isnan(enter)) {
        enter = hi;
      } else if (std::isnan(exit)) {
        exit = lo;
      }
      prev = cur;
    }
  }
  if (std::isnan(enter)) return 0.0;
  if (std::isnan(exit)) exit = u1;
  // Simpson over [enter, exit]
  const int n = 40000;
  double sum = 0.0;
  for (int i = 0; i <= n; ++i) {
    const double u = enter + (exit - enter) * i / n;
    const double f = std::abs(dz(u)) / z(u).imag();
    sum += f * ((i == 0 || i == n) ? 1 : (i % 2 ? 4 : 2));
  }
  return sum * (exit - enter) / (3.0 * n);
}

}  // namespace farey::test
