#include "farey/mobius.hpp"

#include <cmath>
#include <stdexcept>

namespace farey {

Mobius Mobius::identity() { return Mobius{1, 0, 0, 1}; }

Rat Mobius::determinant() const { return a * d - b * c; }

ExtRat Mobius::apply(const ExtRat& v) const {
  const Rat n = a * Rat(v.num) + b * Rat(v.den);
  const Rat d2 = c * Rat(v.num) + d * Rat(v.den);
  if (n == 0 && d2 == 0) throw std::domain_error("degenerate Mobius map");
  return reduce(numerator(n) * denominator(d2), denominator(n) * numerator(d2));
}

Mobius Mobius::inverse() const { return Mobius{d, -b, -c, a}; }

Mobius Mobius::compose(const Mobius& r) const {
  return Mobius{a * r.a + b * r.c, a * r.b + b * r.d, c * r.a + d * r.c, c * r.b + d * r.d};
}

bool projectively_equal(const Mobius& m1, const Mobius& m2) {
  const Rat e1[4] = {m1.a, m1.b, m1.c, m1.d};
  const Rat e2[4] = {m2.a, m2.b, m2.c, m2.d};
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      if (e1[i] * e2[j] != e1[j] * e2[i]) return false;
    }
  }
  return true;
}

namespace {

// Matrix taking (p, q, r) to (0, ∞, 1): rows scaled copies of the linear
// forms vanishing at p and q.
Mobius to_zero_inf_one(const std::array<ExtRat, 3>& t) {
  const ExtRat &p = t[0], &q = t[1], &r = t[2];
  if (p == q || p == r || q == r) {
    throw std::invalid_argument("mobius_from_triples: repeated points");
  }
  const Int k1 = det(q, r);  // l_q(r)
  const Int k2 = det(p, r);  // l_p(r)
  return Mobius{Rat(p.den * k1), Rat(-p.num * k1), Rat(q.den * k2), Rat(-q.num * k2)};
}

}  // namespace

Mobius mobius_from_triples(const std::array<ExtRat, 3>& src, const std::array<ExtRat, 3>& dst) {
  const Mobius ms = to_zero_inf_one(src);
  const Mobius md = to_zero_inf_one(dst);
  return md.inverse().compose(ms);
}

Rat quad_multiplier(const ExtRat& x, const ExtRat& y, const ExtRat& z, const ExtRat& w) {
  if (x == y || x == z || x == w || y == z || y == w || z == w) {
    throw std::invalid_argument("quad_multiplier: repeated points");
  }
  // M(t) = -(l_x(t) l_y(z)) / (l_y(t) l_x(z)) sends (x,y,z) to (0,∞,-1).
  const Int lxw = det(x, w), lyw = det(y, w);
  const Int lxz = det(x, z), lyz = det(y, z);
  return make_rat(Int(-lxw * lyz), Int(lyw * lxz));
}

double shear_of_quad(const ExtRat& x, const ExtRat& y, const ExtRat& z, const ExtRat& w) {
  const Rat m = quad_multiplier(x, y, z, w);
  if (m <= 0) {
    throw std::domain_error("not a quadrilateral with diagonal (" + x.str() + "," + y.str() + ")");
  }
  return std::log(m.convert_to<double>());
}

ExtRat place_across(const ExtRat& x, const ExtRat& y, const ExtRat& z, const Rat& m) {
  if (m <= 0) throw std::invalid_argument("place_across: multiplier must be positive");
  const Int a = numerator(m), b = denominator(m);
  const Int lxz = det(x, z), lyz = det(y, z);
  // Solve M(w) = a/b for the map above.
  const Int wn = b * x.num * lyz + a * y.num * lxz;
  const Int wd = b * x.den * lyz + a * y.den * lxz;
  return reduce(wn, wd);
}

}  // namespace farey
