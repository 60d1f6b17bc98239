#include "farey/horocycle.hpp"

#include <cmath>

namespace farey {

Horocycle make_horocycle(const ExtRat& base, const Rat& size) {
  if (size <= 0) throw std::invalid_argument("horocycle size must be positive");
  return Horocycle{base, size};
}

Rat lambda_sq_from_horocycles(const Horocycle& h1, const Horocycle& h2) {
  if (h1.base == h2.base) throw std::invalid_argument("lambda length needs distinct base points");
  if (h1.size <= 0 || h2.size <= 0) throw std::invalid_argument("horocycle size must be positive");
  if (h1.base.is_infinity() || h2.base.is_infinity()) {
    const Horocycle& top = h1.base.is_infinity() ? h1 : h2;
    const Horocycle& bot = h1.base.is_infinity() ? h2 : h1;
    return top.size / bot.size;
  }
  const Rat dx = h1.base.value() - h2.base.value();
  return dx * dx / (h1.size * h2.size);
}

double lambda_from_horocycles(const Horocycle& h1, const Horocycle& h2) {
  return std::sqrt(lambda_sq_from_horocycles(h1, h2).convert_to<double>());
}

double arc_length_in_triangle(double lam_opp, double lam_left, double lam_right) {
  if (!(lam_opp > 0 && lam_left > 0 && lam_right > 0)) {
    throw std::invalid_argument("lambda lengths must be positive");
  }
  return lam_opp / (lam_left * lam_right);
}

Rat arc_length_in_triangle(const Rat& lam_opp, const Rat& lam_left, const Rat& lam_right) {
  if (!(lam_opp > 0 && lam_left > 0 && lam_right > 0)) {
    throw std::invalid_argument("lambda lengths must be positive");
  }
  return lam_opp / (lam_left * lam_right);
}

double ptolemy(double lam_ab, double lam_bc, double lam_cd, double lam_da, double lam_ac) {
  if (!(lam_ab > 0 && lam_bc > 0 && lam_cd > 0 && lam_da > 0 && lam_ac > 0)) {
    throw std::invalid_argument("lambda lengths must be positive");
  }
  return (lam_ab * lam_cd + lam_bc * lam_da) / lam_ac;
}

Rat ptolemy(const Rat& lam_ab, const Rat& lam_bc, const Rat& lam_cd, const Rat& lam_da,
            const Rat& lam_ac) {
  if (!(lam_ab > 0 && lam_bc > 0 && lam_cd > 0 && lam_da > 0 && lam_ac > 0)) {
    throw std::invalid_argument("lambda lengths must be positive");
  }
  return (lam_ab * lam_cd + lam_bc * lam_da) / lam_ac;
}

Rat horocyclic_arc(const Horocycle& h, const ExtRat& u, const ExtRat& w) {
  if (u == h.base || w == h.base || u == w) {
    throw std::invalid_argument("horocyclic_arc: degenerate triangle");
  }
  const ExtRat& b = h.base;
  const Int luw = det(u, w);
  if (b.is_infinity()) {
    // arc along y = t between the verticals at u and w
    return make_rat(abs(luw), Int(u.den * w.den)) / h.size;
  }
  // Send b to ∞ with z -> -1/(z - b); the arc length comes out as
  // d * bd^2 * |uw| / (|ub| |wb|) in the pairing det(·,·).
  const Int lub = det(u, b);
  const Int lwb = det(w, b);
  return h.size * make_rat(Int(b.den * b.den * abs(luw)), Int(abs(lub) * abs(lwb)));
}

namespace {

struct HalfPlanePoint {
  double x;
  bool at_infinity;
};

HalfPlanePoint to_point(const ExtRat& v) {
  if (v.is_infinity()) return {0.0, true};
  return {v.to_double(), false};
}

// Reduce to a horoball based at ∞: returns the pair (r, t) with r the
// Euclidean radius of the image geodesic and t the image height, or r < 0
// for a vertical image geodesic (penetration from a non-tangent endpoint is
// impossible then; handled by the caller's tangency check).
void reduce_to_infinity(const GeodesicEdge& e, const Horocycle& h, double& r, double& t) {
  HalfPlanePoint p = to_point(e.lo), q = to_point(e.hi);
  if (h.base.is_infinity()) {
    t = h.size.convert_to<double>();
    if (p.at_infinity || q.at_infinity) {
      r = -1.0;
      return;
    }
    r = std::abs(p.x - q.x) / 2.0;
    return;
  }
  // z -> -1/(z - b) sends the horoball (b, d) to height 1/d at ∞.
  const double b = h.base.to_double();
  t = 1.0 / h.size.convert_to<double>();
  const double px = p.at_infinity ? 0.0 : -1.0 / (p.x - b);
  const double qx = q.at_infinity ? 0.0 : -1.0 / (q.x - b);
  r = std::abs(px - qx) / 2.0;
}

}  // namespace

double geodesic_length_in_horoball(const GeodesicEdge& e, const Horocycle& h) {
  if (e.lo == h.base || e.hi == h.base) {
    throw InfinitePenetration("geodesic ends at the horoball tangency point " + h.base.str());
  }
  double r, t;
  reduce_to_infinity(e, h, r, t);
  if (r < 0) return 0.0;  // vertical image, base at ∞ not an endpoint
  if (r <= t) return 0.0;
  return 2.0 * std::acosh(r / t);
}

double horoball_penetration_depth(const GeodesicEdge& e, const Horocycle& h) {
  if (e.lo == h.base || e.hi == h.base) {
    throw InfinitePenetration("geodesic ends at the horoball tangency point " + h.base.str());
  }
  double r, t;
  reduce_to_infinity(e, h, r, t);
  if (r < 0) return 0.0;
  if (r <= t) return 0.0;
  return std::log(r / t);
}

}  // namespace farey
