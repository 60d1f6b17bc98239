#pragma once

#include <stdexcept>

#include "farey/farey.hpp"
#include "farey/rational.hpp"

namespace farey {

// Horocycle in the upper half-plane: Euclidean diameter at a finite base
// point, Euclidean height for base ∞. size > 0 always.
struct Horocycle {
  ExtRat base;
  Rat size = 1;
};

Horocycle make_horocycle(const ExtRat& base, const Rat& size);

// Signals a geodesic running into the horoball it is tangent to.
struct InfinitePenetration : std::domain_error {
  using std::domain_error::domain_error;
};

// λ = e^{δ/2} with δ the signed distance between the horocycle feet along
// the geodesic joining the two base points. Closed forms:
//   both finite:  |x - y| / sqrt(d1 d2)
//   one at ∞:     sqrt(t / d)
double lambda_from_horocycles(const Horocycle& h1, const Horocycle& h2);
Rat lambda_sq_from_horocycles(const Horocycle& h1, const Horocycle& h2);  // exact λ²

// Horocyclic arc at vertex a of an ideal triangle (a,b,c), from the three
// lambda lengths: λ_bc / (λ_ab λ_ac).
double arc_length_in_triangle(double lam_opp, double lam_left, double lam_right);
Rat arc_length_in_triangle(const Rat& lam_opp, const Rat& lam_left, const Rat& lam_right);

// Ptolemy exchange on a cyclic quadrilateral (a,b,c,d):
// λ_bd = (λ_ab λ_cd + λ_bc λ_da) / λ_ac.
double ptolemy(double lam_ab, double lam_bc, double lam_cd, double lam_da, double lam_ac);
Rat ptolemy(const Rat& lam_ab, const Rat& lam_bc, const Rat& lam_cd, const Rat& lam_da,
            const Rat& lam_ac);

// Exact length of the arc of h cut off by the triangle (h.base, u, w).
// Depends only on the horocycle at the tip, not on decorations at u, w.
Rat horocyclic_arc(const Horocycle& h, const ExtRat& u, const ExtRat& w);

// Hyperbolic length of e ∩ (open horoball of h). Throws InfinitePenetration
// when h.base is an endpoint of e.
double geodesic_length_in_horoball(const GeodesicEdge& e, const Horocycle& h);

// Maximal distance e reaches past the horocycle into the horoball
// (0 when disjoint or tangent).
double horoball_penetration_depth(const GeodesicEdge& e, const Horocycle& h);

}  // namespace farey
