#pragma once

#include <array>

#include "farey/farey.hpp"
#include "farey/rational.hpp"

namespace farey {

// Fractional linear map z -> (a z + b)/(c z + d) with rational entries,
// acting projectively on Q ∪ {∞}. Entries are only defined up to a common
// nonzero factor; equality is projective.
struct Mobius {
  Rat a, b, c, d;

  static Mobius identity();
  Rat determinant() const;
  ExtRat apply(const ExtRat& v) const;
  Mobius inverse() const;  // adjugate; same projective map class
  Mobius compose(const Mobius& rhs) const;  // this ∘ rhs
};

bool projectively_equal(const Mobius& m1, const Mobius& m2);

// The unique map sending src componentwise to dst. Entries of each triple
// must be pairwise distinct.
Mobius mobius_from_triples(const std::array<ExtRat, 3>& src, const std::array<ExtRat, 3>& dst);

// Cross-ratio multiplier of an ideal quadrilateral with diagonal (x,y) and
// opposite vertices z, w: the image of w under the map taking (x,y,z) to
// (0,∞,-1). Positive exactly when z and w sit on opposite sides of (x,y).
Rat quad_multiplier(const ExtRat& x, const ExtRat& y, const ExtRat& z, const ExtRat& w);

// log of quad_multiplier; throws std::domain_error when the multiplier is
// not positive ("not a quadrilateral with diagonal (x,y)").
double shear_of_quad(const ExtRat& x, const ExtRat& y, const ExtRat& z, const ExtRat& w);

// Inverse problem: the point w with quad_multiplier(x,y,z,w) = m, m > 0.
ExtRat place_across(const ExtRat& x, const ExtRat& y, const ExtRat& z, const Rat& m);

}  // namespace farey
