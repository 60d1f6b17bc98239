#pragma once

#include <map>
#include <vector>

#include "farey/develop.hpp"
#include "farey/farey.hpp"
#include "farey/horocycle.hpp"
#include "farey/shear.hpp"

namespace farey {

class WindowTriangulation;

// A horocycle at every vertex of (a window of) a triangulation.
struct Decoration {
  std::map<ExtRat, Horocycle> at;

  const Horocycle& horocycle(const ExtRat& v) const;
  bool covers(const ExtRat& v) const { return at.count(v) != 0; }
};

// Positive lambda length per edge, exact rationals. Values measured from
// horocycles are stored as the exact binary rational of the computed double.
struct LambdaAssignment {
  std::map<GeodesicEdge, Rat> lam;

  const Rat& at(const GeodesicEdge& e) const;
};

// The maximal-density decoration: diameter 1/q² at p/q, height 1 at ∞.
// Every Farey lambda length and every horocyclic arc comes out 1.
Horocycle canonical_horocycle(const ExtRat& v);
Decoration canonical_decoration(const Window& w);

// Per-edge lambda lengths of a decorated triangulation. Values are the exact
// binary rationals of the measured doubles (integral when λ² is a square).
LambdaAssignment lambda_lengths(const WindowTriangulation& t, const Decoration& dec);

struct PinchReport {
  bool pass = false;
  Rat min_lambda, max_lambda;
  GeodesicEdge min_edge, max_edge;
};

// Interval check 1/M <= λ(E) <= M, exact.
PinchReport is_pinched(const LambdaAssignment& lams, const Rat& M);

// Construction realizing bounded fan shear sums as a bounded decoration: at
// each image vertex, the horocycle whose arc across the index-0 fan sector
// has length exactly 1. Remaining arcs are then the multiplier partial
// products of the fan shears.
struct DevelopedDecoration {
  VertexMap map;       // window vertices -> image vertices
  Decoration dec;      // keyed by image vertex
};

DevelopedDecoration developed_decoration(const ShearFunction& s, const Window& w,
                                         const FareyTriangle& norm = default_normalization());
Decoration decoration_from_shears(const ShearFunction& s, const Window& w,
                                  const FareyTriangle& norm = default_normalization());

// Exact arc of the decoration at image vertex map(tip) across fan sector j
// (between fan edges j and j+1 at the tip), measured geometrically from the
// horocycle size and the developed sector vertices.
Rat developed_sector_arc(const DevelopedDecoration& dd, Developer& dev, const ExtRat& tip,
                         const Int& j);

struct CertChainReport {
  bool pass = false;
  Rat arc_min = 1, arc_max = 1;
  Rat ratio_min = 1, ratio_max = 1;
  Rat arc_bound = 1;    // arcs checked against [1/arc_bound, arc_bound]
  Rat ratio_bound = 1;  // ratios checked against [1/ratio_bound, ratio_bound]
  long arcs_checked = 0, ratios_checked = 0;
};

// Pinched lambda lengths force bounded arcs and fan ratios: arcs within
// [1/M³, M³] and windowed fan ratios within [1/M⁶, M⁶], all exact. The
// assignment must cover the Farey edges of the window.
CertChainReport pinched_forces_qs(const Window& w, const LambdaAssignment& lams, const Rat& M);

// Every horocycle moved distance d toward its base point: finite diameters
// scale by e^{-d}, the height at ∞ scales by e^{d}. The factor is applied in
// binary64 and stored exactly.
Decoration retract_decoration(const Decoration& dec, double d);

}  // namespace farey
