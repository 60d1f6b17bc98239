#pragma once

#include <functional>
#include <map>
#include <stdexcept>

#include "farey/farey.hpp"
#include "farey/mobius.hpp"
#include "farey/shear.hpp"

namespace farey {

// The image triangulation fails to be embeddable: some placement collides
// with or passes an already placed vertex. Cannot happen with exact positive
// multipliers; reachable in float mode.
struct DegenerateDevelopment : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An ideal triangle of the Farey triangulation, vertices ascending.
struct FareyTriangle {
  ExtRat a, b, c;
};
FareyTriangle make_farey_triangle(const ExtRat& a, const ExtRat& b, const ExtRat& c);
FareyTriangle default_normalization();  // (0, 1, ∞)

// Realizes a shear function as a boundary map, one forced placement per
// crossed edge: crossing E from the placed triangle puts the new vertex at
// M^{-1}(e^{s(E)}) where M takes the placed triangle to (0, ∞, -1).
// The normalization triangle is fixed pointwise. Placements are memoized;
// walks toward a target are directed, and runs of multiplier-one fan edges
// at ∞ are crossed in closed form, so far-out vertices stay cheap.
class Developer {
 public:
  Developer(ShearFunction s, FareyTriangle normalization = default_normalization());

  ExtRat place(const ExtRat& v);  // exact mode; requires rational multipliers
  const FareyTriangle& normalization() const { return norm_; }
  const ShearFunction& shear() const { return s_; }

 private:
  ExtRat place_integer(const Int& n);
  void extend_right(const Int& target);
  void extend_left(const Int& target);
  ExtRat walk_down(const ExtRat& v, ExtRat x, ExtRat y, ExtRat z, ExtRat xi, ExtRat yi, ExtRat zi);
  ExtRat cross_edge(const ExtRat& x, const ExtRat& y, const ExtRat& m, const ExtRat& xi,
                    const ExtRat& yi, const ExtRat& zi);

  ShearFunction s_;
  FareyTriangle norm_;
  bool inf_fixed_ = false;
  std::map<ExtRat, ExtRat> memo_;
  // affine segments of the integer fan when ∞ is fixed:
  // key n0 -> (h(n0), forward difference); coverage [int_lo_, int_hi_]
  std::map<Int, std::pair<Rat, Rat>> seg_;
  Int int_lo_ = 0, int_hi_ = 0;
};

struct VertexMap {
  FareyTriangle normalization;
  std::map<ExtRat, ExtRat> pairs;

  bool contains(const ExtRat& v) const { return pairs.count(v) != 0; }
  const ExtRat& image(const ExtRat& v) const;
};

// Strict circular-order check over the whole domain; throws
// DegenerateDevelopment when violated.
void validate_vertex_map(const VertexMap& m);

VertexMap develop(const ShearFunction& s, const Window& w,
                  const FareyTriangle& norm = default_normalization());

// Float fallback for irrational shears. Same walk, binary64 arithmetic,
// per-placement monotonicity checks.
struct VertexMapF {
  FareyTriangle normalization;
  std::map<ExtRat, double> pairs;
  double image(const ExtRat& v) const;  // HUGE_VAL encodes ∞
};

VertexMapF develop_float(const ShearFunction& s, const Window& w,
                         const FareyTriangle& norm = default_normalization());

// Shear read back from a realized map: the quad of E in the domain is pushed
// through h and its cross-ratio multiplier taken.
Rat mult_from_vertex_map(const VertexMap& h, const GeodesicEdge& e);
double shear_from_vertex_map(const VertexMap& h, const GeodesicEdge& e);
double shear_from_vertex_map(const VertexMapF& h, const GeodesicEdge& e);

// Streaming development of every window vertex, parent regions pruned by
// denominator and numerator bounds; O(depth) memory. Requires a
// normalization containing ∞ and exact multipliers.
void scan_window_development(const ShearFunction& s, const Window& w, const FareyTriangle& norm,
                             const std::function<void(const ExtRat&, const ExtRat&)>& sink);

// Restriction of a Mobius map to the window vertices (monotone on R̂).
VertexMap vertex_map_from_mobius(const Mobius& m, const Window& w);

}  // namespace farey
