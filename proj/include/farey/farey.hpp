#pragma once

#include <optional>
#include <vector>

#include "farey/rational.hpp"

namespace farey {

// Unordered pair of distinct boundary points, stored with lo < hi in the
// canonical total order.
struct GeodesicEdge {
  ExtRat lo;
  ExtRat hi;
};

GeodesicEdge make_edge(const ExtRat& u, const ExtRat& v);  // throws if u == v

bool operator==(const GeodesicEdge& a, const GeodesicEdge& b);
bool operator!=(const GeodesicEdge& a, const GeodesicEdge& b);
bool operator<(const GeodesicEdge& a, const GeodesicEdge& b);

std::string edge_str(const GeodesicEdge& e);  // "p/q-r/s"
GeodesicEdge parse_edge(const std::string& s);

// Finite truncation device: vertex set {p/q : |p| <= max_num, 1 <= q <= max_den}
// plus optionally ∞.
struct Window {
  Int max_num = 1;
  Int max_den = 1;
  bool include_infinity = true;
};

bool window_contains(const Window& w, const ExtRat& v);
std::vector<ExtRat> window_vertices(const Window& w);  // ascending, ∞ last

// |ad - bc| = 1 test. Throws for u == v.
bool is_farey_neighbor(const ExtRat& u, const ExtRat& v);
bool edge_in_farey(const GeodesicEdge& e);

// (u.num+v.num)/(u.den+v.den), requires is_farey_neighbor(u, v).
ExtRat mediant(const ExtRat& u, const ExtRat& v);

// The two third vertices of the triangles adjacent to a Farey edge:
// .first lies in the open arc lo -> hi (counterclockwise), .second outside.
struct EdgeWings {
  ExtRat inner;
  ExtRat outer;
};
EdgeWings edge_wings(const GeodesicEdge& e);

// All Farey edges with both endpoints in the window, canonically sorted.
std::vector<GeodesicEdge> farey_edges_in_window(const Window& w);

// True iff the endpoints of e2 separate the endpoints of e1 on the circle.
// Shared endpoints never cross.
bool circular_cross(const GeodesicEdge& e1, const GeodesicEdge& e2);

// Integral 2x2 matrix acting projectively, z -> (a z + b)/(c z + d).
struct IntMat {
  Int a, b, c, d;
  ExtRat apply(const ExtRat& v) const;
  IntMat inverse_unimodular() const;  // valid for det ±1
  Int determinant() const;
};

// Fans. The fan at tip p is indexed by conjugating to the fan at ∞ (whose
// edges are the integer verticals) with a determinant-one integral matrix.
// Index 0 is assigned to an anchor edge: by default the pullback of (0, ∞),
// which for p = ∞ and p = 0 is the edge (0, ∞) itself. Only index
// differences carry meaning; the anchor pins them down.
struct Fan {
  ExtRat tip;
  IntMat to_inf;    // sends tip to ∞, det +1
  IntMat from_inf;  // inverse
  Int anchor;       // E_j has other endpoint from_inf(anchor + j)

  static Fan at(const ExtRat& tip, const std::optional<GeodesicEdge>& anchor_edge = {});

  ExtRat vertex(const Int& j) const;        // other endpoint of E_j
  GeodesicEdge edge(const Int& j) const;    // E_j
  Int index_of(const GeodesicEdge& e) const;  // throws if e not in the fan
};

std::vector<GeodesicEdge> fan_edges(const ExtRat& tip, const Int& j_lo, const Int& j_hi,
                                    const std::optional<GeodesicEdge>& anchor_edge = {});

// gcd(a,b) together with Bezout coefficients, deterministic.
void ext_gcd(const Int& a, const Int& b, Int& g, Int& x, Int& y);

}  // namespace farey
