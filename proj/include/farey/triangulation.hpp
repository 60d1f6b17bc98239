#pragma once

#include <array>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "farey/decoration.hpp"
#include "farey/develop.hpp"
#include "farey/farey.hpp"

namespace farey {

struct InvalidFlipSet : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An edge with only one visible adjacent triangle; frozen at the window rim.
struct BoundaryEdge : std::domain_error {
  using std::domain_error::domain_error;
};

// A triangulation restricted to a window. Farey base, a finite edge diff
// against it, or the image of the windowed Farey triangulation under a
// vertex map. Immutable once built.
class WindowTriangulation {
 public:
  enum class Backend { farey_base, finite_diff, image_of_farey };

  static WindowTriangulation farey(const Window& w);
  static WindowTriangulation finite_diff(const Window& w, std::vector<GeodesicEdge> removed,
                                         std::vector<GeodesicEdge> added);
  static WindowTriangulation image_of_farey(const Window& w, const VertexMap& map);

  Backend backend() const { return backend_; }
  const Window& window() const { return window_; }
  const std::vector<GeodesicEdge>& edges() const { return edges_; }
  bool has_edge(const GeodesicEdge& e) const;
  const std::vector<ExtRat>& neighbors(const ExtRat& v) const;

  // diff against the windowed Farey edge set (empty for the farey backend)
  const std::vector<GeodesicEdge>& removed() const { return removed_; }
  const std::vector<GeodesicEdge>& added() const { return added_; }
  const std::optional<VertexMap>& image_map() const { return image_map_; }

  WindowTriangulation() = default;

 private:
  void build_index();

  Backend backend_ = Backend::farey_base;
  Window window_;
  std::vector<GeodesicEdge> edges_;
  std::vector<GeodesicEdge> removed_, added_;
  std::optional<VertexMap> image_map_;
  std::map<ExtRat, std::vector<ExtRat>> adj_;
};

// Cyclically ordered quadrilateral around a diagonal: (a, b, c, d) with
// diagonal (a, c) = (lo, hi), b the wing inside the arc lo -> hi.
struct Quad {
  ExtRat a, b, c, d;
};

bool has_complete_quad(const WindowTriangulation& t, const GeodesicEdge& e);
Quad quad_of_edge(const WindowTriangulation& t, const GeodesicEdge& e);  // throws BoundaryEdge

std::vector<std::array<ExtRat, 3>> faces(const WindowTriangulation& t);

// Edges to flip in one move; their quads must be pairwise triangle-disjoint.
struct FlipSet {
  std::vector<GeodesicEdge> edges;
};

struct FlipResult {
  WindowTriangulation triangulation;
  std::optional<LambdaAssignment> lambdas;
};

// Replace each diagonal by the opposite one; lambda lengths follow the
// Ptolemy exchange λ_bd = (λ_ab λ_cd + λ_bc λ_da) / λ_ac.
FlipResult simultaneous_flip(const WindowTriangulation& t, const FlipSet& d,
                             const std::optional<LambdaAssignment>& lams = std::nullopt);

long intersection_number(const GeodesicEdge& e, const WindowTriangulation& t);

struct CrossReport {
  long n = 0, m = 0;  // sup over t1 edges of i(., t2) and symmetric
  std::optional<GeodesicEdge> n_witness, m_witness;
};

// Windowed lower bounds for the two intersection suprema. Edges with an
// incomplete quad on the sup side are skipped.
CrossReport max_crossing(const WindowTriangulation& t1, const WindowTriangulation& t2);

struct TransitivityReport {
  long n = 0, m = 0;
  long measured = 0;
  long bound = 0;  // 9 (n+2) (m+2)
  bool pass = false;
  long slack = 0;
};

TransitivityReport check_transitivity_bound(const WindowTriangulation& t1,
                                            const WindowTriangulation& t2,
                                            const WindowTriangulation& t3);

// Deepest excursion of e into the decoration's horoballs, ignoring horoballs
// based at the endpoints of e.
double arc_depth(const GeodesicEdge& e, const Decoration& dec);

// Greedy simultaneous-flip search toward the windowed Farey triangulation:
// each move flips a maximal disjoint set of edges whose individual flip
// strictly decreases the total crossing number with the Farey edges.
// Success certifies a windowed flip-distance upper bound; failure certifies
// nothing.
std::optional<std::vector<FlipSet>> flip_path_search(const WindowTriangulation& t, int budget);

// The combinatorial vertex correspondence moving the windowed Farey
// triangulation onto t, rooted at src |-> dst (triangles listed in matching
// circular order). Partial: stops at window-boundary edges.
VertexMap characteristic_vertex_map(const WindowTriangulation& t, const std::array<ExtRat, 3>& src,
                                    const std::array<ExtRat, 3>& dst);

// g ∘ h restricted to the vertices where it is defined.
VertexMap compose(const VertexMap& g, const VertexMap& h);

}  // namespace farey
