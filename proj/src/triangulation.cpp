#include "farey/triangulation.hpp"

#include <algorithm>
#include <deque>

namespace farey {

namespace {

std::array<ExtRat, 3> sorted_triple(const ExtRat& a, const ExtRat& b, const ExtRat& c) {
  std::array<ExtRat, 3> t{a, b, c};
  std::sort(t.begin(), t.end());
  return t;
}

void check_pairwise_noncrossing(const std::vector<GeodesicEdge>& kept,
                                const std::vector<GeodesicEdge>& fresh, const char* what) {
  for (size_t i = 0; i < fresh.size(); ++i) {
    for (size_t j = i + 1; j < fresh.size(); ++j) {
      if (circular_cross(fresh[i], fresh[j])) {
        throw InvalidFlipSet(std::string(what) + ": edges cross: " + edge_str(fresh[i]) + " x " +
                             edge_str(fresh[j]));
      }
    }
    for (const auto& k : kept) {
      if (circular_cross(fresh[i], k)) {
        throw InvalidFlipSet(std::string(what) + ": edge " + edge_str(fresh[i]) +
                             " crosses kept edge " + edge_str(k));
      }
    }
  }
}

}  // namespace

void WindowTriangulation::build_index() {
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
  for (const auto& e : edges_) {
    adj_[e.lo].push_back(e.hi);
    adj_[e.hi].push_back(e.lo);
  }
  for (auto& [v, nb] : adj_) std::sort(nb.begin(), nb.end());
}

WindowTriangulation WindowTriangulation::farey(const Window& w) {
  WindowTriangulation t;
  t.backend_ = Backend::farey_base;
  t.window_ = w;
  t.edges_ = farey_edges_in_window(w);
  t.build_index();
  return t;
}

WindowTriangulation WindowTriangulation::finite_diff(const Window& w,
                                                     std::vector<GeodesicEdge> removed,
                                                     std::vector<GeodesicEdge> added) {
  WindowTriangulation t;
  t.backend_ = Backend::finite_diff;
  t.window_ = w;
  std::vector<GeodesicEdge> base = farey_edges_in_window(w);
  std::set<GeodesicEdge> edge_set(base.begin(), base.end());
  std::sort(removed.begin(), removed.end());
  std::sort(added.begin(), added.end());
  for (const auto& e : removed) {
    if (edge_set.erase(e) == 0) {
      throw InvalidFlipSet("removed edge not in the windowed Farey triangulation: " + edge_str(e));
    }
  }
  for (const auto& e : added) {
    if (!window_contains(w, e.lo) || !window_contains(w, e.hi)) {
      throw InvalidFlipSet("added edge leaves the window: " + edge_str(e));
    }
    if (!edge_set.insert(e).second) {
      throw InvalidFlipSet("added edge already present: " + edge_str(e));
    }
  }
  t.edges_.assign(edge_set.begin(), edge_set.end());
  check_pairwise_noncrossing(std::vector<GeodesicEdge>(edge_set.begin(), edge_set.end()), added,
                             "finite_diff");
  t.removed_ = std::move(removed);
  t.added_ = std::move(added);
  t.build_index();
  return t;
}

WindowTriangulation WindowTriangulation::image_of_farey(const Window& w, const VertexMap& map) {
  WindowTriangulation t;
  t.backend_ = Backend::image_of_farey;
  t.window_ = w;
  for (const auto& e : farey_edges_in_window(w)) {
    if (map.contains(e.lo) && map.contains(e.hi)) {
      t.edges_.push_back(make_edge(map.image(e.lo), map.image(e.hi)));
    }
  }
  t.image_map_ = map;
  t.build_index();
  return t;
}

bool WindowTriangulation::has_edge(const GeodesicEdge& e) const {
  return std::binary_search(edges_.begin(), edges_.end(), e);
}

const std::vector<ExtRat>& WindowTriangulation::neighbors(const ExtRat& v) const {
  static const std::vector<ExtRat> empty;
  const auto it = adj_.find(v);
  return it == adj_.end() ? empty : it->second;
}

namespace {

// Unique common neighbor of e's endpoints on each side of e, if present.
void side_vertices(const WindowTriangulation& t, const GeodesicEdge& e,
                   std::optional<ExtRat>& inner, std::optional<ExtRat>& outer) {
  const auto& a = t.neighbors(e.lo);
  const auto& b = t.neighbors(e.hi);
  std::vector<ExtRat> common;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
  for (const auto& v : common) {
    if (in_open_arc(e.lo, v, e.hi)) {
      if (inner) throw std::logic_error("two faces on one side of " + edge_str(e));
      inner = v;
    } else {
      if (outer) throw std::logic_error("two faces on one side of " + edge_str(e));
      outer = v;
    }
  }
}

}  // namespace

bool has_complete_quad(const WindowTriangulation& t, const GeodesicEdge& e) {
  if (!t.has_edge(e)) return false;
  std::optional<ExtRat> inner, outer;
  side_vertices(t, e, inner, outer);
  return inner && outer;
}

Quad quad_of_edge(const WindowTriangulation& t, const GeodesicEdge& e) {
  if (!t.has_edge(e)) throw std::invalid_argument("edge not in triangulation: " + edge_str(e));
  std::optional<ExtRat> inner, outer;
  side_vertices(t, e, inner, outer);
  if (!inner || !outer) {
    throw BoundaryEdge("window shows only one triangle adjacent to " + edge_str(e));
  }
  return Quad{e.lo, *inner, e.hi, *outer};
}

std::vector<std::array<ExtRat, 3>> faces(const WindowTriangulation& t) {
  std::set<std::array<ExtRat, 3>> out;
  for (const auto& e : t.edges()) {
    std::optional<ExtRat> inner, outer;
    side_vertices(t, e, inner, outer);
    if (inner) out.insert(sorted_triple(e.lo, *inner, e.hi));
    if (outer) out.insert(sorted_triple(e.lo, *outer, e.hi));
  }
  return std::vector<std::array<ExtRat, 3>>(out.begin(), out.end());
}

FlipResult simultaneous_flip(const WindowTriangulation& t, const FlipSet& d,
                             const std::optional<LambdaAssignment>& lams) {
  std::set<std::array<ExtRat, 3>> used_faces;
  std::set<GeodesicEdge> seen;
  std::vector<std::pair<GeodesicEdge, Quad>> quads;
  for (const auto& e : d.edges) {
    if (!seen.insert(e).second) throw InvalidFlipSet("duplicate flip edge " + edge_str(e));
    if (!t.has_edge(e)) throw InvalidFlipSet("flip edge not in triangulation: " + edge_str(e));
    Quad q;
    try {
      q = quad_of_edge(t, e);
    } catch (const BoundaryEdge&) {
      throw InvalidFlipSet("flip edge is frozen at the window boundary: " + edge_str(e));
    }
    for (const auto& f : {sorted_triple(q.a, q.b, q.c), sorted_triple(q.a, q.c, q.d)}) {
      if (!used_faces.insert(f).second) {
        throw InvalidFlipSet("flip quadrilaterals share a triangle at " + edge_str(e));
      }
    }
    quads.emplace_back(e, q);
  }

  std::set<GeodesicEdge> edge_set(t.edges().begin(), t.edges().end());
  std::vector<GeodesicEdge> fresh;
  for (const auto& [e, q] : quads) edge_set.erase(e);
  for (const auto& [e, q] : quads) {
    const GeodesicEdge ne = make_edge(q.b, q.d);
    if (!edge_set.insert(ne).second) throw InvalidFlipSet("flip collides on " + edge_str(ne));
    fresh.push_back(ne);
  }
  check_pairwise_noncrossing(std::vector<GeodesicEdge>(edge_set.begin(), edge_set.end()), fresh,
                             "simultaneous_flip");

  FlipResult out;
  {
    // express the result as a diff against the windowed Farey edges
    const std::vector<GeodesicEdge> base = farey_edges_in_window(t.window());
    std::vector<GeodesicEdge> removed, added;
    std::set_difference(base.begin(), base.end(), edge_set.begin(), edge_set.end(),
                        std::back_inserter(removed));
    std::set_difference(edge_set.begin(), edge_set.end(), base.begin(), base.end(),
                        std::back_inserter(added));
    out.triangulation = WindowTriangulation::finite_diff(t.window(), removed, added);
  }
  if (lams) {
    LambdaAssignment next = *lams;
    for (const auto& [e, q] : quads) {
      next.lam[make_edge(q.b, q.d)] =
          ptolemy(lams->at(make_edge(q.a, q.b)), lams->at(make_edge(q.b, q.c)),
                  lams->at(make_edge(q.c, q.d)), lams->at(make_edge(q.d, q.a)),
                  lams->at(make_edge(q.a, q.c)));
      next.lam.erase(make_edge(q.a, q.c));
    }
    out.lambdas = std::move(next);
  }
  return out;
}

long intersection_number(const GeodesicEdge& e, const WindowTriangulation& t) {
  long n = 0;
  for (const auto& f : t.edges()) {
    if (circular_cross(e, f)) ++n;
  }
  return n;
}

CrossReport max_crossing(const WindowTriangulation& t1, const WindowTriangulation& t2) {
  CrossReport rep;
  const auto sup_side = [](const WindowTriangulation& a, const WindowTriangulation& b, long& best,
                           std::optional<GeodesicEdge>& witness) {
    for (const auto& e : a.edges()) {
      if (!has_complete_quad(a, e)) continue;
      const long c = intersection_number(e, b);
      if (!witness || c > best) {
        best = c;
        witness = e;
      }
    }
  };
  sup_side(t1, t2, rep.n, rep.n_witness);
  sup_side(t2, t1, rep.m, rep.m_witness);
  return rep;
}

TransitivityReport check_transitivity_bound(const WindowTriangulation& t1,
                                            const WindowTriangulation& t2,
                                            const WindowTriangulation& t3) {
  TransitivityReport rep;
  rep.n = max_crossing(t1, t2).n;
  rep.m = max_crossing(t2, t3).n;
  rep.bound = 9 * (rep.n + 2) * (rep.m + 2);
  for (const auto& e : t1.edges()) {
    if (!has_complete_quad(t1, e)) continue;
    rep.measured = std::max(rep.measured, intersection_number(e, t3));
  }
  rep.pass = rep.measured <= rep.bound;
  rep.slack = rep.bound - rep.measured;
  return rep;
}

double arc_depth(const GeodesicEdge& e, const Decoration& dec) {
  double depth = 0.0;
  for (const auto& [v, h] : dec.at) {
    if (v == e.lo || v == e.hi) continue;
    depth = std::max(depth, horoball_penetration_depth(e, h));
  }
  return depth;
}

std::optional<std::vector<FlipSet>> flip_path_search(const WindowTriangulation& t, int budget) {
  if (budget < 0) throw std::invalid_argument("budget must be nonnegative");
  const WindowTriangulation target = WindowTriangulation::farey(t.window());
  const std::set<GeodesicEdge> target_set(target.edges().begin(), target.edges().end());

  WindowTriangulation cur = t;
  std::vector<FlipSet> seq;
  for (int step = 0; step < budget + 1; ++step) {
    if (cur.edges() == target.edges()) return seq;
    if (step == budget) break;
    struct Candidate {
      long delta;
      GeodesicEdge e;
      Quad q;
    };
    std::vector<Candidate> cands;
    for (const auto& e : cur.edges()) {
      if (target_set.count(e)) continue;
      if (!has_complete_quad(cur, e)) continue;
      const Quad q = quad_of_edge(cur, e);
      const GeodesicEdge flipped = make_edge(q.b, q.d);
      const long delta = intersection_number(flipped, target) - intersection_number(e, target);
      if (delta < 0) cands.push_back({delta, e, q});
    }
    if (cands.empty()) return std::nullopt;
    std::sort(cands.begin(), cands.end(), [](const Candidate& a, const Candidate& b) {
      if (a.delta != b.delta) return a.delta < b.delta;
      return a.e < b.e;
    });
    FlipSet move;
    std::set<std::array<ExtRat, 3>> used;
    for (const auto& c : cands) {
      const auto f1 = sorted_triple(c.q.a, c.q.b, c.q.c);
      const auto f2 = sorted_triple(c.q.a, c.q.c, c.q.d);
      if (used.count(f1) || used.count(f2)) continue;
      used.insert(f1);
      used.insert(f2);
      move.edges.push_back(c.e);
    }
    cur = simultaneous_flip(cur, move).triangulation;
    seq.push_back(std::move(move));
  }
  return std::nullopt;
}

VertexMap characteristic_vertex_map(const WindowTriangulation& t, const std::array<ExtRat, 3>& src,
                                    const std::array<ExtRat, 3>& dst) {
  const FareyTriangle base = make_farey_triangle(src[0], src[1], src[2]);
  const WindowTriangulation fw = WindowTriangulation::farey(t.window());
  VertexMap out;
  out.normalization = base;
  std::map<ExtRat, ExtRat> g;
  for (int i = 0; i < 3; ++i) g[src[i]] = dst[i];

  struct Item {
    std::array<ExtRat, 3> s;  // (x, y, z): crossing candidates are the edges
    std::array<ExtRat, 3> d;
  };
  std::deque<Item> queue;
  std::set<std::array<ExtRat, 3>> visited;
  queue.push_back({{src[0], src[1], src[2]}, {dst[0], dst[1], dst[2]}});
  visited.insert(sorted_triple(src[0], src[1], src[2]));
  while (!queue.empty()) {
    const Item it = queue.front();
    queue.pop_front();
    for (int k = 0; k < 3; ++k) {
      const ExtRat &x = it.s[k], &y = it.s[(k + 1) % 3], &z = it.s[(k + 2) % 3];
      const ExtRat &xd = it.d[k], &yd = it.d[(k + 1) % 3], &zd = it.d[(k + 2) % 3];
      const GeodesicEdge es = make_edge(x, y);
      const GeodesicEdge ed = make_edge(xd, yd);
      if (!has_complete_quad(fw, es) || !has_complete_quad(t, ed)) continue;
      const EdgeWings wings = edge_wings(es);
      const ExtRat m = (wings.inner == z) ? wings.outer : wings.inner;
      const Quad qd = quad_of_edge(t, ed);
      const ExtRat md = (qd.b == zd) ? qd.d : qd.b;
      const auto ins = g.emplace(m, md);
      if (!ins.second && ins.first->second != md) {
        throw std::logic_error("characteristic map inconsistent at " + m.str());
      }
      const auto key = sorted_triple(x, y, m);
      if (visited.insert(key).second) queue.push_back({{x, y, m}, {xd, yd, md}});
    }
  }
  out.pairs = std::move(g);
  validate_vertex_map(out);
  return out;
}

VertexMap compose(const VertexMap& g, const VertexMap& h) {
  VertexMap out;
  out.normalization = h.normalization;
  for (const auto& [v, hv] : h.pairs) {
    const auto it = g.pairs.find(hv);
    if (it != g.pairs.end()) out.pairs.emplace(v, it->second);
  }
  return out;
}

}  // namespace farey
