#include "farey/farey.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace farey {

GeodesicEdge make_edge(const ExtRat& u, const ExtRat& v) {
  if (u == v) throw std::invalid_argument("edge endpoints must be distinct: " + u.str());
  GeodesicEdge e;
  if (u < v) {
    e.lo = u;
    e.hi = v;
  } else {
    e.lo = v;
    e.hi = u;
  }
  return e;
}

bool operator==(const GeodesicEdge& a, const GeodesicEdge& b) { return a.lo == b.lo && a.hi == b.hi; }
bool operator!=(const GeodesicEdge& a, const GeodesicEdge& b) { return !(a == b); }
bool operator<(const GeodesicEdge& a, const GeodesicEdge& b) {
  if (a.lo != b.lo) return a.lo < b.lo;
  return a.hi < b.hi;
}

std::string edge_str(const GeodesicEdge& e) { return e.lo.str() + "-" + e.hi.str(); }

GeodesicEdge parse_edge(const std::string& s) {
  // "p/q-r/s'; the separator is the '-' following the first denominator.
  const auto slash = s.find('/');
  if (slash == std::string::npos) throw std::invalid_argument("bad edge: '" + s + "'");
  const auto dash = s.find('-', slash);
  if (dash == std::string::npos) throw std::invalid_argument("bad edge: '" + s + "'");
  return make_edge(parse_extrat(s.substr(0, dash)), parse_extrat(s.substr(dash + 1)));
}

bool window_contains(const Window& w, const ExtRat& v) {
  if (v.is_infinity()) return w.include_infinity;
  return abs(v.num) <= w.max_num && v.den <= w.max_den;
}

std::vector<ExtRat> window_vertices(const Window& w) {
  if (w.max_num < 1 || w.max_den < 1) throw std::invalid_argument("window bounds must be positive");
  std::vector<ExtRat> out;
  for (Int q = 1; q <= w.max_den; ++q) {
    for (Int p = -w.max_num; p <= w.max_num; ++p) {
      if (gcd(abs(p), q) == 1) out.push_back(reduce(p, q));
    }
  }
  std::sort(out.begin(), out.end());
  if (w.include_infinity) out.push_back(ExtRat::infinity());
  return out;
}

bool is_farey_neighbor(const ExtRat& u, const ExtRat& v) {
  if (u == v) throw std::invalid_argument("is_farey_neighbor: equal vertices");
  return abs(det(u, v)) == 1;
}

bool edge_in_farey(const GeodesicEdge& e) { return abs(det(e.lo, e.hi)) == 1; }

ExtRat mediant(const ExtRat& u, const ExtRat& v) {
  if (!is_farey_neighbor(u, v)) {
    throw std::invalid_argument("mediant requires Farey neighbors: " + u.str() + ", " + v.str());
  }
  return reduce(u.num + v.num, u.den + v.den);
}

EdgeWings edge_wings(const GeodesicEdge& e) {
  if (!edge_in_farey(e)) throw std::invalid_argument("edge_wings: not a Farey edge: " + edge_str(e));
  EdgeWings w;
  w.inner = reduce(e.lo.num + e.hi.num, e.lo.den + e.hi.den);
  w.outer = reduce(e.lo.num - e.hi.num, e.lo.den - e.hi.den);
  return w;
}

std::vector<GeodesicEdge> farey_edges_in_window(const Window& w) {
  std::set<GeodesicEdge> edges;
  // For p/q the neighbors r/s solve |ps - qr| = 1; for each s there are at
  // most two residues of r, found by modular inverse.
  for (Int q = 1; q <= w.max_den; ++q) {
    for (Int p = -w.max_num; p <= w.max_num; ++p) {
      if (gcd(abs(p), q) != 1) continue;
      const ExtRat v = reduce(p, q);
      for (Int s = 1; s <= w.max_den; ++s) {
        // ps - qr = ±1  =>  r = (ps ∓ 1)/q when divisible
        for (int sign : {1, -1}) {
          Int t = p * s - sign;
          if (t % q != 0) continue;
          Int r = t / q;
          if (abs(r) > w.max_num) continue;
          const ExtRat u = reduce(r, s);
          if (u == v) continue;
          edges.insert(make_edge(v, u));
        }
      }
      if (w.include_infinity && q == 1) edges.insert(make_edge(v, ExtRat::infinity()));
    }
  }
  return std::vector<GeodesicEdge>(edges.begin(), edges.end());
}

bool circular_cross(const GeodesicEdge& e1, const GeodesicEdge& e2) {
  if (e1.lo == e2.lo || e1.lo == e2.hi || e1.hi == e2.lo || e1.hi == e2.hi) return false;
  const bool a = in_open_arc(e1.lo, e2.lo, e1.hi);
  const bool b = in_open_arc(e1.lo, e2.hi, e1.hi);
  return a != b;
}

ExtRat IntMat::apply(const ExtRat& v) const {
  return reduce(a * v.num + b * v.den, c * v.num + d * v.den);
}

IntMat IntMat::inverse_unimodular() const { return IntMat{d, -b, -c, a}; }

Int IntMat::determinant() const { return a * d - b * c; }

void ext_gcd(const Int& a, const Int& b, Int& g, Int& x, Int& y) {
  if (b == 0) {
    g = a;
    x = 1;
    y = 0;
    return;
  }
  Int x1, y1;
  ext_gcd(b, a % b, g, x1, y1);
  x = y1;
  y = x1 - (a / b) * y1;
}

Fan Fan::at(const ExtRat& tip, const std::optional<GeodesicEdge>& anchor_edge) {
  Fan f;
  f.tip = tip;
  // [[x, y], [-den, num]] has determinant x*num + y*den = 1 and kills tip.
  Int g, x, y;
  ext_gcd(tip.num, tip.den, g, x, y);
  if (g < 0) {
    g = -g;
    x = -x;
    y = -y;
  }
  if (g != 1) throw std::logic_error("fan tip not reduced");
  f.to_inf = IntMat{x, y, -tip.den, tip.num};
  f.from_inf = f.to_inf.inverse_unimodular();
  f.anchor = 0;
  if (anchor_edge) {
    f.anchor = f.index_of(*anchor_edge);
  }
  return f;
}

ExtRat Fan::vertex(const Int& j) const { return from_inf.apply(ExtRat(Int(anchor + j))); }

GeodesicEdge Fan::edge(const Int& j) const { return make_edge(tip, vertex(j)); }

Int Fan::index_of(const GeodesicEdge& e) const {
  ExtRat other;
  if (e.lo == tip) {
    other = e.hi;
  } else if (e.hi == tip) {
    other = e.lo;
  } else {
    throw std::invalid_argument("edge " + edge_str(e) + " is not in the fan at " + tip.str());
  }
  if (!edge_in_farey(e)) throw std::invalid_argument("not a Farey edge: " + edge_str(e));
  const ExtRat img = to_inf.apply(other);
  if (!img.is_integer()) throw std::logic_error("fan conjugation did not land on an integer");
  return img.num - anchor;
}

std::vector<GeodesicEdge> fan_edges(const ExtRat& tip, const Int& j_lo, const Int& j_hi,
                                    const std::optional<GeodesicEdge>& anchor_edge) {
  if (j_lo > j_hi) throw std::invalid_argument("fan_edges: empty index range");
  const Fan f = Fan::at(tip, anchor_edge);
  std::vector<GeodesicEdge> out;
  for (Int j = j_lo; j <= j_hi; ++j) out.push_back(f.edge(j));
  return out;
}

}  // namespace farey
