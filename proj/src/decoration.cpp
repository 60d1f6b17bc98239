#include "farey/decoration.hpp"

#include <cmath>
#include <stdexcept>

#include "farey/triangulation.hpp"

namespace farey {

const Horocycle& Decoration::horocycle(const ExtRat& v) const {
  const auto it = at.find(v);
  if (it == at.end()) throw std::out_of_range("no horocycle at " + v.str());
  return it->second;
}

const Rat& LambdaAssignment::at(const GeodesicEdge& e) const {
  const auto it = lam.find(e);
  if (it == lam.end()) throw std::out_of_range("no lambda length on " + edge_str(e));
  return it->second;
}

Horocycle canonical_horocycle(const ExtRat& v) {
  if (v.is_infinity()) return Horocycle{v, 1};
  return Horocycle{v, make_rat(1, Int(v.den * v.den))};
}

Decoration canonical_decoration(const Window& w) {
  Decoration d;
  for (const ExtRat& v : window_vertices(w)) d.at.emplace(v, canonical_horocycle(v));
  return d;
}

LambdaAssignment lambda_lengths(const WindowTriangulation& t, const Decoration& dec) {
  LambdaAssignment out;
  for (const auto& e : t.edges()) {
    out.lam.emplace(e, Rat(lambda_from_horocycles(dec.horocycle(e.lo), dec.horocycle(e.hi))));
  }
  return out;
}

PinchReport is_pinched(const LambdaAssignment& lams, const Rat& M) {
  if (M <= 1) throw std::invalid_argument("pinching bound must exceed 1");
  if (lams.lam.empty()) throw std::invalid_argument("empty lambda assignment");
  PinchReport rep;
  bool first = true;
  for (const auto& [e, l] : lams.lam) {
    if (l <= 0) throw std::invalid_argument("lambda lengths must be positive");
    if (first || l < rep.min_lambda) {
      rep.min_lambda = l;
      rep.min_edge = e;
    }
    if (first || l > rep.max_lambda) {
      rep.max_lambda = l;
      rep.max_edge = e;
    }
    first = false;
  }
  rep.pass = rep.min_lambda >= 1 / M && rep.max_lambda <= M;
  return rep;
}

DevelopedDecoration developed_decoration(const ShearFunction& s, const Window& w,
                                         const FareyTriangle& norm) {
  Developer dev(s, norm);
  DevelopedDecoration out;
  out.map.normalization = norm;
  for (const ExtRat& v : window_vertices(w)) out.map.pairs.emplace(v, dev.place(v));
  validate_vertex_map(out.map);
  for (const auto& [v, img] : out.map.pairs) {
    // anchor sector: between fan edges of index 0 and 1 at v
    const Fan fan = Fan::at(v);
    const ExtRat u0 = dev.place(fan.vertex(0));
    const ExtRat u1 = dev.place(fan.vertex(1));
    Rat size;
    if (img.is_infinity()) {
      // arc along height t between verticals: |u0 - u1| / t = 1
      size = abs(u0.value() - u1.value());
    } else {
      // arc = d * bd² |u0 u1| / (|u0 b| |u1 b|) = 1
      const Int luw = abs(det(u0, u1));
      const Int lub = abs(det(u0, img));
      const Int lwb = abs(det(u1, img));
      size = make_rat(Int(lub * lwb), Int(img.den * img.den * luw));
    }
    out.dec.at.emplace(img, Horocycle{img, size});
  }
  return out;
}

Decoration decoration_from_shears(const ShearFunction& s, const Window& w,
                                  const FareyTriangle& norm) {
  return developed_decoration(s, w, norm).dec;
}

Rat developed_sector_arc(const DevelopedDecoration& dd, Developer& dev, const ExtRat& tip,
                         const Int& j) {
  const Fan fan = Fan::at(tip);
  const ExtRat img = dd.map.image(tip);
  const Horocycle& h = dd.dec.horocycle(img);
  const ExtRat u = dev.place(fan.vertex(j));
  const ExtRat v = dev.place(fan.vertex(j + 1));
  return horocyclic_arc(h, u, v);
}

CertChainReport pinched_forces_qs(const Window& w, const LambdaAssignment& lams, const Rat& M) {
  if (M <= 1) throw std::invalid_argument("bound must exceed 1");
  CertChainReport rep;
  rep.arc_bound = M * M * M;
  rep.ratio_bound = rep.arc_bound * rep.arc_bound;
  bool first_arc = true, first_ratio = true;
  for (const ExtRat& tip : window_vertices(w)) {
    const Fan fan = Fan::at(tip);
    // contiguous runs of fan sectors whose three edges are all in the window
    std::vector<Int> indices;
    {
      // collect available sector indices j: edges E_j, E_{j+1}, (u_j, u_{j+1})
      // all inside the window edge set
      Int j = 0;
      const auto sector_ok = [&](const Int& jj) {
        const ExtRat u = fan.vertex(jj), v = fan.vertex(jj + 1);
        return window_contains(w, u) && window_contains(w, v);
      };
      while (sector_ok(j)) ++j;
      const Int hi = j - 1;
      j = -1;
      while (sector_ok(j)) --j;
      const Int lo = j + 1;
      for (Int i = lo; i <= hi; ++i) indices.push_back(i);
    }
    if (indices.empty()) continue;
    std::vector<Rat> arcs;
    arcs.reserve(indices.size());
    for (const Int& j : indices) {
      const ExtRat u = fan.vertex(j), v = fan.vertex(j + 1);
      const Rat arc = arc_length_in_triangle(lams.at(make_edge(u, v)), lams.at(make_edge(tip, u)),
                                             lams.at(make_edge(tip, v)));
      arcs.push_back(arc);
      if (first_arc || arc < rep.arc_min) rep.arc_min = arc;
      if (first_arc || arc > rep.arc_max) rep.arc_max = arc;
      first_arc = false;
      ++rep.arcs_checked;
    }
    // ratios over all centered windows within the run
    const long len = static_cast<long>(arcs.size());
    std::vector<Rat> pre(len + 1, Rat(0));
    for (long i = 0; i < len; ++i) pre[i + 1] = pre[i] + arcs[i];
    for (long c = 1; c < len; ++c) {  // split point: denominator ends at c-1
      for (long n = 1; n <= std::min(c, len - c); ++n) {
        const Rat num = pre[c + n] - pre[c];
        const Rat den = pre[c] - pre[c - n];
        const Rat r = num / den;
        if (first_ratio || r < rep.ratio_min) rep.ratio_min = r;
        if (first_ratio || r > rep.ratio_max) rep.ratio_max = r;
        first_ratio = false;
        ++rep.ratios_checked;
      }
    }
  }
  rep.pass = !first_arc && rep.arc_min >= 1 / rep.arc_bound && rep.arc_max <= rep.arc_bound &&
             (first_ratio || (rep.ratio_min >= 1 / rep.ratio_bound && rep.ratio_max <= rep.ratio_bound));
  return rep;
}

Decoration retract_decoration(const Decoration& dec, double d) {
  if (d < 0) throw std::invalid_argument("retraction distance must be nonnegative");
  Decoration out;
  for (const auto& [v, h] : dec.at) {
    const double factor = v.is_infinity() ? std::exp(d) : std::exp(-d);
    out.at.emplace(v, Horocycle{h.base, h.size * Rat(factor)});
  }
  return out;
}

}  // namespace farey
