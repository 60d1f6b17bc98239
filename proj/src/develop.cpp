#include "farey/develop.hpp"

#include <cmath>
#include <vector>

namespace farey {

FareyTriangle make_farey_triangle(const ExtRat& a, const ExtRat& b, const ExtRat& c) {
  ExtRat v[3] = {a, b, c};
  std::sort(v, v + 3);
  if (v[0] == v[1] || v[1] == v[2]) throw std::invalid_argument("triangle needs distinct vertices");
  if (!is_farey_neighbor(v[0], v[1]) || !is_farey_neighbor(v[1], v[2]) ||
      !is_farey_neighbor(v[0], v[2])) {
    throw std::invalid_argument("not a Farey triangle: " + v[0].str() + "," + v[1].str() + "," +
                                v[2].str());
  }
  return FareyTriangle{v[0], v[1], v[2]};
}

FareyTriangle default_normalization() {
  return make_farey_triangle(ExtRat(0), ExtRat(1), ExtRat::infinity());
}

Developer::Developer(ShearFunction s, FareyTriangle normalization)
    : s_(std::move(s)), norm_(std::move(normalization)) {
  norm_ = make_farey_triangle(norm_.a, norm_.b, norm_.c);  // re-validate
  if (!s_.exact()) {
    throw std::domain_error("exact development requires rational shear multipliers");
  }
  memo_[norm_.a] = norm_.a;
  memo_[norm_.b] = norm_.b;
  memo_[norm_.c] = norm_.c;
  inf_fixed_ = norm_.c.is_infinity();
  if (inf_fixed_) {
    // norm_ = (n, n+1, ∞)
    int_lo_ = norm_.a.num;
    int_hi_ = norm_.b.num;
    seg_[int_lo_] = {Rat(int_lo_), Rat(1)};
  }
}

namespace {

Int floor_of(const ExtRat& v) {
  Int q = v.num / v.den;
  if (v.num < 0 && v.num % v.den != 0) --q;
  return q;
}

}  // namespace

ExtRat Developer::cross_edge(const ExtRat& x, const ExtRat& y, const ExtRat& m, const ExtRat& xi,
                             const ExtRat& yi, const ExtRat& zi) {
  // orient so that the new vertex sits in the counterclockwise arc x -> y
  const Rat mult = s_.mult_at(make_edge(x, y));
  ExtRat img;
  if (in_open_arc(x, m, y)) {
    img = place_across(xi, yi, zi, mult);
    if (!(in_open_arc(xi, img, yi))) throw DegenerateDevelopment("placement left its arc");
  } else {
    img = place_across(yi, xi, zi, mult);
    if (!(in_open_arc(yi, img, xi))) throw DegenerateDevelopment("placement left its arc");
  }
  return img;
}

ExtRat Developer::walk_down(const ExtRat& v, ExtRat x, ExtRat y, ExtRat z, ExtRat xi, ExtRat yi,
                            ExtRat zi) {
  // invariant: triangle (x,y,z) placed with images (xi,yi,zi), v in the
  // region beyond edge (x,y) from z
  while (true) {
    const EdgeWings wings = edge_wings(make_edge(x, y));
    const ExtRat m = (wings.inner == z) ? wings.outer : wings.inner;
    ExtRat mi;
    const auto it = memo_.find(m);
    if (it != memo_.end()) {
      mi = it->second;
    } else {
      mi = cross_edge(x, y, m, xi, yi, zi);
      memo_.emplace(m, mi);
    }
    if (m == v) return mi;
    // descend into the sub-region (x,m) or (m,y) containing v
    const bool beyond_xm = in_open_arc(x, v, m) != in_open_arc(x, y, m);
    if (beyond_xm) {
      z = y;
      zi = yi;
      y = m;
      yi = mi;
    } else {
      z = x;
      zi = xi;
      x = m;
      xi = mi;
    }
  }
}

ExtRat Developer::place_integer(const Int& n) {
  if (n > int_hi_) extend_right(n);
  if (n < int_lo_) extend_left(n);
  auto it = seg_.upper_bound(n);
  if (it != seg_.begin()) --it;
  const Rat h = it->second.first + Rat(n - it->first) * it->second.second;
  return ExtRat(h);
}

void Developer::extend_right(const Int& target) {
  auto last = std::prev(seg_.end());
  Int n0 = last->first;
  Rat h0 = last->second.first;
  Rat d = last->second.second;
  const Fan fan = Fan::at(ExtRat::infinity());
  // crossing E_m places m+1; supports between int_hi_ and target-1
  for (const Int& j : s_.support_on_fan(ExtRat::infinity(), int_hi_, target - 1)) {
    const Rat hj = h0 + Rat(j - n0) * d;
    d *= s_.mult_at(fan.edge(j));
    n0 = j + 1;
    h0 = hj + d;
    seg_[n0] = {h0, d};
  }
  int_hi_ = target;
}

void Developer::extend_left(const Int& target) {
  // crossing E_m places m-1 and divides the inter-integer gap by the
  // multiplier at E_m for every pair at or below m-1; the current lowest
  // segment therefore stops being valid below the support and is re-keyed
  // down to it
  auto supports = s_.support_on_fan(ExtRat::infinity(), target + 1, int_lo_);
  const Fan fan = Fan::at(ExtRat::infinity());
  for (auto it = supports.rbegin(); it != supports.rend(); ++it) {
    const Int& j = *it;
    const auto first = seg_.begin();
    const Rat hj = first->second.first + Rat(j - first->first) * first->second.second;
    const Rat d_old = first->second.second;
    if (first->first != j) {
      seg_.erase(first);
      seg_.emplace(j, std::make_pair(hj, d_old));
    }
    const Rat d_new = d_old / s_.mult_at(fan.edge(j));
    seg_[j - 1] = {hj - d_new, d_new};
  }
  int_lo_ = target;
}

ExtRat Developer::place(const ExtRat& v) {
  const auto it = memo_.find(v);
  if (it != memo_.end()) return it->second;
  if (inf_fixed_) {
    if (v.is_infinity()) return v;
    if (v.is_integer()) {
      const ExtRat img = place_integer(v.num);
      memo_.emplace(v, img);
      return img;
    }
    const Int n = floor_of(v);
    const ExtRat lo(n), hi(Int(n + 1));
    const ExtRat lo_img = place(lo), hi_img = place(hi);
    const ExtRat img = walk_down(v, lo, hi, ExtRat::infinity(), lo_img, hi_img, ExtRat::infinity());
    return img;
  }
  // generic walk from the normalization triangle
  const ExtRat &A = norm_.a, &B = norm_.b, &C = norm_.c;
  // find the edge of (A,B,C) whose far region holds v
  const auto beyond = [&](const ExtRat& x, const ExtRat& y, const ExtRat& z) {
    return in_open_arc(x, v, y) != in_open_arc(x, z, y);
  };
  if (beyond(A, B, C)) return walk_down(v, A, B, C, memo_[A], memo_[B], memo_[C]);
  if (beyond(B, C, A)) return walk_down(v, B, C, A, memo_[B], memo_[C], memo_[A]);
  if (beyond(C, A, B)) return walk_down(v, C, A, B, memo_[C], memo_[A], memo_[B]);
  throw std::logic_error("vertex in no region of the normalization triangle");
}

const ExtRat& VertexMap::image(const ExtRat& v) const {
  const auto it = pairs.find(v);
  if (it == pairs.end()) throw std::out_of_range("vertex not in map domain: " + v.str());
  return it->second;
}

void validate_vertex_map(const VertexMap& m) {
  if (m.pairs.size() < 3) return;
  std::vector<const ExtRat*> img;
  img.reserve(m.pairs.size());
  for (const auto& [v, h] : m.pairs) img.push_back(&h);  // domain already sorted
  const size_t n = img.size();
  for (size_t i = 0; i < n; ++i) {
    const ExtRat& a = *img[i];
    const ExtRat& b = *img[(i + 1) % n];
    const ExtRat& c = *img[(i + 2) % n];
    if (circular_orientation(a, b, c) <= 0) {
      throw DegenerateDevelopment("image order degenerates near " + b.str());
    }
  }
}

VertexMap develop(const ShearFunction& s, const Window& w, const FareyTriangle& norm) {
  Developer dev(s, norm);
  VertexMap out;
  out.normalization = dev.normalization();
  for (const ExtRat& v : window_vertices(w)) out.pairs.emplace(v, dev.place(v));
  validate_vertex_map(out);
  return out;
}

Rat mult_from_vertex_map(const VertexMap& h, const GeodesicEdge& e) {
  const EdgeWings wings = edge_wings(e);
  return quad_multiplier(h.image(e.lo), h.image(e.hi), h.image(wings.outer),
                         h.image(wings.inner));
}

double shear_from_vertex_map(const VertexMap& h, const GeodesicEdge& e) {
  const Rat m = mult_from_vertex_map(h, e);
  if (m <= 0) throw DegenerateDevelopment("vertex map not monotone around " + edge_str(e));
  return std::log(m.convert_to<double>());
}

VertexMap vertex_map_from_mobius(const Mobius& m, const Window& w) {
  VertexMap out;
  out.normalization = default_normalization();  // nominal; map need not fix it
  for (const ExtRat& v : window_vertices(w)) out.pairs.emplace(v, m.apply(v));
  validate_vertex_map(out);
  return out;
}

// ---------------------------------------------------------------------------
// float development

namespace {

struct PtF {
  double n, d;  // homogeneous, not both ~0
};

PtF to_ptf(const ExtRat& v) {
  if (v.is_infinity()) return {1.0, 0.0};
  return {v.to_double(), 1.0};
}

double detf(const PtF& u, const PtF& v) { return u.n * v.d - u.d * v.n; }

int orientf(const PtF& u, const PtF& v, const PtF& w) {
  const double s = detf(u, v) * detf(v, w) * detf(w, u);
  return s > 0 ? 1 : (s < 0 ? -1 : 0);
}

PtF place_across_f(const PtF& x, const PtF& y, const PtF& z, double mult) {
  const double lxz = detf(x, z), lyz = detf(y, z);
  PtF w{x.n * lyz + mult * y.n * lxz, x.d * lyz + mult * y.d * lxz};
  const double scale = std::max(std::abs(w.n), std::abs(w.d));
  if (!(scale > 0) || !std::isfinite(scale)) {
    throw DegenerateDevelopment("float placement degenerated");
  }
  w.n /= scale;
  w.d /= scale;
  return w;
}

struct FloatWalker {
  const ShearFunction& s;
  std::map<ExtRat, PtF> memo;

  PtF walk(const ExtRat& v, ExtRat x, ExtRat y, ExtRat z, PtF xi, PtF yi, PtF zi) {
    while (true) {
      const EdgeWings wings = edge_wings(make_edge(x, y));
      const ExtRat m = (wings.inner == z) ? wings.outer : wings.inner;
      PtF mi;
      const auto it = memo.find(m);
      if (it != memo.end()) {
        mi = it->second;
      } else {
        const double mult = std::exp(s.at(make_edge(x, y)).log);
        mi = in_open_arc(x, m, y) ? place_across_f(xi, yi, zi, mult)
                                  : place_across_f(yi, xi, zi, mult);
        const int want = circular_orientation(x, m, y);
        if (orientf(xi, mi, yi) != want) {
          throw DegenerateDevelopment("float placement broke the circular order near " + m.str());
        }
        memo.emplace(m, mi);
      }
      if (m == v) return mi;
      const bool beyond_xm = in_open_arc(x, v, m) != in_open_arc(x, y, m);
      if (beyond_xm) {
        z = y;
        zi = yi;
        y = m;
        yi = mi;
      } else {
        z = x;
        zi = xi;
        x = m;
        xi = mi;
      }
    }
  }
};

}  // namespace

double VertexMapF::image(const ExtRat& v) const {
  const auto it = pairs.find(v);
  if (it == pairs.end()) throw std::out_of_range("vertex not in map domain: " + v.str());
  return it->second;
}

VertexMapF develop_float(const ShearFunction& s, const Window& w, const FareyTriangle& norm) {
  const FareyTriangle t = make_farey_triangle(norm.a, norm.b, norm.c);
  FloatWalker walker{s, {}};
  walker.memo[t.a] = to_ptf(t.a);
  walker.memo[t.b] = to_ptf(t.b);
  walker.memo[t.c] = to_ptf(t.c);
  VertexMapF out;
  out.normalization = t;
  const auto beyond = [&](const ExtRat& v, const ExtRat& x, const ExtRat& y, const ExtRat& z) {
    return in_open_arc(x, v, y) != in_open_arc(x, z, y);
  };
  for (const ExtRat& v : window_vertices(w)) {
    PtF img;
    if (v == t.a || v == t.b || v == t.c) {
      img = walker.memo[v];
    } else if (beyond(v, t.a, t.b, t.c)) {
      img = walker.walk(v, t.a, t.b, t.c, walker.memo[t.a], walker.memo[t.b], walker.memo[t.c]);
    } else if (beyond(v, t.b, t.c, t.a)) {
      img = walker.walk(v, t.b, t.c, t.a, walker.memo[t.b], walker.memo[t.c], walker.memo[t.a]);
    } else {
      img = walker.walk(v, t.c, t.a, t.b, walker.memo[t.c], walker.memo[t.a], walker.memo[t.b]);
    }
    out.pairs.emplace(v, img.d == 0 ? HUGE_VAL : img.n / img.d);
  }
  return out;
}

double shear_from_vertex_map(const VertexMapF& h, const GeodesicEdge& e) {
  const EdgeWings wings = edge_wings(e);
  const auto pt = [&](const ExtRat& v) {
    const double x = h.image(v);
    return x == HUGE_VAL ? PtF{1.0, 0.0} : PtF{x, 1.0};
  };
  const PtF x = pt(e.lo), y = pt(e.hi), z = pt(wings.outer), w = pt(wings.inner);
  const double m = -(detf(x, w) * detf(y, z)) / (detf(y, w) * detf(x, z));
  if (!(m > 0)) throw DegenerateDevelopment("vertex map not monotone around " + edge_str(e));
  return std::log(m);
}

// ---------------------------------------------------------------------------
// streaming scan

namespace {

struct ScanNode {
  ExtRat x, y, z;     // placed triangle, crossing edge (x, y)
  ExtRat xi, yi, zi;  // images
};

}  // namespace

void scan_window_development(const ShearFunction& s, const Window& w, const FareyTriangle& norm,
                             const std::function<void(const ExtRat&, const ExtRat&)>& sink) {
  if (!norm.c.is_infinity()) {
    throw std::invalid_argument("streaming scan needs a normalization containing ∞");
  }
  Developer dev(s, norm);
  if (w.include_infinity) sink(ExtRat::infinity(), ExtRat::infinity());
  const Int N = w.max_num, D = w.max_den;
  for (Int n = -N; n <= N; ++n) sink(ExtRat(n), dev.place(ExtRat(n)));

  // vertices of denominator >= 2, one unit interval at a time
  std::vector<ScanNode> stack;
  for (Int n = -N - 1; n <= N; ++n) {
    const ExtRat lo(n), hi(Int(n + 1));
    if (D < 2) break;
    stack.clear();
    stack.push_back(ScanNode{lo, hi, ExtRat::infinity(), dev.place(lo), dev.place(hi),
                             ExtRat::infinity()});
    while (!stack.empty()) {
      ScanNode nd = std::move(stack.back());
      stack.pop_back();
      const ExtRat m = mediant(nd.x, nd.y);
      const ExtRat mi = (in_open_arc(nd.x, m, nd.y))
                            ? place_across(nd.xi, nd.yi, nd.zi, s.mult_at(make_edge(nd.x, nd.y)))
                            : place_across(nd.yi, nd.xi, nd.zi, s.mult_at(make_edge(nd.x, nd.y)));
      if (abs(m.num) <= N && m.den <= D) sink(m, mi);
      // push sub-regions that can still contain window vertices: inside the
      // interval (u, v) every vertex has den >= u.den + v.den and |value| at
      // least the smaller endpoint magnitude
      const auto maybe_push = [&](const ExtRat& u, const ExtRat& v, const ExtRat& opp,
                                  const ExtRat& ui, const ExtRat& vi, const ExtRat& oppi) {
        const Int dsum = u.den + v.den;
        if (dsum > D) return;
        // min |value| over the open interval (u and v finite, same sign or
        // spanning zero)
        const bool spans_zero = (u.num.sign() * v.num.sign()) < 0 || u.num == 0 || v.num == 0;
        if (!spans_zero) {
          const Int lhs = min(abs(u.num) * v.den, abs(v.num) * u.den);  // min|val| * (u.den*v.den)
          // prune if min|val| * dsum > N  <=>  lhs * dsum > N * u.den * v.den
          if (lhs * dsum > N * u.den * v.den) return;
        }
        stack.push_back(ScanNode{u, v, opp, ui, vi, oppi});
      };
      maybe_push(nd.x, m, nd.y, nd.xi, mi, nd.yi);
      maybe_push(m, nd.y, nd.x, mi, nd.yi, nd.xi);
    }
  }
}

}  // namespace farey
