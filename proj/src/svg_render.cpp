#include "farey/svg_render.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace farey {

namespace {

struct V2 {
  double x = 0, y = 0;
};

// Cayley transform of a boundary point of the upper half-plane onto the unit
// circle: x -> (x - i)/(x + i), ∞ -> 1.
V2 boundary_to_disk(const ExtRat& v) {
  if (v.is_infinity()) return {1.0, 0.0};
  const double x = v.to_double();
  const double d = x * x + 1.0;
  return {(x * x - 1.0) / d, -2.0 * x / d};
}

// interior point z = x + iy of the half-plane
V2 interior_to_disk(double x, double y) {
  const double dn = x * x + (y + 1.0) * (y + 1.0);
  return {(x * x + y * y - 1.0) / dn, -2.0 * x / dn};
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", v + 0.0);  // normalize -0
  return buf;
}

// circle through three points (doubles); returns false when collinear
bool circumcircle(const V2& a, const V2& b, const V2& c, V2& center, double& r) {
  const double d = 2.0 * (a.x * (b.y - c.y) + b.x * (c.y - a.y) + c.x * (a.y - b.y));
  if (std::abs(d) < 1e-12) return false;
  const double a2 = a.x * a.x + a.y * a.y;
  const double b2 = b.x * b.x + b.y * b.y;
  const double c2 = c.x * c.x + c.y * c.y;
  center.x = (a2 * (b.y - c.y) + b2 * (c.y - a.y) + c2 * (a.y - b.y)) / d;
  center.y = (a2 * (c.x - b.x) + b2 * (a.x - c.x) + c2 * (b.x - a.x)) / d;
  r = std::hypot(a.x - center.x, a.y - center.y);
  return true;
}

}  // namespace

std::string render_svg(const WindowTriangulation& t, const std::optional<Decoration>& dec,
                       const RenderOptions& opt) {
  const double half = opt.size_px / 2.0;
  const double scale = half * 0.96;
  const auto px = [&](const V2& p) {
    return V2{half + scale * p.x, half - scale * p.y};
  };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << opt.size_px << "\" height=\""
      << opt.size_px << "\" viewBox=\"0 0 " << opt.size_px << " " << opt.size_px << "\">\n";
  svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg << "<circle cx=\"" << fmt(half) << "\" cy=\"" << fmt(half) << "\" r=\"" << fmt(scale)
      << "\" fill=\"none\" stroke=\"black\" stroke-width=\"1.5\"/>\n";

  svg << "<g fill=\"none\" stroke=\"#28507a\" stroke-width=\"0.8\">\n";
  for (const auto& e : t.edges()) {
    const V2 p = boundary_to_disk(e.lo), q = boundary_to_disk(e.hi);
    const V2 P = px(p), Q = px(q);
    // geodesic: circle orthogonal to the unit circle, i.e. center c with
    // <p, c> = <q, c> = 1; diameter when p, q are antipodal
    const double det = p.x * q.y - p.y * q.x;
    if (std::abs(det) < 1e-9) {
      svg << "<path d=\"M " << fmt(P.x) << " " << fmt(P.y) << " L " << fmt(Q.x) << " " << fmt(Q.y)
          << "\"/>\n";
      continue;
    }
    const V2 c{(q.y - p.y) / det, (p.x - q.x) / det};
    const double r = std::sqrt(c.x * c.x + c.y * c.y - 1.0) * scale;
    // the arc inside the disk is the one passing nearest the origin; pick the
    // sweep so the midpoint lands there
    const double a0 = std::atan2(p.y - c.y, p.x - c.x);
    const double a1 = std::atan2(q.y - c.y, q.x - c.x);
    double ccw = a1 - a0;
    while (ccw < 0) ccw += 2 * M_PI;
    const double cn = std::hypot(c.x, c.y);
    const V2 mid{c.x * (1.0 - std::sqrt(c.x * c.x + c.y * c.y - 1.0) / cn) / 1.0,
                 c.y * (1.0 - std::sqrt(c.x * c.x + c.y * c.y - 1.0) / cn) / 1.0};
    double am = std::atan2(mid.y - c.y, mid.x - c.x) - a0;
    while (am < 0) am += 2 * M_PI;
    const bool go_ccw = am < ccw;
    const double span = go_ccw ? ccw : 2 * M_PI - ccw;
    const int large = span > M_PI ? 1 : 0;
    // y is flipped on screen, so mathematical ccw renders as sweep 0
    const int sweep = go_ccw ? 0 : 1;
    svg << "<path d=\"M " << fmt(P.x) << " " << fmt(P.y) << " A " << fmt(r) << " " << fmt(r)
        << " 0 " << large << " " << sweep << " " << fmt(Q.x) << " " << fmt(Q.y) << "\"/>\n";
  }
  svg << "</g>\n";

  if (dec) {
    svg << "<g fill=\"none\" stroke=\"#b03030\" stroke-width=\"0.8\">\n";
    for (const auto& [v, h] : dec->at) {
      // three sample points of the horocycle in the half-plane
      V2 s[3];
      const double size = h.size.convert_to<double>();
      if (v.is_infinity()) {
        s[0] = interior_to_disk(-1.0, size);
        s[1] = interior_to_disk(0.0, size);
        s[2] = interior_to_disk(1.0, size);
      } else {
        const double x = v.to_double(), rr = size / 2.0;
        s[0] = interior_to_disk(x + rr, rr);
        s[1] = interior_to_disk(x, size);
        s[2] = interior_to_disk(x - rr, rr);
      }
      V2 c;
      double r;
      if (!circumcircle(s[0], s[1], s[2], c, r)) continue;
      const V2 C = px(c);
      svg << "<circle cx=\"" << fmt(C.x) << "\" cy=\"" << fmt(C.y) << "\" r=\"" << fmt(r * scale)
          << "\"/>\n";
    }
    svg << "</g>\n";
  }

  if (opt.draw_vertices) {
    svg << "<g fill=\"#222222\">\n";
    for (const ExtRat& v : window_vertices(t.window())) {
      if (!v.is_infinity() && v.den > opt.vertex_den_cap) continue;
      const V2 P = px(boundary_to_disk(v));
      svg << "<circle cx=\"" << fmt(P.x) << "\" cy=\"" << fmt(P.y) << "\" r=\"2\"/>\n";
    }
    svg << "</g>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace farey
