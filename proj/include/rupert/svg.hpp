#pragma once

// Deterministic SVG emission: shadow overlays and allowable-axis atlases.
// Output bytes depend only on the inputs (fixed decimal formatting, no
// timestamps), so identical runs diff clean.

#include <cstdio>
#include <sstream>
#include <string>

#include "rupert/passage.hpp"
#include "rupert/sphere.hpp"

namespace rupert {

namespace detail {

inline std::string fmt(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.6f", x == 0.0 ? 0.0 : x);  // avoid "-0.000000"
  return buf;
}

inline void path_for(std::ostream& out, const ConvexPolygon2& p, double scale, double ox,
                     double oy) {
  for (size_t i = 0; i < p.vertices.size(); ++i) {
    const Point2& v = p.vertices[i];
    out << (i == 0 ? "M" : " L") << detail::fmt(ox + scale * v.x) << ','
        << detail::fmt(oy - scale * v.y);
  }
  out << " Z";
}

}  // namespace detail

// Resting shadow as an outline with the rotated shadow filled on top.
inline std::string shadow_svg(const ConvexPolygon2& resting, const ConvexPolygon2& rotated) {
  double lo_x = 1e100, lo_y = 1e100, hi_x = -1e100, hi_y = -1e100;
  for (const ConvexPolygon2* poly : {&resting, &rotated})
    for (const Point2& v : poly->vertices) {
      lo_x = std::min(lo_x, v.x);
      hi_x = std::max(hi_x, v.x);
      lo_y = std::min(lo_y, v.y);
      hi_y = std::max(hi_y, v.y);
    }
  const double span = std::max(hi_x - lo_x, hi_y - lo_y);
  const double scale = 480.0 / span;
  const double ox = 256.0 - scale * (lo_x + hi_x) / 2.0;
  const double oy = 256.0 + scale * (lo_y + hi_y) / 2.0;

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"512\" height=\"512\" "
         "viewBox=\"0 0 512 512\">\n";
  out << "<path d=\"";
  detail::path_for(out, rotated, scale, ox, oy);
  out << "\" fill=\"#4477aa\" fill-opacity=\"0.55\" stroke=\"#224466\" stroke-width=\"1\"/>\n";
  out << "<path d=\"";
  detail::path_for(out, resting, scale, ox, oy);
  out << "\" fill=\"none\" stroke=\"#000000\" stroke-width=\"2\"/>\n";
  out << "</svg>\n";
  return out.str();
}

// Atlas of an allowable-axis grid: two orthographic discs, the near
// hemisphere (base vertex facing the viewer, meridian to the right) and the
// far hemisphere, with allowable cells shaded.
inline std::string allowable_svg(const AllowableGrid& grid) {
  const BaseVertex base = BaseVertex::at(Point3{grid.vertex.x, grid.vertex.y, 0.0});
  const Vec3 e1 = base.e_base();
  const Vec3 e2 = base.e_east();
  const double r = base.radius;
  const double disc = 220.0;  // pixel radius
  const double cx[2] = {256.0, 768.0};
  const double cy = 256.0;

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"1024\" height=\"512\" "
         "viewBox=\"0 0 1024 512\">\n";
  for (int side = 0; side < 2; ++side) {
    out << "<circle cx=\"" << detail::fmt(cx[side]) << "\" cy=\"" << detail::fmt(cy)
        << "\" r=\"" << detail::fmt(disc) << "\" fill=\"#f4f4f4\" stroke=\"#333333\" "
           "stroke-width=\"1.5\"/>\n";
  }
  const int n = grid.resolution;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (!grid.at(i, j)) continue;
      const double d0 = i * kPi / n, d1 = (i + 1) * kPi / n;
      const double b0 = j * 2.0 * kPi / n, b1 = (j + 1) * 2.0 * kPi / n;
      const Point3 center = from_coords(
          SphericalCoord{std::clamp((d0 + d1) / 2, kPoleGuard * 2, kPi - kPoleGuard * 2),
                         mod_2pi((b0 + b1) / 2)},
          base);
      const int side = dot(center, e1) >= 0.0 ? 0 : 1;
      const double mirror = side == 0 ? 1.0 : -1.0;
      out << "<polygon points=\"";
      const double ds[4] = {d0, d0, d1, d1};
      const double bs[4] = {b0, b1, b1, b0};
      for (int k = 0; k < 4; ++k) {
        const Point3 p = from_coords(
            SphericalCoord{std::clamp(ds[k], kPoleGuard * 2, kPi - kPoleGuard * 2), mod_2pi(bs[k])},
            base);
        const double sx = cx[side] + mirror * disc * dot(p, e2) / r;
        const double sy = cy - disc * p.z / r;
        out << (k ? " " : "") << detail::fmt(sx) << ',' << detail::fmt(sy);
      }
      out << "\" fill=\"#cc3344\" fill-opacity=\"0.8\"/>\n";
    }
  }
  // Base vertex marker on the near disc and pole markers on both.
  out << "<circle cx=\"" << detail::fmt(cx[0]) << "\" cy=\"" << detail::fmt(cy)
      << "\" r=\"4\" fill=\"#000000\"/>\n";
  for (int side = 0; side < 2; ++side) {
    out << "<circle cx=\"" << detail::fmt(cx[side]) << "\" cy=\"" << detail::fmt(cy - disc)
        << "\" r=\"2.5\" fill=\"#555555\"/>\n";
    out << "<line x1=\"" << detail::fmt(cx[side] - disc) << "\" y1=\"" << detail::fmt(cy)
        << "\" x2=\"" << detail::fmt(cx[side] + disc) << "\" y2=\"" << detail::fmt(cy)
        << "\" stroke=\"#999999\" stroke-width=\"0.75\"/>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace rupert
