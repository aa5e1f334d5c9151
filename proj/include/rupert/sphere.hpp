#pragma once

// Latitude/longitude coordinates on the sphere through an equatorial base
// vertex, the isoceles spherical-triangle functions t(d) and tau(d), the axis
// map J sending an axis to the rotated base vertex, its per-latitude inverse,
// and the curve of axes that move the base vertex along the chord line.

#include "rupert/geom.hpp"

namespace rupert {

// Latitudes closer than this to 0 or pi are rejected: longitude is
// ill-conditioned there, callers should use limits instead.
inline constexpr double kPoleGuard = 1e-7;

// A point v with v.z == 0 on the sphere of radius |v| about the origin.
// Local frame: e_base points at v, e_east is the meridian tangent (the
// equator direction counterclockwise away from v as seen from +z), and the
// frame closes with +z itself.
struct BaseVertex {
  Point3 v;
  double radius = 0.0;

  static BaseVertex at(Point3 p) {
    const double r = norm(p);
    if (r < kGeomEps) throw DegenerateInput("base vertex at the origin");
    if (std::fabs(p.z) > kGeomEps * std::max(1.0, r))
      throw DegenerateInput("base vertex must lie on the equator (z = 0)");
    return BaseVertex{{p.x, p.y, 0.0}, r};
  }

  Vec3 e_base() const { return v / radius; }
  Vec3 e_east() const { return cross(Vec3{0, 0, 1}, e_base()); }
};

// Latitude d = arc distance to the base vertex; longitude beta measured
// right-handed about the base vertex from the meridian.
struct SphericalCoord {
  double d = 0.0;     // in (0, pi)
  double beta = 0.0;  // in [0, 2pi)
};

// Third side of the spherical triangle with two sides d meeting at angle
// delta: cos t = cos^2 d + sin^2 d cos delta.
inline double t_of_d(double d, double delta) {
  const double cd = std::cos(d), sd = std::sin(d);
  const double ct = cd * cd + sd * sd * std::cos(delta);
  return std::acos(std::clamp(ct, -1.0, 1.0));
}

// Minus the base angle of the same isoceles triangle. From the four-parts
// relation the base angle alpha satisfies cot(alpha) = cos(d) tan(delta/2),
// so the result is in (-pi, 0) and continuous on (0, pi).
inline double tau_of_d(double d, double delta) {
  if (d <= 0.0 || d >= kPi) throw DegenerateLatitude("tau undefined at the poles");
  const double alpha = std::atan2(1.0, std::cos(d) * std::tan(delta / 2.0));
  return -alpha;
}

inline SphericalCoord to_coords(Point3 p, const BaseVertex& base) {
  const double r = norm(p);
  if (std::fabs(r - base.radius) > kGeomEps * std::max(1.0, base.radius))
    throw DegenerateInput("point is not on the base sphere");
  const Vec3 u = p / r;
  const Vec3 e1 = base.e_base();
  const Vec3 e2 = base.e_east();
  const double d = std::atan2(norm(cross(e1, u)), dot(e1, u));
  if (d < kPoleGuard || d > kPi - kPoleGuard)
    throw DegenerateLatitude("longitude undefined this close to the base vertex or its antipode");
  const double beta = std::atan2(u.z, dot(u, e2));
  return SphericalCoord{d, mod_2pi(beta)};
}

inline Point3 from_coords(SphericalCoord c, const BaseVertex& base) {
  if (c.d < kPoleGuard || c.d > kPi - kPoleGuard)
    throw DegenerateLatitude("coordinates undefined this close to the poles");
  const Vec3 e1 = base.e_base();
  const Vec3 e2 = base.e_east();
  const Vec3 e3{0, 0, 1};
  const Vec3 u =
      e1 * std::cos(c.d) + (e2 * std::cos(c.beta) + e3 * std::sin(c.beta)) * std::sin(c.d);
  return u * base.radius;
}

// Image of the base vertex under rotation by delta about `axis`. In
// coordinates this acts fiberwise: (d, beta) -> (t(d), tau(d) + beta mod 2pi).
inline Point3 j_map(Point3 axis, const BaseVertex& base, double delta) {
  return rotate(Rotation::about(axis, delta), base.v);
}

// Inverse of the fiber map on the latitude-d circle: given an image point at
// latitude t(d), recover the axis coordinates.
inline SphericalCoord fiber_inverse(SphericalCoord target, const BaseVertex& base, double delta,
                                    double d) {
  (void)base;
  if (std::fabs(target.d - t_of_d(d, delta)) > kGeomEps)
    throw LatitudeMismatch("target latitude is not t(d)");
  return SphericalCoord{d, mod_2pi(target.beta - tau_of_d(d, delta))};
}

enum class FCurveBranch { Up, Down };

// Axis at latitude d whose J-image lies on the vertical great circle over the
// x-axis; rotating the base vertex about it moves the vertex's projection
// along the chord. Points of that circle off the equator have longitude
// +-pi/2, so the axis longitude is +-pi/2 - tau(d).
inline Point3 f_curve_axis(const BaseVertex& base, double delta, double d, FCurveBranch branch) {
  if (std::fabs(base.v.y) > kGeomEps * std::max(1.0, base.radius))
    throw DegenerateInput("f-curve axes need the base vertex on the x-axis");
  const double image_lon = (branch == FCurveBranch::Up) ? kPi / 2.0 : -kPi / 2.0;
  return from_coords(SphericalCoord{d, mod_2pi(image_lon - tau_of_d(d, delta))}, base);
}

}  // namespace rupert
