#pragma once

// Core 2D/3D primitives: axis-angle rotations, orthographic shadows,
// planar convex hulls, signed containment margins, and support-plane
// enumeration for convex vertex sets.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <unordered_set>
#include <numbers>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace rupert {

// Tolerance for coplanarity, collinearity and boundary classification.
// Strictness tests compare against this, never against exact zero;
// double-precision hull noise at unit scale is around 1e-12..1e-10.
inline constexpr double kGeomEps = 1e-9;
inline constexpr double kPi = std::numbers::pi;

struct GeometryError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DegenerateInput : GeometryError {
  using GeometryError::GeometryError;
};
struct DegenerateLatitude : GeometryError {
  using GeometryError::GeometryError;
};
struct LatitudeMismatch : GeometryError {
  using GeometryError::GeometryError;
};
struct EmptySlice : GeometryError {
  using GeometryError::GeometryError;
};

// Success-or-reason-code result for detection routines whose failure is an
// expected outcome rather than a precondition violation.
template <typename T>
struct Result {
  std::optional<T> value;
  std::string reason;  // failure code when !value

  bool ok() const { return value.has_value(); }
  const T& operator*() const { return *value; }
  const T* operator->() const { return &*value; }

  static Result success(T v) { return Result{std::move(v), {}}; }
  static Result failure(std::string why) { return Result{std::nullopt, std::move(why)}; }
};

struct Vec2 {
  double x = 0.0;
  double y = 0.0;
};
using Point2 = Vec2;

inline Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
inline Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
inline Vec2 operator*(Vec2 a, double s) { return {a.x * s, a.y * s}; }
inline Vec2 operator*(double s, Vec2 a) { return a * s; }
inline Vec2 operator/(Vec2 a, double s) { return {a.x / s, a.y / s}; }
inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Vec2 a) { return std::sqrt(dot(a, a)); }

struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
};
using Point3 = Vec3;

inline Vec3 operator+(Vec3 a, Vec3 b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
inline Vec3 operator-(Vec3 a, Vec3 b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
inline Vec3 operator-(Vec3 a) { return {-a.x, -a.y, -a.z}; }
inline Vec3 operator*(Vec3 a, double s) { return {a.x * s, a.y * s, a.z * s}; }
inline Vec3 operator*(double s, Vec3 a) { return a * s; }
inline Vec3 operator/(Vec3 a, double s) { return {a.x / s, a.y / s, a.z / s}; }
inline double dot(Vec3 a, Vec3 b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline Vec3 cross(Vec3 a, Vec3 b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
inline double norm(Vec3 a) { return std::sqrt(dot(a, a)); }
inline double distance(Vec3 a, Vec3 b) { return norm(a - b); }

inline Vec3 normalized(Vec3 a) {
  const double n = norm(a);
  if (n < 1e-15) throw DegenerateInput("cannot normalize zero vector");
  return a / n;
}

inline bool finite(Vec3 a) {
  return std::isfinite(a.x) && std::isfinite(a.y) && std::isfinite(a.z);
}

// Wrap an angle into (-pi, pi].
inline double wrap_angle(double a) {
  a = std::remainder(a, 2.0 * kPi);
  if (a <= -kPi) a += 2.0 * kPi;
  return a;
}

// Wrap an angle into [0, 2pi).
inline double mod_2pi(double a) {
  a = std::fmod(a, 2.0 * kPi);
  if (a < 0) a += 2.0 * kPi;
  if (a >= 2.0 * kPi) a = 0.0;
  return a;
}

// Right-handed rotation about a unit axis through the origin.
struct Rotation {
  Vec3 axis{0, 0, 1};
  double angle = 0.0;  // radians, kept in (-pi, pi]

  static Rotation about(Vec3 a, double theta) {
    return Rotation{normalized(a), wrap_angle(theta)};
  }
  Rotation inverse() const { return Rotation{axis, wrap_angle(-angle)}; }
};

// Rodrigues evaluation.
inline Vec3 rotate(const Rotation& r, Vec3 p) {
  const Vec3 k = r.axis;
  const double c = std::cos(r.angle);
  const double s = std::sin(r.angle);
  return p * c + cross(k, p) * s + k * (dot(k, p) * (1.0 - c));
}

// Rotation with axis moved by an ambient rotation: rotating by gamma about
// frame(a) equals frame . (gamma about a) . frame^-1 as maps.
inline Rotation conjugate_axis(const Rotation& frame, Vec3 a, double gamma) {
  return Rotation::about(rotate(frame, a), gamma);
}

inline Point2 project(Point3 p) { return {p.x, p.y}; }

struct Mat3 {
  // Row-major.
  std::array<double, 9> m{1, 0, 0, 0, 1, 0, 0, 0, 1};

  static Mat3 identity() { return Mat3{}; }

  static Mat3 from_rotation(const Rotation& r) {
    const Vec3 k = r.axis;
    const double c = std::cos(r.angle), s = std::sin(r.angle), t = 1.0 - c;
    return Mat3{{t * k.x * k.x + c,       t * k.x * k.y - s * k.z, t * k.x * k.z + s * k.y,
                 t * k.x * k.y + s * k.z, t * k.y * k.y + c,       t * k.y * k.z - s * k.x,
                 t * k.x * k.z - s * k.y, t * k.y * k.z + s * k.x, t * k.z * k.z + c}};
  }

  // Rotation taking unit vector `from` onto unit vector `to`.
  static Mat3 align(Vec3 from, Vec3 to) {
    const Vec3 ax = cross(from, to);
    const double s = norm(ax);
    const double c = dot(from, to);
    if (s < 1e-12) {
      if (c > 0) return identity();
      // Antipodal: rotate pi about any direction orthogonal to `from`.
      Vec3 perp = std::fabs(from.x) < 0.9 ? cross(from, Vec3{1, 0, 0}) : cross(from, Vec3{0, 1, 0});
      return from_rotation(Rotation::about(perp, kPi));
    }
    return from_rotation(Rotation::about(ax, std::atan2(s, c)));
  }

  Vec3 operator*(Vec3 v) const {
    return {m[0] * v.x + m[1] * v.y + m[2] * v.z,
            m[3] * v.x + m[4] * v.y + m[5] * v.z,
            m[6] * v.x + m[7] * v.y + m[8] * v.z};
  }

  Mat3 operator*(const Mat3& o) const {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        double s = 0;
        for (int k = 0; k < 3; ++k) s += m[i * 3 + k] * o.m[k * 3 + j];
        r.m[i * 3 + j] = s;
      }
    return r;
  }

  Mat3 transposed() const {
    return Mat3{{m[0], m[3], m[6], m[1], m[4], m[7], m[2], m[5], m[8]}};
  }
};

// p -> rot * p + shift
struct RigidMotion3 {
  Mat3 rot;
  Vec3 shift;

  Vec3 operator()(Vec3 p) const { return rot * p + shift; }

  // Motion applying this first, then `next`.
  RigidMotion3 then(const RigidMotion3& next) const {
    return RigidMotion3{next.rot * rot, next.rot * shift + next.shift};
  }

  RigidMotion3 inverse() const {
    const Mat3 rt = rot.transposed();
    return RigidMotion3{rt, -(rt * shift)};
  }
};

// Counterclockwise strictly convex polygon in the plane.
struct ConvexPolygon2 {
  std::vector<Point2> vertices;
};

inline bool is_strictly_convex_ccw(std::span<const Point2> v, double eps = kGeomEps) {
  const size_t n = v.size();
  if (n < 3) return false;
  double area2 = 0;
  for (size_t i = 0; i < n; ++i) {
    const Point2 a = v[i], b = v[(i + 1) % n], c = v[(i + 2) % n];
    if (cross(b - a, c - b) <= eps) return false;
    area2 += cross(a, b);
  }
  return area2 > eps;
}

inline ConvexPolygon2 make_ccw_polygon(std::vector<Point2> pts) {
  if (!is_strictly_convex_ccw(pts))
    throw DegenerateInput("vertex list is not a strictly convex ccw polygon");
  return ConvexPolygon2{std::move(pts)};
}

// Monotone-chain hull with lexicographic tie-breaking; points whose turn is
// within eps of collinear are dropped. Output starts at the lexicographically
// smallest vertex and runs counterclockwise.
inline ConvexPolygon2 hull2(std::span<const Point2> points, double eps = kGeomEps) {
  std::vector<Point2> p(points.begin(), points.end());
  std::sort(p.begin(), p.end(), [](Point2 a, Point2 b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
  });
  p.erase(std::unique(p.begin(), p.end(),
                      [&](Point2 a, Point2 b) {
                        return std::fabs(a.x - b.x) <= eps && std::fabs(a.y - b.y) <= eps;
                      }),
          p.end());
  if (p.size() < 3) throw DegenerateInput("hull of fewer than three distinct points");

  auto turn = [](Point2 o, Point2 a, Point2 b) { return cross(a - o, b - o); };
  std::vector<Point2> h(2 * p.size());
  size_t k = 0;
  for (size_t i = 0; i < p.size(); ++i) {  // lower chain
    while (k >= 2 && turn(h[k - 2], h[k - 1], p[i]) <= eps) --k;
    h[k++] = p[i];
  }
  for (size_t i = p.size() - 1, lo = k + 1; i-- > 0;) {  // upper chain
    while (k >= lo && turn(h[k - 2], h[k - 1], p[i]) <= eps) --k;
    h[k++] = p[i];
  }
  h.resize(k - 1);
  if (h.size() < 3 || !is_strictly_convex_ccw(h, 0.0))
    throw DegenerateInput("degenerate hull (collinear input)");
  return ConvexPolygon2{std::move(h)};
}

// Minimum over edges of the signed inward distance from p to the edge line:
// positive strictly inside, zero on the boundary, negative outside.
inline double contains_strict(const ConvexPolygon2& poly, Point2 p) {
  const auto& v = poly.vertices;
  double best = std::numeric_limits<double>::infinity();
  for (size_t i = 0; i < v.size(); ++i) {
    const Point2 a = v[i], b = v[(i + 1) % v.size()];
    const Vec2 e = b - a;
    best = std::min(best, cross(e, p - a) / norm(e));
  }
  return best;
}

// Minimum over inner vertices of contains_strict(outer, v). Positive iff the
// inner polygon sits strictly inside the outer one (sufficient by convexity).
inline double containment_margin(const ConvexPolygon2& inner, const ConvexPolygon2& outer) {
  double best = std::numeric_limits<double>::infinity();
  for (const Point2& p : inner.vertices) best = std::min(best, contains_strict(outer, p));
  return best;
}

// Finite set of extreme vertices; the solid is their convex hull.
struct Polyhedron {
  std::vector<Point3> vertices;
};

inline Polyhedron transformed(const Polyhedron& q, const RigidMotion3& m) {
  Polyhedron out;
  out.vertices.reserve(q.vertices.size());
  for (const Point3& p : q.vertices) out.vertices.push_back(m(p));
  return out;
}

inline Polyhedron rotated(const Polyhedron& q, const Rotation& r) {
  Polyhedron out;
  out.vertices.reserve(q.vertices.size());
  for (const Point3& p : q.vertices) out.vertices.push_back(rotate(r, p));
  return out;
}

// Hull of the projected, rotated vertex set. Projection and hull commute on
// convex sets, so this is the shadow of the rotated solid.
inline ConvexPolygon2 shadow(const Polyhedron& q, const Rotation& r) {
  std::vector<Point2> pts;
  pts.reserve(q.vertices.size());
  for (const Point3& p : q.vertices) pts.push_back(project(rotate(r, p)));
  return hull2(pts);
}

// Plane through >= 3 vertices. `face` marks supporting planes (every vertex
// on one side); for those the normal points outward.
struct SupportPlane {
  Vec3 normal;                // unit
  double offset = 0.0;        // normal . x == offset on the plane
  std::vector<int> coplanar;  // sorted vertex ids on the plane
  bool face = false;
};

namespace detail {

struct KeyHash {
  template <size_t N>
  size_t operator()(const std::array<long long, N>& k) const {
    size_t h = 1469598103934665603ull;
    for (long long x : k) {
      h ^= static_cast<size_t>(x) + 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    }
    return h;
  }
};

inline std::array<long long, 4> plane_key(Vec3 n, double off, double merge_eps) {
  // Canonical sign: first component of magnitude above the merge tolerance
  // is made positive.
  double lead = n.x;
  if (std::fabs(lead) <= merge_eps) lead = n.y;
  if (std::fabs(lead) <= merge_eps) lead = n.z;
  if (lead < 0) {
    n = -n;
    off = -off;
  }
  auto q = [&](double x) { return llround(x / merge_eps); };
  return {q(n.x), q(n.y), q(n.z), q(off)};
}

}  // namespace detail

// Every maximal coplanar vertex subset of size >= 3, deduplicated, sorted by
// subset size (descending) then by member ids. Plane coefficients are bucketed
// at `merge_eps` after normalization.
inline std::vector<SupportPlane> coplanar_planes(const Polyhedron& q, double merge_eps = 1e-6) {
  const auto& v = q.vertices;
  const int n = static_cast<int>(v.size());
  std::unordered_set<std::array<long long, 4>, detail::KeyHash> seen_keys;
  std::map<std::vector<int>, SupportPlane> by_members;

  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const Vec3 e1 = v[j] - v[i];
      for (int k = j + 1; k < n; ++k) {
        Vec3 nrm = cross(e1, v[k] - v[i]);
        const double len = norm(nrm);
        if (len < 1e-12) continue;
        nrm = nrm / len;
        double off = dot(nrm, v[i]);
        const auto key = detail::plane_key(nrm, off, merge_eps);
        if (!seen_keys.insert(key).second) continue;

        SupportPlane pl;
        int above = 0, below = 0;
        for (int t = 0; t < n; ++t) {
          const double d = dot(nrm, v[t]) - off;
          if (std::fabs(d) <= merge_eps)
            pl.coplanar.push_back(t);
          else if (d > 0)
            ++above;
          else
            ++below;
        }
        if (pl.coplanar.size() < 3) continue;
        pl.face = (above == 0) || (below == 0);
        if (above > 0 && below == 0) {
          nrm = -nrm;
          off = -off;
        }
        pl.normal = nrm;
        pl.offset = off;
        by_members.emplace(pl.coplanar, std::move(pl));
      }
    }
  }

  std::vector<SupportPlane> out;
  out.reserve(by_members.size());
  for (auto& [ids, pl] : by_members) out.push_back(std::move(pl));
  std::sort(out.begin(), out.end(), [](const SupportPlane& a, const SupportPlane& b) {
    if (a.coplanar.size() != b.coplanar.size()) return a.coplanar.size() > b.coplanar.size();
    return a.coplanar < b.coplanar;
  });
  return out;
}

// Supporting planes only: the faces of the hull, normals outward.
inline std::vector<SupportPlane> face_planes(const Polyhedron& q, double merge_eps = 1e-6) {
  std::vector<SupportPlane> out = coplanar_planes(q, merge_eps);
  out.erase(std::remove_if(out.begin(), out.end(), [](const SupportPlane& p) { return !p.face; }),
            out.end());
  return out;
}

// A vertex is extreme iff its incident face normals span all of 3-space.
inline void validate_polyhedron(const Polyhedron& q, double merge_eps = 1e-6) {
  const auto& v = q.vertices;
  const int n = static_cast<int>(v.size());
  if (n < 4) throw DegenerateInput("polyhedron needs at least four vertices");
  for (const Point3& p : v)
    if (!finite(p)) throw DegenerateInput("non-finite vertex coordinate");
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (distance(v[i], v[j]) <= merge_eps) throw DegenerateInput("duplicate vertices");

  const std::vector<SupportPlane> faces = face_planes(q, merge_eps);
  for (const SupportPlane& f : faces)
    if (static_cast<int>(f.coplanar.size()) == n)
      throw DegenerateInput("all vertices coplanar");

  for (int i = 0; i < n; ++i) {
    std::vector<Vec3> incident;
    for (const SupportPlane& f : faces)
      if (std::fabs(dot(f.normal, v[i]) - f.offset) <= merge_eps) incident.push_back(f.normal);
    bool extreme = false;
    for (size_t a = 0; a < incident.size() && !extreme; ++a)
      for (size_t b = a + 1; b < incident.size() && !extreme; ++b)
        for (size_t c = b + 1; c < incident.size() && !extreme; ++c)
          if (std::fabs(dot(incident[a], cross(incident[b], incident[c]))) > 1e-9) extreme = true;
    if (!extreme) throw DegenerateInput("non-extreme vertex at index " + std::to_string(i));
  }
}

// Cyclic vertexwise equality of two convex polygons.
inline bool polygons_match(const ConvexPolygon2& a, const ConvexPolygon2& b, double tol) {
  const size_t n = a.vertices.size();
  if (b.vertices.size() != n) return false;
  for (size_t shift = 0; shift < n; ++shift) {
    bool all = true;
    for (size_t i = 0; i < n && all; ++i) {
      const Point2 d = a.vertices[i] - b.vertices[(i + shift) % n];
      if (std::fabs(d.x) > tol || std::fabs(d.y) > tol) all = false;
    }
    if (all) return true;
  }
  return false;
}

}  // namespace rupert
