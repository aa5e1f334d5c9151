#pragma once

// Canonical-coordinate builders for the survey solids. Solids certified via a
// polygonal section ship with that section in the z = 0 plane; solids
// certified via a prism section ship with the prism axis along z. Catalan
// solids are polar duals of their Archimedean partners, computed from face
// planes; dualization maps a vertical prism band to an equatorial vertex ring
// and vice versa, so the canonical frames carry over.

#include <cstdio>
#include <functional>

#include "rupert/geom.hpp"
#include "rupert/sections.hpp"

namespace rupert {

struct UnknownSolid : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct BadParameters : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace detail {

inline constexpr double kPhi = 1.6180339887498948482;  // golden ratio

inline void push_unique(std::vector<Vec3>& out, Vec3 v) {
  for (const Vec3& u : out)
    if (std::fabs(u.x - v.x) < 1e-9 && std::fabs(u.y - v.y) < 1e-9 && std::fabs(u.z - v.z) < 1e-9)
      return;
  out.push_back(v);
}

// All coordinate permutations of |base| with all sign choices.
inline std::vector<Vec3> signed_permutations(Vec3 base) {
  const double c[3] = {base.x, base.y, base.z};
  static constexpr int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                      {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  std::vector<Vec3> out;
  for (const auto& p : perms)
    for (int s = 0; s < 8; ++s)
      push_unique(out, Vec3{(s & 1 ? -1 : 1) * c[p[0]], (s & 2 ? -1 : 1) * c[p[1]],
                            (s & 4 ? -1 : 1) * c[p[2]]});
  return out;
}

// Cyclic coordinate permutations with all sign choices.
inline std::vector<Vec3> even_signed_permutations(Vec3 base) {
  const double c[3] = {base.x, base.y, base.z};
  static constexpr int perms[3][3] = {{0, 1, 2}, {2, 0, 1}, {1, 2, 0}};
  std::vector<Vec3> out;
  for (const auto& p : perms)
    for (int s = 0; s < 8; ++s)
      push_unique(out, Vec3{(s & 1 ? -1 : 1) * c[p[0]], (s & 2 ? -1 : 1) * c[p[1]],
                            (s & 4 ? -1 : 1) * c[p[2]]});
  return out;
}

inline Polyhedron rotated_to_z(Polyhedron q, Vec3 axis) {
  const Mat3 r = Mat3::align(normalized(axis), Vec3{0, 0, 1});
  for (Vec3& v : q.vertices) v = r * v;
  return q;
}

inline Polyhedron shifted(Polyhedron q, Vec3 t) {
  for (Vec3& v : q.vertices) v = v + t;
  return q;
}

}  // namespace detail

// Polar dual about the unit sphere: one vertex per face plane, at the plane's
// pole normal/offset. Requires the origin strictly inside.
inline Polyhedron polar_dual(const Polyhedron& q) {
  Polyhedron dual;
  for (const SupportPlane& f : face_planes(q)) {
    if (f.offset < kGeomEps) throw DegenerateInput("polar dual needs the origin inside");
    dual.vertices.push_back(f.normal / f.offset);
  }
  return dual;
}

inline Polyhedron build_prism(int n, double h = 1.0) {
  if (n < 3) throw BadParameters("prism needs n >= 3");
  if (!(h > 0)) throw BadParameters("prism needs positive height");
  Polyhedron q;
  for (int k = 0; k < n; ++k) {
    const double a = 2.0 * kPi * k / n;
    q.vertices.push_back({std::cos(a), std::sin(a), h});
    q.vertices.push_back({std::cos(a), std::sin(a), -h});
  }
  return q;
}

inline Polyhedron build_bipyramid(int n) {
  if (n < 3) throw BadParameters("bipyramid needs n >= 3");
  Polyhedron q;
  for (int k = 0; k < n; ++k) {
    const double a = 2.0 * kPi * k / n;
    q.vertices.push_back({std::cos(a), std::sin(a), 0.0});
  }
  q.vertices.push_back({0, 0, 1});
  q.vertices.push_back({0, 0, -1});
  return q;
}

inline Polyhedron build_solid(const std::string& name) {
  using detail::even_signed_permutations;
  using detail::kPhi;
  using detail::rotated_to_z;
  using detail::signed_permutations;
  const double phi = kPhi;
  const double sq2 = std::sqrt(2.0);

  if (name == "tetrahedron") {
    Polyhedron q{{{1, 1, 1}, {1, -1, -1}, {-1, 1, -1}, {-1, -1, 1}}};
    q = rotated_to_z(std::move(q), Vec3{1, 1, 1});
    return detail::shifted(std::move(q), Vec3{0, 0, 1.0 / std::sqrt(3.0)});
  }
  if (name == "cube") return Polyhedron{signed_permutations({1, 1, 1})};
  if (name == "octahedron") return Polyhedron{signed_permutations({1, 0, 0})};
  if (name == "dodecahedron") {
    Polyhedron q{signed_permutations({1, 1, 1})};
    for (Vec3 v : even_signed_permutations({0, 1.0 / phi, phi})) q.vertices.push_back(v);
    return q;
  }
  if (name == "icosahedron") return Polyhedron{even_signed_permutations({0, 1, phi})};

  if (name == "cuboctahedron")
    return rotated_to_z(Polyhedron{signed_permutations({1, 1, 0})}, Vec3{1, 1, 1});
  if (name == "icosidodecahedron") {
    Polyhedron q{even_signed_permutations({0, 0, phi})};
    for (Vec3 v : even_signed_permutations({0.5, phi / 2, phi * phi / 2})) q.vertices.push_back(v);
    return rotated_to_z(std::move(q), Vec3{-phi, 1, 0});
  }
  if (name == "truncated-cube") return Polyhedron{signed_permutations({sq2 - 1, 1, 1})};
  if (name == "truncated-octahedron")
    return rotated_to_z(Polyhedron{signed_permutations({0, 1, 2})}, Vec3{1, 1, 0});
  if (name == "rhombicuboctahedron")
    return Polyhedron{signed_permutations({1, 1, 1 + sq2})};
  if (name == "truncated-cuboctahedron")
    return Polyhedron{signed_permutations({1, 1 + sq2, 1 + 2 * sq2})};
  if (name == "truncated-icosidodecahedron") {
    // Standard coordinates already run the 12-face band (squares and
    // decagons) vertically around z.
    Polyhedron q;
    for (Vec3 base : {Vec3{1 / phi, 1 / phi, 3 + phi}, Vec3{2 / phi, phi, 1 + 2 * phi},
                      Vec3{1 / phi, phi * phi, 3 * phi - 1}, Vec3{2 * phi - 1, 2, 2 + phi},
                      Vec3{phi, 3, 2 * phi}})
      for (Vec3 v : even_signed_permutations(base)) q.vertices.push_back(v);
    return q;
  }
  if (name == "rhombicosidodecahedron") {
    Polyhedron q;
    for (Vec3 base : {Vec3{1, 1, phi * phi * phi}, Vec3{phi * phi, phi, 2 * phi},
                      Vec3{2 + phi, 0, phi * phi}})
      for (Vec3 v : even_signed_permutations(base)) q.vertices.push_back(v);
    return q;
  }
  if (name == "elongated-square-gyrobicupola") {
    // Octagonal band of the rhombicuboctahedron, lower cap square aligned
    // with the axes diagonals, upper cap square turned 45 degrees.
    Polyhedron q;
    for (double sx : {1.0, -1.0})
      for (double sy : {1.0, -1.0}) {
        for (double sz : {1.0, -1.0}) {
          q.vertices.push_back({sx, sy * (1 + sq2), sz});
          q.vertices.push_back({sx * (1 + sq2), sy, sz});
        }
        q.vertices.push_back({sx, sy, -(1 + sq2)});
        q.vertices.push_back({sx * sq2 * 0.5 + sy * sq2 * 0.5, -sx * sq2 * 0.5 + sy * sq2 * 0.5,
                              1 + sq2});
      }
    return q;
  }

  if (name == "rhombic-dodecahedron") return polar_dual(build_solid("cuboctahedron"));
  if (name == "rhombic-triacontahedron") return polar_dual(build_solid("icosidodecahedron"));
  if (name == "triakis-octahedron") return polar_dual(build_solid("truncated-cube"));
  if (name == "triakis-hexahedron") return polar_dual(build_solid("truncated-octahedron"));
  if (name == "deltoidal-icositetrahedron") return polar_dual(build_solid("rhombicuboctahedron"));
  if (name == "disdyakis-dodecahedron") return polar_dual(build_solid("truncated-cuboctahedron"));
  if (name == "disdyakis-triacontahedron")
    return polar_dual(build_solid("truncated-icosidodecahedron"));

  int n = 0;
  if (std::sscanf(name.c_str(), "prism-%d", &n) == 1) return build_prism(n);
  if (std::sscanf(name.c_str(), "bipyramid-%d", &n) == 1) return build_bipyramid(n);

  throw UnknownSolid("unknown solid: " + name);
}

enum class Expected { RupertViaA, ReverseViaB, NotCovered };

inline const char* expected_name(Expected e) {
  switch (e) {
    case Expected::RupertViaA: return "rupert-via-A";
    case Expected::ReverseViaB: return "reverse-via-B";
    default: return "not-covered";
  }
}

struct SolidSpec {
  std::string name;
  Expected expected = Expected::NotCovered;
};

// The survey roster. The elongated square gyrobicupola sits behind a flag.
inline std::vector<SolidSpec> survey_set(bool include_gyrobicupola = false) {
  std::vector<SolidSpec> s;
  for (const char* name : {"octahedron", "cuboctahedron", "icosidodecahedron",
                           "triakis-octahedron", "triakis-hexahedron",
                           "deltoidal-icositetrahedron", "disdyakis-dodecahedron",
                           "disdyakis-triacontahedron"})
    s.push_back({name, Expected::RupertViaA});
  for (int n = 4; n <= 10; ++n) s.push_back({"bipyramid-" + std::to_string(n), Expected::RupertViaA});

  for (const char* name : {"cube", "truncated-cube", "truncated-octahedron",
                           "rhombicuboctahedron", "truncated-cuboctahedron",
                           "truncated-icosidodecahedron", "rhombic-dodecahedron",
                           "rhombic-triacontahedron"})
    s.push_back({name, Expected::ReverseViaB});
  if (include_gyrobicupola)
    s.push_back({"elongated-square-gyrobicupola", Expected::ReverseViaB});
  for (int n = 4; n <= 10; ++n) s.push_back({"prism-" + std::to_string(n), Expected::ReverseViaB});

  for (const char* name : {"tetrahedron", "dodecahedron", "icosahedron",
                           "rhombicosidodecahedron"})
    s.push_back({name, Expected::NotCovered});
  s.push_back({"prism-3", Expected::NotCovered});
  s.push_back({"bipyramid-3", Expected::NotCovered});
  return s;
}

}  // namespace rupert
