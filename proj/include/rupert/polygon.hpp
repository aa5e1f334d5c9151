#pragma once

// Double-arch analysis of convex polygons: find a chord splitting the polygon
// into two arches whose interior vertices sit strictly between the chord's
// endpoint perpendiculars, and normalize into the chord-on-x-axis frame.

#include "rupert/geom.hpp"

namespace rupert {

struct DoubleArchDecomposition {
  int chord_a = 0;         // vertex id of the -x chord endpoint after normalization
  int chord_b = 0;         // vertex id of the +x endpoint
  std::vector<int> upper;  // strictly left of chord_a -> chord_b
  std::vector<int> lower;  // strictly right
  bool nontrivial = false;
};

// Chord search: longest vertex pair first, then all pairs by decreasing
// length with smallest-index tie-breaking. A pair is valid when every other
// vertex projects strictly between the endpoints along the chord and clears
// the chord line by more than eps. Returns the first nontrivial decomposition
// if one exists, otherwise the first trivial one, otherwise nothing.
inline std::optional<DoubleArchDecomposition> double_arch_decompose(const ConvexPolygon2& p,
                                                                    double eps = kGeomEps) {
  const auto& v = p.vertices;
  const int n = static_cast<int>(v.size());

  struct Pair {
    double len2;
    int i, j;
  };
  std::vector<Pair> pairs;
  pairs.reserve(n * (n - 1) / 2);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pairs.push_back({dot(v[j] - v[i], v[j] - v[i]), i, j});
  std::sort(pairs.begin(), pairs.end(), [](const Pair& a, const Pair& b) {
    if (a.len2 != b.len2) return a.len2 > b.len2;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  });

  std::optional<DoubleArchDecomposition> trivial_fallback;
  for (const Pair& c : pairs) {
    const Vec2 u = (v[c.j] - v[c.i]) / std::sqrt(c.len2);
    const double len = std::sqrt(c.len2);
    DoubleArchDecomposition dec;
    dec.chord_a = c.i;
    dec.chord_b = c.j;
    bool valid = true;
    for (int k = 0; k < n && valid; ++k) {
      if (k == c.i || k == c.j) continue;
      const Vec2 w = v[k] - v[c.i];
      const double along = dot(w, u);
      const double off = cross(u, w);
      if (along <= eps || along >= len - eps || std::fabs(off) <= eps) {
        valid = false;
      } else if (off > 0) {
        dec.upper.push_back(k);
      } else {
        dec.lower.push_back(k);
      }
    }
    if (!valid) continue;
    dec.nontrivial = !dec.upper.empty() && !dec.lower.empty();
    if (dec.nontrivial) return dec;
    if (!trivial_fallback) trivial_fallback = dec;
  }
  return trivial_fallback;
}

// Planar rigid motion p -> R p + shift with R a pure rotation.
struct RigidMotion2 {
  double c = 1.0;  // cos of the rotation
  double s = 0.0;  // sin
  Vec2 shift;

  Vec2 operator()(Vec2 p) const { return {c * p.x - s * p.y + shift.x, s * p.x + c * p.y + shift.y}; }

  // The same motion acting on 3-space: rotation about z plus an xy shift.
  RigidMotion3 lifted() const {
    RigidMotion3 m;
    m.rot = Mat3{{c, -s, 0, s, c, 0, 0, 0, 1}};
    m.shift = Vec3{shift.x, shift.y, 0.0};
    return m;
  }
};

// Move the chord onto the x-axis with the origin at its midpoint; chord
// endpoints land at (-L/2, 0) and (+L/2, 0) and upper-arch vertices get y > 0.
inline std::pair<ConvexPolygon2, RigidMotion2> normalize_to_chord(
    const ConvexPolygon2& p, const DoubleArchDecomposition& dec) {
  const Point2 a = p.vertices[dec.chord_a];
  const Point2 b = p.vertices[dec.chord_b];
  const double len = norm(b - a);
  if (len < kGeomEps) throw DegenerateInput("zero-length chord");
  const Vec2 u = (b - a) / len;

  RigidMotion2 m;
  m.c = u.x;
  m.s = -u.y;
  const Point2 mid = (a + b) * 0.5;
  m.shift = Vec2{-(m.c * mid.x - m.s * mid.y), -(m.s * mid.x + m.c * mid.y)};

  ConvexPolygon2 out;
  out.vertices.reserve(p.vertices.size());
  for (const Point2& q : p.vertices) out.vertices.push_back(m(q));
  return {std::move(out), m};
}

inline ConvexPolygon2 regular_polygon(int n, double circumradius) {
  if (n < 3) throw DegenerateInput("regular polygon needs n >= 3");
  if (!(circumradius > 0)) throw DegenerateInput("circumradius must be positive");
  ConvexPolygon2 p;
  p.vertices.reserve(n);
  for (int k = 0; k < n; ++k) {
    const double a = 2.0 * kPi * k / n;
    p.vertices.push_back({circumradius * std::cos(a), circumradius * std::sin(a)});
  }
  return p;
}

}  // namespace rupert
