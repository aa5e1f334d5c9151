#pragma once

// Detection of polygonal sections (the solid meets the xy-plane in a polygon
// whose boundary cylinder touches nothing else) and prism sections (the slab
// |z| <= h cuts the solid in a vertical prism), plus a heuristic enumeration
// of candidate orientations for solids not already in a section-exposing
// frame.

#include "rupert/geom.hpp"

namespace rupert {

struct PolygonalSection {
  ConvexPolygon2 polygon;      // the flat polygon in the z = 0 plane
  std::vector<int> on_plane;   // vertex ids forming the polygon, in hull order
  std::vector<int> off_plane;  // vertex ids with z != 0
  RigidMotion3 frame;          // motion that brought the solid into this frame
};

struct PrismSection {
  ConvexPolygon2 polygon;
  double half_height = 0.0;
  RigidMotion3 frame;
};

// Slice of the solid by the plane z = z0: hull of the plane's intersections
// with all vertex-pair segments (the polytope's edges are among them) plus any
// vertices on the plane itself.
inline ConvexPolygon2 cross_section(const Polyhedron& q, double z0, double eps = kGeomEps) {
  const auto& v = q.vertices;
  const int n = static_cast<int>(v.size());
  std::vector<Point2> pts;
  for (int i = 0; i < n; ++i)
    if (std::fabs(v[i].z - z0) <= eps) pts.push_back({v[i].x, v[i].y});
  for (int i = 0; i < n; ++i) {
    const double zi = v[i].z - z0;
    if (zi <= eps && zi >= -eps) continue;
    for (int j = i + 1; j < n; ++j) {
      const double zj = v[j].z - z0;
      if (zj <= eps && zj >= -eps) continue;
      if ((zi > 0) == (zj > 0)) continue;
      const double t = zi / (zi - zj);
      pts.push_back({v[i].x + t * (v[j].x - v[i].x), v[i].y + t * (v[j].y - v[i].y)});
    }
  }
  if (pts.size() < 3) throw EmptySlice("plane does not cut the interior");
  try {
    return hull2(pts, eps);
  } catch (const DegenerateInput&) {
    throw EmptySlice("slice collapses to a segment");
  }
}

// Vertices with |z| < eps must form a strictly convex polygon using all of
// them, and every other vertex must project strictly inside it (that is how
// the boundary-cylinder condition reads on the vertices of a convex solid).
inline Result<PolygonalSection> find_polygonal_section(const Polyhedron& q,
                                                       double eps = kGeomEps) {
  const auto& v = q.vertices;
  const int n = static_cast<int>(v.size());
  std::vector<int> planar;
  for (int i = 0; i < n; ++i)
    if (std::fabs(v[i].z) < eps) planar.push_back(i);
  if (planar.size() < 3) return Result<PolygonalSection>::failure("too-few-planar-vertices");

  std::vector<Point2> flat;
  flat.reserve(planar.size());
  for (int id : planar) flat.push_back({v[id].x, v[id].y});
  ConvexPolygon2 poly;
  try {
    poly = hull2(flat, eps);
  } catch (const DegenerateInput&) {
    return Result<PolygonalSection>::failure("planar-vertices-not-hull");
  }
  if (poly.vertices.size() != planar.size())
    return Result<PolygonalSection>::failure("planar-vertices-not-hull");

  // Recover vertex ids in hull order.
  std::vector<int> on_plane;
  on_plane.reserve(planar.size());
  for (const Point2& hp : poly.vertices) {
    int best = -1;
    double best_d = 1e100;
    for (size_t k = 0; k < planar.size(); ++k) {
      const double d = norm(hp - flat[k]);
      if (d < best_d) {
        best_d = d;
        best = planar[k];
      }
    }
    on_plane.push_back(best);
  }

  PolygonalSection sec;
  sec.polygon = std::move(poly);
  sec.on_plane = std::move(on_plane);
  for (int i = 0; i < n; ++i) {
    if (std::fabs(v[i].z) < eps) continue;
    if (contains_strict(sec.polygon, {v[i].x, v[i].y}) <= eps)
      return Result<PolygonalSection>::failure("off-plane-vertex-outside");
    sec.off_plane.push_back(i);
  }
  return Result<PolygonalSection>::success(std::move(sec));
}

// The half-height is the smallest |z| over off-plane vertices; the slab is a
// prism iff the slices just inside +-h match the central slice vertexwise and
// no vertex projects outside the central polygon.
inline Result<PrismSection> find_prism_section(const Polyhedron& q, double eps = kGeomEps) {
  const auto& v = q.vertices;
  double h = std::numeric_limits<double>::infinity();
  for (const Point3& p : v)
    if (std::fabs(p.z) > eps) h = std::min(h, std::fabs(p.z));
  if (!std::isfinite(h)) return Result<PrismSection>::failure("no-vertices-off-plane");

  ConvexPolygon2 mid;
  try {
    mid = cross_section(q, 0.0, eps);
  } catch (const EmptySlice&) {
    return Result<PrismSection>::failure("empty-slice");
  }
  for (const Point3& p : v)
    if (contains_strict(mid, {p.x, p.y}) < -eps)
      return Result<PrismSection>::failure("vertex-outside-band-polygon");

  // Slice just inside the first vertex level to avoid grazing a vertex.
  const double zt = (1.0 - 1e-6) * h;
  for (const double z0 : {zt, -zt}) {
    try {
      if (!polygons_match(mid, cross_section(q, z0, eps), 1e2 * eps))
        return Result<PrismSection>::failure("cross-sections-differ");
    } catch (const EmptySlice&) {
      return Result<PrismSection>::failure("cross-sections-differ");
    }
  }

  PrismSection sec;
  sec.polygon = std::move(mid);
  sec.half_height = h;
  return Result<PrismSection>::success(std::move(sec));
}

// Orientation candidates for an arbitrarily posed solid: identity first, then
// each maximal coplanar vertex subset brought onto z = 0 (largest subsets
// first), then each vertex direction and face normal aligned with the z-axis.
// This is a heuristic convenience, not a completeness claim; catalog solids
// ship in frames where the identity already exposes their section.
inline std::vector<RigidMotion3> candidate_orientations(const Polyhedron& q, int cap = 10000) {
  std::vector<RigidMotion3> out;
  std::unordered_set<std::array<long long, 12>, detail::KeyHash> seen;
  auto push = [&](const RigidMotion3& m) {
    if (static_cast<int>(out.size()) >= cap) return;
    std::array<long long, 12> key{};
    for (int i = 0; i < 9; ++i) key[i] = llround(m.rot.m[i] / 1e-6);
    key[9] = llround(m.shift.x / 1e-6);
    key[10] = llround(m.shift.y / 1e-6);
    key[11] = llround(m.shift.z / 1e-6);
    if (seen.insert(key).second) out.push_back(m);
  };

  push(RigidMotion3{});

  const std::vector<SupportPlane> planes = coplanar_planes(q);
  for (const SupportPlane& pl : planes) {
    RigidMotion3 m;
    m.rot = Mat3::align(pl.normal, Vec3{0, 0, 1});
    m.shift = Vec3{0, 0, -pl.offset};
    push(m);
  }

  Vec3 centroid{};
  for (const Point3& p : q.vertices) centroid = centroid + p;
  centroid = centroid / static_cast<double>(q.vertices.size());
  auto push_axis = [&](Vec3 dir) {
    const double len = norm(dir);
    if (len < kGeomEps) return;
    Vec3 u = dir / len;
    // One representative per axis line.
    if (u.x < -kGeomEps || (std::fabs(u.x) <= kGeomEps &&
                            (u.y < -kGeomEps || (std::fabs(u.y) <= kGeomEps && u.z < 0))))
      u = -u;
    RigidMotion3 m;
    m.rot = Mat3::align(u, Vec3{0, 0, 1});
    m.shift = Vec3{0, 0, -(m.rot * centroid).z};
    push(m);
  };
  for (const Point3& p : q.vertices) push_axis(p - centroid);
  for (const SupportPlane& pl : planes)
    if (pl.face) push_axis(pl.normal);

  return out;
}

}  // namespace rupert
