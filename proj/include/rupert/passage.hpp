#pragma once

// Certification engine. A Rupert rotation shrinks the solid's shadow strictly
// into itself; a reverse Rupert rotation grows it strictly around itself.
// Candidate rotations come from axes on the curve that moves a chord endpoint
// of the section polygon inward along the chord; verification is a vertex
// containment margin on the full solid, with the rotation amount shrunk
// geometrically until the margin clears the tolerance.

#include <functional>

#include "rupert/geom.hpp"
#include "rupert/polygon.hpp"
#include "rupert/sections.hpp"
#include "rupert/sphere.hpp"

namespace rupert {

struct SearchConfig {
  double delta0 = 1e-2;  // initial rotation amount
  double shrink = 0.5;   // multiplier per retry
  int max_retries = 40;  // additional shrink steps after the first try
  // Axis latitudes to try on each pass: multiples of the current delta plus
  // fixed rungs. The small multiples track the vanishing-latitude limit; the
  // fixed rungs keep margins above the tolerance floor once delta is tiny
  // (margins scale like (delta sin d)^2, which k*delta latitudes cannot hold
  // above 1e-9 for delta <= 1e-3).
  std::vector<double> d_multipliers = {1, 2, 3, 4, 5, 6, 7, 8};
  std::vector<double> d_fixed = {0.1, 0.2, 0.3, 0.45, 0.6, 0.8, 1.0, 1.2, 1.4};
  double tolerance = kGeomEps;
  int orientation_cap = 10000;
};

// Containment margin of the rotated shadow inside the resting shadow;
// positive iff r is a Rupert rotation for q.
inline double verify_rupert(const Polyhedron& q, const Rotation& r) {
  return containment_margin(shadow(q, r), shadow(q, Rotation{}));
}

// Containment margin of the resting shadow inside the rotated one; positive
// iff s is a reverse Rupert rotation for q.
inline double verify_reverse(const Polyhedron& q, const Rotation& s) {
  return containment_margin(shadow(q, Rotation{}), shadow(q, s));
}

struct PolygonRotation {
  Rotation rotation;
  double delta = 0.0;
  double d = 0.0;     // axis latitude on the chord sphere
  bool up = true;     // branch: which half of the vertical circle the image takes
  double margin = 0;  // flat-polygon containment margin
};

namespace detail {

inline std::vector<double> latitude_ladder(const SearchConfig& cfg, double delta) {
  std::vector<double> ds;
  for (double k : cfg.d_multipliers) ds.push_back(k * delta);
  ds.insert(ds.end(), cfg.d_fixed.begin(), cfg.d_fixed.end());
  std::sort(ds.begin(), ds.end());
  std::vector<double> out;
  for (double d : ds) {
    if (d < 1e-6 || d > kPi - 1e-3) continue;
    if (!out.empty() && d - out.back() < 1e-12) continue;
    out.push_back(d);
  }
  return out;
}

// Chord endpoint on the positive x-axis of a chord-normalized polygon.
inline Point2 chord_endpoint(const ConvexPolygon2& p, double eps) {
  for (const Point2& v : p.vertices)
    if (std::fabs(v.y) <= eps && v.x > eps) return v;
  throw DegenerateInput("polygon is not in the chord-normalized frame");
}

}  // namespace detail

// Enumerate rotation candidates for a chord-normalized nontrivial double-arch
// polygon in deterministic order (delta descending through the shrink
// schedule, latitude ascending, up branch before down). Candidates passing
// the flat-polygon test are handed to `visit`; a true return stops the scan.
template <typename Visit>
bool scan_polygon_rotations(const ConvexPolygon2& p, const SearchConfig& cfg, double delta_cap,
                            Visit&& visit) {
  const Point2 end2 = detail::chord_endpoint(p, cfg.tolerance);
  const BaseVertex base = BaseVertex::at(Point3{end2.x, end2.y, 0.0});

  double delta = cfg.delta0;
  for (int retry = 0; retry <= cfg.max_retries; ++retry, delta *= cfg.shrink) {
    if (delta >= delta_cap || delta <= 0 || delta >= kPi) continue;
    for (double d : detail::latitude_ladder(cfg, delta)) {
      for (const FCurveBranch branch : {FCurveBranch::Up, FCurveBranch::Down}) {
        const Point3 axis = f_curve_axis(base, delta, d, branch);
        const Rotation rot = Rotation::about(axis, delta);
        double margin = std::numeric_limits<double>::infinity();
        for (const Point2& v : p.vertices) {
          const Point2 image = project(rotate(rot, Point3{v.x, v.y, 0.0}));
          margin = std::min(margin, contains_strict(p, image));
          if (margin <= cfg.tolerance) break;
        }
        if (margin <= cfg.tolerance) continue;
        PolygonRotation cand{rot, delta, d, branch == FCurveBranch::Up, margin};
        if (visit(cand)) return true;
      }
    }
  }
  return false;
}

// First rotation that carries every vertex of the flat polygon strictly
// inside it. The polygon must be chord-normalized and nontrivial double-arch.
inline std::optional<PolygonRotation> rupert_rotation_for_polygon(const ConvexPolygon2& p,
                                                                  const SearchConfig& cfg) {
  std::optional<PolygonRotation> found;
  scan_polygon_rotations(p, cfg, kPi, [&](const PolygonRotation& cand) {
    found = cand;
    return true;
  });
  return found;
}

enum class CertificateKind { Rupert, ReverseRupert };

struct Certificate {
  CertificateKind kind = CertificateKind::Rupert;
  Rotation rotation;         // the verified rotation
  double delta = 0.0;        // its angle magnitude
  double margin = 0.0;       // containment margin on the full solid
  RigidMotion3 orientation;  // applied to the input before the rotation
  std::string section_type;  // "polygonal" | "prism"
  ConvexPolygon2 section_polygon;  // section in the oriented frame
  double prism_half_height = 0.0;  // prism sections only
  DoubleArchDecomposition decomposition;
  std::string solid;  // optional label for reports
};

// Recompute the certified margin from the stored orientation and rotation
// alone. Deterministic: a sound certificate reproduces its margin exactly.
inline double reverify_certificate(const Polyhedron& original, const Certificate& cert) {
  const Polyhedron oriented = transformed(original, cert.orientation);
  return cert.kind == CertificateKind::Rupert ? verify_rupert(oriented, cert.rotation)
                                              : verify_reverse(oriented, cert.rotation);
}

namespace detail {

// Identity is tried before paying for the full orientation enumeration;
// catalog solids land there immediately.
template <typename Fn>
bool for_each_orientation(const Polyhedron& q, int cap, Fn&& fn) {
  if (fn(RigidMotion3{})) return true;
  const std::vector<RigidMotion3> cands = candidate_orientations(q, cap);
  for (size_t i = 1; i < cands.size(); ++i)
    if (fn(cands[i])) return true;
  return false;
}

enum class FailStage { NoSection = 0, TrivialDoubleArch = 1, SearchExhausted = 2 };

inline const char* stage_name(FailStage s) {
  switch (s) {
    case FailStage::TrivialDoubleArch: return "trivial-double-arch";
    case FailStage::SearchExhausted: return "search-exhausted";
    default: return "no-section";
  }
}

inline void raise_stage(FailStage& cur, FailStage seen) {
  if (static_cast<int>(seen) > static_cast<int>(cur)) cur = seen;
}

}  // namespace detail

// Route A: find an orientation exposing a polygonal section whose polygon is
// nontrivial double-arch, then shrink the rotation until the whole solid's
// shadow fits strictly inside itself. Small enough rotations keep the
// off-plane vertices' projections interior, so the section-level rotation
// certifies the full solid.
inline Result<Certificate> certify_theorem_A(const Polyhedron& q, const SearchConfig& cfg,
                                             const std::string& label = {}) {
  detail::FailStage stage = detail::FailStage::NoSection;
  Certificate cert;
  const bool done = detail::for_each_orientation(q, cfg.orientation_cap, [&](const RigidMotion3& orient) {
    const Polyhedron qo = transformed(q, orient);
    const Result<PolygonalSection> sec = find_polygonal_section(qo, cfg.tolerance);
    if (!sec.ok()) return false;
    const auto dec = double_arch_decompose(sec->polygon, cfg.tolerance);
    if (!dec || !dec->nontrivial) {
      detail::raise_stage(stage, detail::FailStage::TrivialDoubleArch);
      return false;
    }
    auto [poly, motion2] = normalize_to_chord(sec->polygon, *dec);
    const RigidMotion3 full = orient.then(motion2.lifted());
    const Polyhedron qn = transformed(q, full);
    detail::raise_stage(stage, detail::FailStage::SearchExhausted);

    return scan_polygon_rotations(poly, cfg, kPi, [&](const PolygonRotation& cand) {
      const double m = verify_rupert(qn, cand.rotation);
      if (m <= cfg.tolerance) return false;
      cert.kind = CertificateKind::Rupert;
      cert.rotation = cand.rotation;
      cert.delta = cand.delta;
      cert.margin = m;
      cert.orientation = full;
      cert.section_type = "polygonal";
      cert.section_polygon = poly;
      cert.decomposition = *dec;
      cert.solid = label;
      return true;
    });
  });
  if (done) return Result<Certificate>::success(std::move(cert));
  return Result<Certificate>::failure(detail::stage_name(stage));
}

// Route B: find an orientation exposing a prism section over a nontrivial
// double-arch polygon, search for a section-level Rupert rotation small
// enough to keep the rotated section inside the slab (delta below
// h / (2 max|vertex|), since a rotation by delta moves nothing farther than
// delta times its radius), and certify its inverse on the full solid.
inline Result<Certificate> certify_theorem_B(const Polyhedron& q, const SearchConfig& cfg,
                                             const std::string& label = {}) {
  detail::FailStage stage = detail::FailStage::NoSection;
  for (const RigidMotion3& orient : candidate_orientations(q, cfg.orientation_cap)) {
    const Polyhedron qo = transformed(q, orient);
    const Result<PrismSection> prism = find_prism_section(qo, cfg.tolerance);
    if (!prism.ok()) continue;
    const auto dec = double_arch_decompose(prism->polygon, cfg.tolerance);
    if (!dec || !dec->nontrivial) {
      detail::raise_stage(stage, detail::FailStage::TrivialDoubleArch);
      continue;
    }
    auto [poly, motion2] = normalize_to_chord(prism->polygon, *dec);
    const RigidMotion3 full = orient.then(motion2.lifted());
    const Polyhedron qn = transformed(q, full);
    detail::raise_stage(stage, detail::FailStage::SearchExhausted);

    double r_max = 0.0;
    for (const Point3& p : qn.vertices) r_max = std::max(r_max, norm(p));
    const double delta_cap = prism->half_height / (2.0 * r_max);

    Certificate cert;
    const bool found =
        scan_polygon_rotations(poly, cfg, delta_cap, [&](const PolygonRotation& cand) {
          const Rotation sigma = cand.rotation.inverse();
          const double m = verify_reverse(qn, sigma);
          if (m <= cfg.tolerance) return false;
          cert.kind = CertificateKind::ReverseRupert;
          cert.rotation = sigma;
          cert.delta = cand.delta;
          cert.margin = m;
          cert.orientation = full;
          cert.section_type = "prism";
          cert.section_polygon = poly;
          cert.prism_half_height = prism->half_height;
          cert.decomposition = *dec;
          cert.solid = label;
          return true;
        });
    if (found) return Result<Certificate>::success(std::move(cert));
  }
  return Result<Certificate>::failure(detail::stage_name(stage));
}

// An axis is allowable for a polygon vertex when rotating the vertex by delta
// about it lands the vertex's projection strictly inside the polygon.
inline bool axis_allowable(const ConvexPolygon2& p, int vertex_index, double delta, Vec3 axis) {
  const Point2 v2 = p.vertices.at(vertex_index);
  const Point3 v3{v2.x, v2.y, 0.0};
  const Point2 image = project(rotate(Rotation::about(axis, delta), v3));
  return contains_strict(p, image) > 0.0;
}

// Membership grid over the whole sphere of axes around a vertex, sampled at
// cell centers in (latitude, longitude) coordinates.
struct AllowableGrid {
  int resolution = 0;
  double delta = 0.0;
  Point2 vertex;
  double radius = 0.0;               // |vertex|
  std::vector<std::uint8_t> cells;   // row-major, row = latitude index

  bool at(int i, int j) const { return cells[static_cast<size_t>(i) * resolution + j] != 0; }
  double lat(int i) const { return (i + 0.5) * kPi / resolution; }
  double lon(int j) const { return (j + 0.5) * 2.0 * kPi / resolution; }
};

inline AllowableGrid allowable_set_sample(const ConvexPolygon2& p, int vertex_index, double delta,
                                          int resolution) {
  if (resolution < 16) throw std::invalid_argument("allowable grid resolution must be >= 16");
  if (!(delta > 0.0 && delta < kPi)) throw std::invalid_argument("delta must be in (0, pi)");
  const Point2 v2 = p.vertices.at(vertex_index);
  const BaseVertex base = BaseVertex::at(Point3{v2.x, v2.y, 0.0});

  AllowableGrid g;
  g.resolution = resolution;
  g.delta = delta;
  g.vertex = v2;
  g.radius = base.radius;
  g.cells.assign(static_cast<size_t>(resolution) * resolution, 0);
  for (int i = 0; i < resolution; ++i) {
    for (int j = 0; j < resolution; ++j) {
      const Point3 axis = from_coords(SphericalCoord{g.lat(i), g.lon(j)}, base);
      if (axis_allowable(p, vertex_index, delta, axis))
        g.cells[static_cast<size_t>(i) * resolution + j] = 1;
    }
  }
  return g;
}

}  // namespace rupert
