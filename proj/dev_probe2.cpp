#include <cstdio>

#include "rupert/catalog.hpp"
#include "rupert/passage.hpp"

using namespace rupert;

int main() {
  // Which face normal of the raw truncated icosidodecahedron carries a prism
  // band? Try rotating each class of face normal to z.
  {
    Polyhedron raw;
    const double phi = rupert::detail::kPhi;
    for (Vec3 base : {Vec3{1 / phi, 1 / phi, 3 + phi}, Vec3{2 / phi, phi, 1 + 2 * phi},
                      Vec3{1 / phi, phi * phi, 3 * phi - 1}, Vec3{2 * phi - 1, 2, 2 + phi},
                      Vec3{phi, 3, 2 * phi}})
      for (Vec3 v : rupert::detail::even_signed_permutations(base)) raw.vertices.push_back(v);

    auto faces = face_planes(raw);
    int tried = 0;
    for (const auto& f : faces) {
      Polyhedron q = rupert::detail::rotated_to_z(raw, f.normal);
      auto r = find_prism_section(q);
      if (r.ok()) {
        std::printf("face size=%zu normal=(%.6f, %.6f, %.6f) offset=%.6f -> PRISM h=%.6f n=%zu\n",
                    f.coplanar.size(), f.normal.x, f.normal.y, f.normal.z, f.offset,
                    r->half_height, r->polygon.vertices.size());
        if (++tried > 6) break;
      }
    }
    if (tried == 0) std::printf("no face normal of tr-icosidodeca gives a prism band\n");

    // Also try vertex directions and edge-like directions via candidate_orientations.
    int hits = 0;
    auto cands = candidate_orientations(raw, 20000);
    std::printf("candidates: %zu\n", cands.size());
    for (size_t i = 0; i < cands.size(); ++i) {
      auto r = find_prism_section(transformed(raw, cands[i]));
      if (r.ok()) {
        const Vec3 axis = cands[i].rot.transposed() * Vec3{0, 0, 1};
        std::printf("cand %zu axis=(%.6f, %.6f, %.6f) -> PRISM h=%.6f n=%zu\n", i, axis.x, axis.y,
                    axis.z, r->half_height, r->polygon.vertices.size());
        if (++hits >= 4) break;
      }
    }
    if (hits == 0) std::printf("NO candidate orientation exposes a prism band\n");
  }

  // Margin landscape for the octahedron square section at small delta.
  {
    ConvexPolygon2 sq{{{1, 0}, {0, 1}, {-1, 0}, {0, -1}}};
    for (double delta : {1e-3, 1e-4}) {
      double best = -1, best_d = 0;
      int best_branch = 0;
      for (double d = 0.05; d < 1.55; d += 0.01) {
        for (int b = 0; b < 2; ++b) {
          const BaseVertex base = BaseVertex::at({1, 0, 0});
          const Point3 axis =
              f_curve_axis(base, delta, d, b ? FCurveBranch::Down : FCurveBranch::Up);
          const Rotation rot = Rotation::about(axis, delta);
          double margin = 1e100;
          for (const Point2& v : sq.vertices)
            margin = std::min(margin, contains_strict(sq, project(rotate(rot, {v.x, v.y, 0}))));
          if (margin > best) {
            best = margin;
            best_d = d;
            best_branch = b;
          }
        }
      }
      std::printf("square delta=%.0e: best margin=%.3e at d=%.2f branch=%d\n", delta, best,
                  best_d, best_branch);
    }
  }
  return 0;
}
