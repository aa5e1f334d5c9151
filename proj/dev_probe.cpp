#include <chrono>
#include <cstdio>

#include "rupert/catalog.hpp"
#include "rupert/off_io.hpp"
#include "rupert/passage.hpp"

using namespace rupert;

static void probe(const std::string& name) {
  const auto t0 = std::chrono::steady_clock::now();
  Polyhedron q = build_solid(name);
  try {
    validate_polyhedron(q);
  } catch (const std::exception& e) {
    std::printf("%-32s INVALID: %s\n", name.c_str(), e.what());
    return;
  }
  const auto faces = face_planes(q);
  const auto secp = find_polygonal_section(q);
  const auto secr = find_prism_section(q);
  std::string psz = secp.ok() ? std::to_string(secp->polygon.vertices.size()) : secp.reason;
  std::string rsz = secr.ok() ? ("h=" + std::to_string(secr->half_height) + " n=" +
                                 std::to_string(secr->polygon.vertices.size()))
                              : secr.reason;
  const auto t1 = std::chrono::steady_clock::now();
  std::printf("%-32s V=%3zu F=%3zu  poly[%s]  prism[%s]  %.0fms\n", name.c_str(),
              q.vertices.size(), faces.size(), psz.c_str(), rsz.c_str(),
              std::chrono::duration<double, std::milli>(t1 - t0).count());
}

int main() {
  for (const char* n :
       {"tetrahedron", "cube", "octahedron", "dodecahedron", "icosahedron", "cuboctahedron",
        "icosidodecahedron", "truncated-cube", "truncated-octahedron", "rhombicuboctahedron",
        "truncated-cuboctahedron", "truncated-icosidodecahedron", "rhombicosidodecahedron",
        "elongated-square-gyrobicupola", "rhombic-dodecahedron", "rhombic-triacontahedron",
        "triakis-octahedron", "triakis-hexahedron", "deltoidal-icositetrahedron",
        "disdyakis-dodecahedron", "disdyakis-triacontahedron", "prism-6", "bipyramid-5"})
    probe(n);

  // Search margins for the locality criterion.
  for (const char* n : {"octahedron", "cube"}) {
    for (double d0 : {1e-2, 1e-3, 1e-4}) {
      SearchConfig cfg;
      cfg.delta0 = d0;
      cfg.max_retries = 0;
      const auto t0 = std::chrono::steady_clock::now();
      auto cert = std::string(n) == "cube" ? certify_theorem_B(build_solid(n), cfg, n)
                                           : certify_theorem_A(build_solid(n), cfg, n);
      const auto t1 = std::chrono::steady_clock::now();
      if (cert.ok())
        std::printf("%s d0=%.0e -> delta=%.3e margin=%.3e  (%.0fms)\n", n, d0, cert->delta,
                    cert->margin, std::chrono::duration<double, std::milli>(t1 - t0).count());
      else
        std::printf("%s d0=%.0e -> FAILED %s\n", n, d0, cert.reason.c_str());
    }
  }

  // Quadrilateral from reflecting a right triangle over its hypotenuse's
  // perpendicular bisector.
  {
    ConvexPolygon2 quad = hull2(std::vector<Point2>{{0, 0}, {2, 0}, {0, 1}, {1.2, -0.6}});
    auto dec = double_arch_decompose(quad);
    std::printf("fig10 quad: n=%zu dec=%s nontrivial=%d\n", quad.vertices.size(),
                dec ? "yes" : "no", dec ? int(dec->nontrivial) : -1);
  }
  return 0;
}
