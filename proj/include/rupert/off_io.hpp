#pragma once

// ASCII OFF mesh reading and writing. Faces are carried for validation and
// dual computation only; the certification pipeline works on vertices.

#include <istream>
#include <ostream>
#include <sstream>

#include "rupert/geom.hpp"

namespace rupert {

struct OffParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct OffMesh {
  std::vector<Point3> vertices;
  std::vector<std::vector<int>> faces;
};

namespace detail {

// Next non-empty line with comments stripped.
inline bool next_content_line(std::istream& in, std::string& line) {
  while (std::getline(in, line)) {
    const size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r\n") != std::string::npos) return true;
  }
  return false;
}

}  // namespace detail

inline OffMesh read_off(std::istream& in) {
  std::string line;
  if (!detail::next_content_line(in, line)) throw OffParseError("empty OFF stream");
  {
    std::istringstream hs(line);
    std::string magic;
    hs >> magic;
    if (magic != "OFF") throw OffParseError("missing OFF header");
  }
  if (!detail::next_content_line(in, line)) throw OffParseError("missing counts line");
  size_t nv = 0, nf = 0, ne = 0;
  {
    std::istringstream cs(line);
    if (!(cs >> nv >> nf >> ne)) throw OffParseError("malformed counts line");
  }

  OffMesh mesh;
  mesh.vertices.reserve(nv);
  for (size_t i = 0; i < nv; ++i) {
    if (!detail::next_content_line(in, line)) throw OffParseError("truncated vertex list");
    std::istringstream vs(line);
    Point3 p;
    if (!(vs >> p.x >> p.y >> p.z)) throw OffParseError("malformed vertex line");
    if (!finite(p)) throw OffParseError("non-finite vertex");
    mesh.vertices.push_back(p);
  }
  for (size_t i = 0; i < nf; ++i) {
    if (!detail::next_content_line(in, line)) throw OffParseError("truncated face list");
    std::istringstream fs(line);
    int k = 0;
    if (!(fs >> k) || k < 3) throw OffParseError("malformed face line");
    std::vector<int> face(k);
    for (int& id : face) {
      if (!(fs >> id) || id < 0 || id >= static_cast<int>(nv))
        throw OffParseError("face index out of range");
    }
    mesh.faces.push_back(std::move(face));
  }
  return mesh;
}

inline void write_off(std::ostream& out, const OffMesh& mesh) {
  size_t edges2 = 0;
  for (const auto& f : mesh.faces) edges2 += f.size();
  out << "OFF\n" << mesh.vertices.size() << ' ' << mesh.faces.size() << ' ' << edges2 / 2 << '\n';
  char buf[96];
  for (const Point3& p : mesh.vertices) {
    std::snprintf(buf, sizeof buf, "%.17g %.17g %.17g\n", p.x, p.y, p.z);
    out << buf;
  }
  for (const auto& f : mesh.faces) {
    out << f.size();
    for (int id : f) out << ' ' << id;
    out << '\n';
  }
}

// Faces recovered from the supporting planes, each ring ordered
// counterclockwise as seen from outside.
inline OffMesh off_from_polyhedron(const Polyhedron& q) {
  OffMesh mesh;
  mesh.vertices = q.vertices;
  for (const SupportPlane& f : face_planes(q)) {
    Vec3 centroid{};
    for (int id : f.coplanar) centroid = centroid + q.vertices[id];
    centroid = centroid / static_cast<double>(f.coplanar.size());
    const Vec3 u = normalized(std::fabs(f.normal.z) < 0.9 ? cross(f.normal, Vec3{0, 0, 1})
                                                          : cross(f.normal, Vec3{1, 0, 0}));
    const Vec3 w = cross(f.normal, u);
    std::vector<std::pair<double, int>> ring;
    for (int id : f.coplanar) {
      const Vec3 r = q.vertices[id] - centroid;
      ring.emplace_back(std::atan2(dot(r, w), dot(r, u)), id);
    }
    std::sort(ring.begin(), ring.end());
    std::vector<int> face;
    face.reserve(ring.size());
    for (const auto& [angle, id] : ring) face.push_back(id);
    mesh.faces.push_back(std::move(face));
  }
  return mesh;
}

inline Polyhedron polyhedron_from_off(const OffMesh& mesh) {
  Polyhedron q{mesh.vertices};
  validate_polyhedron(q);
  return q;
}

}  // namespace rupert
