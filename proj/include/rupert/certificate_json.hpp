#pragma once

// JSON serialization for certificates and survey reports. Doubles use the
// shortest round-trip representation, so a reparsed certificate reverifies to
// the bit-identical margin.

#include <json.hpp>

#include "rupert/passage.hpp"

namespace rupert {

using nlohmann::json;

inline json to_json(const Vec3& v) { return json::array({v.x, v.y, v.z}); }
inline Vec3 vec3_from_json(const json& j) { return {j.at(0), j.at(1), j.at(2)}; }

inline json to_json(const RigidMotion3& m) {
  json rows = json::array();
  for (int i = 0; i < 3; ++i)
    rows.push_back(json::array({m.rot.m[3 * i], m.rot.m[3 * i + 1], m.rot.m[3 * i + 2]}));
  return json{{"matrix", rows}, {"translation", to_json(m.shift)}};
}

inline RigidMotion3 motion_from_json(const json& j) {
  RigidMotion3 m;
  const json& rows = j.at("matrix");
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < 3; ++k) m.rot.m[3 * i + k] = rows.at(i).at(k);
  m.shift = vec3_from_json(j.at("translation"));
  return m;
}

inline json to_json(const Certificate& c) {
  json poly = json::array();
  for (const Point2& p : c.section_polygon.vertices) poly.push_back(json::array({p.x, p.y}));
  json j{{"kind", c.kind == CertificateKind::Rupert ? "rupert" : "reverse-rupert"},
         {"delta", c.delta},
         {"margin", c.margin},
         {"rotation", json{{"axis", to_json(c.rotation.axis)}, {"angle", c.rotation.angle}}},
         {"orientation", to_json(c.orientation)},
         {"section", json{{"type", c.section_type}, {"polygon", poly}}},
         {"chord", json::array({c.decomposition.chord_a, c.decomposition.chord_b})},
         {"solid", c.solid}};
  if (c.section_type == "prism") j["section"]["half_height"] = c.prism_half_height;
  return j;
}

inline Certificate certificate_from_json(const json& j) {
  Certificate c;
  c.kind = j.at("kind") == "rupert" ? CertificateKind::Rupert : CertificateKind::ReverseRupert;
  c.delta = j.at("delta");
  c.margin = j.at("margin");
  c.rotation.axis = vec3_from_json(j.at("rotation").at("axis"));
  c.rotation.angle = j.at("rotation").at("angle");
  c.orientation = motion_from_json(j.at("orientation"));
  c.section_type = j.at("section").at("type");
  for (const json& p : j.at("section").at("polygon"))
    c.section_polygon.vertices.push_back({p.at(0), p.at(1)});
  if (c.section_type == "prism") c.prism_half_height = j.at("section").value("half_height", 0.0);
  c.decomposition.chord_a = j.at("chord").at(0);
  c.decomposition.chord_b = j.at("chord").at(1);
  c.solid = j.value("solid", std::string{});
  return c;
}

// One survey row. Wall time is reported on stdout only; the serialized report
// must be byte-identical across reruns.
struct SurveyRow {
  std::string name;
  std::string expected;
  std::string outcome;  // certified-A | certified-B | not-covered | failed
  std::string stage;    // failure stage when not certified
  double delta = 0.0;
  double margin = 0.0;
  std::optional<Certificate> certificate;
  double millis = 0.0;
};

inline json to_json(const SurveyRow& r) {
  json j{{"solid", r.name}, {"expected", r.expected}, {"outcome", r.outcome}};
  if (r.certificate) {
    j["delta"] = r.delta;
    j["margin"] = r.margin;
    j["certificate"] = to_json(*r.certificate);
  } else {
    j["stage"] = r.stage;
  }
  return j;
}

}  // namespace rupert
