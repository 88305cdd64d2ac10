#pragma once

#include "complexity.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace delpezzo {

using Json = nlohmann::json;  // std::map-backed: keys serialize sorted

// Surface spec document:
//   { "degree": int, "model": "blowup"|"p1xp1"|"f2", "roots": [[ints], ...],
//     "annotations": [ { "point": int, "members": [[id, mult], ...],
//                        "contact": [[a, b, order], ...], "parent": int? } ] }
// Unknown fields are rejected so typos cannot silently change a surface.
inline SurfaceSpec spec_from_json(const Json& j) {
  SurfaceSpec spec;
  for (auto& [key, val] : j.items()) {
    if (key != "degree" && key != "model" && key != "roots" && key != "annotations")
      throw SpecError("spec: unknown field \"" + key + "\"");
    (void)val;
  }
  if (!j.contains("degree") || !j["degree"].is_number_integer())
    throw SpecError("spec: \"degree\" must be an integer");
  spec.degree = j["degree"].get<int>();
  std::string model = j.value("model", std::string("blowup"));
  if (model == "blowup")
    spec.model = Model::BlowupOfP2;
  else if (model == "p1xp1")
    spec.model = Model::P1xP1;
  else if (model == "f2")
    spec.model = Model::F2Cone;
  else
    throw SpecError("spec: unknown model \"" + model + "\"");
  if (j.contains("roots")) {
    if (!j["roots"].is_array()) throw SpecError("spec: \"roots\" must be an array");
    for (auto& r : j["roots"]) {
      if (!r.is_array()) throw SpecError("spec: each root must be an integer array");
      Vec v;
      for (auto& x : r) {
        if (!x.is_number_integer()) throw SpecError("spec: root entries must be integers");
        v.push_back(x.get<std::int64_t>());
      }
      spec.simple_roots.push_back(v);
    }
  }
  if (j.contains("annotations")) {
    if (!j["annotations"].is_array())
      throw SpecError("spec: \"annotations\" must be an array");
    for (auto& a : j["annotations"]) {
      IncidenceAnnotation ann;
      for (auto& [key, val] : a.items()) {
        if (key != "point" && key != "members" && key != "contact" && key != "parent")
          throw SpecError("spec: unknown annotation field \"" + key + "\"");
        (void)val;
      }
      if (!a.contains("point") || !a["point"].is_number_integer())
        throw SpecError("spec: annotation needs an integer \"point\"");
      ann.point_id = a["point"].get<int>();
      for (auto& m : a.value("members", Json::array())) {
        if (!m.is_array() || m.size() != 2)
          throw SpecError("spec: annotation member must be [curve id, multiplicity]");
        ann.members.push_back({m[0].get<int>(), m[1].get<int>()});
      }
      for (auto& c : a.value("contact", Json::array())) {
        if (!c.is_array() || c.size() != 3)
          throw SpecError("spec: contact must be [id, id, order]");
        ann.contact.push_back({c[0].get<int>(), c[1].get<int>(), c[2].get<int>()});
      }
      if (a.contains("parent")) ann.parent = a["parent"].get<int>();
      spec.annotations.push_back(ann);
    }
  }
  return spec;
}

inline SurfaceSpec spec_from_json_text(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw SpecError(std::string("spec: invalid JSON: ") + e.what());
  }
  return spec_from_json(j);
}

inline Json spec_to_json(const SurfaceSpec& spec) {
  Json j;
  j["degree"] = spec.degree;
  j["model"] = model_name(spec.model);
  j["roots"] = Json::array();
  for (auto& r : spec.simple_roots) j["roots"].push_back(r);
  if (!spec.annotations.empty()) {
    j["annotations"] = Json::array();
    for (auto& a : spec.annotations) {
      Json ja;
      ja["point"] = a.point_id;
      ja["members"] = Json::array();
      for (auto& [id, m] : a.members) ja["members"].push_back({id, m});
      ja["contact"] = Json::array();
      for (auto& c : a.contact) ja["contact"].push_back({c[0], c[1], c[2]});
      if (a.parent) ja["parent"] = *a.parent;
      j["annotations"].push_back(ja);
    }
  }
  return j;
}

// Boundary document: a list of { "curve": id or [ints], "coeff": "p/q" }.
inline BoundaryDivisor boundary_from_json(const Json& j) {
  if (!j.is_array()) throw SpecError("boundary: document must be an array");
  BoundaryDivisor D;
  for (auto& t : j) {
    for (auto& [key, val] : t.items()) {
      if (key != "curve" && key != "coeff")
        throw SpecError("boundary: unknown field \"" + key + "\"");
      (void)val;
    }
    if (!t.contains("curve") || !t.contains("coeff"))
      throw SpecError("boundary: each term needs \"curve\" and \"coeff\"");
    BoundaryTerm term;
    if (t["curve"].is_number_integer()) {
      term.support = t["curve"].get<int>();
    } else if (t["curve"].is_array()) {
      Vec v;
      for (auto& x : t["curve"]) v.push_back(x.get<std::int64_t>());
      term.support = v;
    } else {
      throw SpecError("boundary: \"curve\" must be an id or a class vector");
    }
    try {
      term.coeff = parse_rational(t["coeff"].get<std::string>());
    } catch (const std::exception&) {
      throw SpecError("boundary: \"coeff\" must be a rational string like \"1/2\"");
    }
    D.terms.push_back(term);
  }
  return D;
}

inline BoundaryDivisor boundary_from_json_text(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw SpecError(std::string("boundary: invalid JSON: ") + e.what());
  }
  return boundary_from_json(j);
}

inline Json boundary_to_json(const BoundaryDivisor& D) {
  Json j = Json::array();
  for (auto& t : D.terms) {
    Json jt;
    if (std::holds_alternative<int>(t.support))
      jt["curve"] = std::get<int>(t.support);
    else
      jt["curve"] = std::get<Vec>(t.support);
    jt["coeff"] = to_string(t.coeff);
    j.push_back(jt);
  }
  return j;
}

inline Json rational_or_interval(const Rat& lo, const Rat& hi) {
  if (lo == hi) return to_string(lo);
  Json j;
  j["lo"] = to_string(lo);
  j["hi"] = to_string(hi);
  return j;
}

inline Json report_to_json(const SurfaceSpec& spec, const ComplexityReport& rep) {
  Json j;
  j["degree"] = spec.degree;
  j["model"] = model_name(spec.model);
  j["singularities"] = singularity_type(spec);
  j["rho_x"] = rep.rho_x;
  j["route"] = route_name(rep.route);
  j["sigma"] = rational_or_interval(rep.sigma_lo, rep.sigma_hi);
  j["gamma"] = rational_or_interval(rep.gamma_lo(), rep.gamma_hi());
  if (rep.certificate) j["certificate"] = boundary_to_json(*rep.certificate);
  j["notes"] = rep.notes;
  return j;
}

inline std::string report_to_text(const SurfaceSpec& spec, const ComplexityReport& rep) {
  std::string out;
  auto interval = [](const Rat& lo, const Rat& hi) {
    if (lo == hi) return to_string(lo);
    return "[" + to_string(lo) + ", " + to_string(hi) + "]";
  };
  out += "sigma=" + interval(rep.sigma_lo, rep.sigma_hi);
  out += " gamma=" + interval(rep.gamma_lo(), rep.gamma_hi());
  out += " route=" + route_name(rep.route);
  out += " rho_X=" + std::to_string(rep.rho_x);
  out += " singularities=" + singularity_type(spec);
  out += "\n";
  if (rep.certificate) {
    PicardLattice lat = spec.lattice();
    auto ncs = make_negative_curve_set(lat, spec.simple_roots);
    out += "boundary:";
    for (auto& t : rep.certificate->terms) {
      const Vec& cls = std::holds_alternative<int>(t.support)
                           ? ncs.by_id(std::get<int>(t.support)).cls
                           : std::get<Vec>(t.support);
      out += " + " + to_string(t.coeff) + "*(" + class_to_string(cls) + ")";
    }
    out += "\n";
  }
  for (auto& n : rep.notes) out += "note: " + n + "\n";
  return out;
}

}  // namespace delpezzo
