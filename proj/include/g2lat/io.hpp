#pragma once

// JSON forms of scalars, octonions, lattices, maps, certificates and traces.
//
//   field:    {"kind": "prime", "p": 5} or {"kind": "rational"}
//   octonion: array of 8 scalar strings (e1, e2, u1, u2, u3, v1, v2, v3)
//   lattice:  {"field": ..., "basis": [8 octonions]}  (columns of a basis)
//   map:      {"field": ..., "matrix": [8 octonions]} (column j = image of b_j)

#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "g2lat/building.hpp"
#include "g2lat/gram.hpp"
#include "g2lat/groups.hpp"
#include "g2lat/identities.hpp"
#include "g2lat/isotropic.hpp"
#include "g2lat/reduction.hpp"

namespace g2lat {

using Json = nlohmann::ordered_json;

enum class FieldId { F3, F5, F7, F11, F13, Q };

inline std::string field_name(FieldId f) {
  switch (f) {
    case FieldId::F3: return "F3";
    case FieldId::F5: return "F5";
    case FieldId::F7: return "F7";
    case FieldId::F11: return "F11";
    case FieldId::F13: return "F13";
    case FieldId::Q: return "Q";
  }
  return "?";
}

inline FieldId field_from_name(const std::string& s) {
  for (auto f : {FieldId::F3, FieldId::F5, FieldId::F7, FieldId::F11, FieldId::F13, FieldId::Q})
    if (field_name(f) == s) return f;
  throw ParseError("unsupported field '" + s + "' (use F3, F5, F7, F11, F13 or Q)", 0);
}

template <CoefficientField K>
FieldId field_id() {
  if constexpr (std::is_same_v<K, F3>) return FieldId::F3;
  else if constexpr (std::is_same_v<K, F5>) return FieldId::F5;
  else if constexpr (std::is_same_v<K, F7>) return FieldId::F7;
  else if constexpr (std::is_same_v<K, F11>) return FieldId::F11;
  else if constexpr (std::is_same_v<K, F13>) return FieldId::F13;
  else return FieldId::Q;
}

inline Json field_to_json(FieldId f) {
  switch (f) {
    case FieldId::F3: return Json{{"kind", "prime"}, {"p", 3}};
    case FieldId::F5: return Json{{"kind", "prime"}, {"p", 5}};
    case FieldId::F7: return Json{{"kind", "prime"}, {"p", 7}};
    case FieldId::F11: return Json{{"kind", "prime"}, {"p", 11}};
    case FieldId::F13: return Json{{"kind", "prime"}, {"p", 13}};
    case FieldId::Q: return Json{{"kind", "rational"}};
  }
  return {};
}

inline FieldId field_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string()) throw ParseError("field must be an object with a kind", 0);
  const std::string kind = j["kind"].get<std::string>();
  if (kind == "rational") return FieldId::Q;
  if (kind != "prime") throw ParseError("unknown field kind '" + kind + "'", 0);
  if (!j.contains("p") || !j["p"].is_number_integer()) throw ParseError("prime field without an integer p", 0);
  return field_from_name("F" + std::to_string(j["p"].get<long long>()));
}

// Calls f(K{}) with the coefficient field named by id.
template <class F>
decltype(auto) with_field(FieldId id, F&& f) {
  switch (id) {
    case FieldId::F3: return f(F3{});
    case FieldId::F5: return f(F5{});
    case FieldId::F7: return f(F7{});
    case FieldId::F11: return f(F11{});
    case FieldId::F13: return f(F13{});
    case FieldId::Q: break;
  }
  return f(Qq{});
}

template <CoefficientField K>
Json octonion_to_json(const Octonion<K>& x) {
  Json a = Json::array();
  for (std::size_t i = 0; i < 8; ++i) a.push_back(x[i].to_string());
  return a;
}

template <CoefficientField K>
Octonion<K> octonion_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 8) throw ParseError("an octonion is an array of 8 scalar strings", 0);
  Octonion<K> x;
  for (std::size_t i = 0; i < 8; ++i) {
    if (!j[i].is_string()) throw ParseError("octonion coordinate " + std::to_string(i + 1) + " is not a string", 0);
    x[i] = parse_scalar<K>(j[i].get<std::string>());
  }
  return x;
}

template <CoefficientField K>
Json octonions_to_json(const std::vector<Octonion<K>>& xs) {
  Json a = Json::array();
  for (const auto& x : xs) a.push_back(octonion_to_json(x));
  return a;
}

template <CoefficientField K>
std::vector<Octonion<K>> octonions_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("expected an array of octonions", 0);
  std::vector<Octonion<K>> xs;
  for (const auto& x : j) xs.push_back(octonion_from_json<K>(x));
  return xs;
}

template <CoefficientField K>
Json lattice_to_json(const Lattice<K>& L) {
  return Json{{"field", field_to_json(field_id<K>())}, {"basis", octonions_to_json(L.basis())}};
}

inline FieldId field_of_document(const Json& j) {
  if (!j.is_object() || !j.contains("field")) throw ParseError("document has no field", 0);
  return field_from_json(j["field"]);
}

template <CoefficientField K>
Lattice<K> lattice_from_json(const Json& j) {
  if (field_of_document(j) != field_id<K>()) throw ParseError("lattice is over a different field", 0);
  if (!j.contains("basis")) throw ParseError("lattice has no basis", 0);
  return Lattice<K>::from_generators(octonions_from_json<K>(j["basis"]));
}

template <CoefficientField K>
Json map_to_json(const AlgebraMap<K>& g) {
  std::vector<Octonion<K>> cols;
  for (std::size_t j = 0; j < 8; ++j) cols.push_back(g.image(j));
  return Json{{"field", field_to_json(field_id<K>())}, {"matrix", octonions_to_json(cols)}};
}

template <CoefficientField K>
AlgebraMap<K> map_from_json(const Json& j) {
  if (field_of_document(j) != field_id<K>()) throw ParseError("map is over a different field", 0);
  if (!j.contains("matrix")) throw ParseError("map has no matrix", 0);
  auto cols = octonions_from_json<K>(j["matrix"]);
  if (cols.size() != 8) throw ParseError("a map matrix has 8 columns", 0);
  return AlgebraMap<K>::from_images(cols);
}

template <CoefficientField K>
Json order_witness_to_json(const OrderWitness<K>& w) {
  Json j;
  if (w.kind == OrderWitness<K>::Kind::ParaUnitMissing) {
    j["kind"] = "ParaUnitMissing";
    j["element"] = octonion_to_json(w.x);
  } else {
    j["kind"] = "ProductOutside";
    j["x"] = octonion_to_json(w.x);
    j["y"] = octonion_to_json(w.y);
    j["product"] = octonion_to_json(w.product);
  }
  j["coordinate_valuation"] = w.coordinate_valuation;
  return j;
}

template <CoefficientField K>
Json chain_to_json(const GradedChain<K>& c) {
  Json a = Json::array();
  for (const auto& [L, g] : c.members) a.push_back(Json{{"grading", g.to_string()}, {"lattice", lattice_to_json(L)}});
  return a;
}

template <CoefficientField K>
Json refutation_to_json(const Refutation<K>& r) {
  Json j{{"kind", r.kind}, {"detail", r.detail}, {"x", r.x_name}, {"y", r.y_name},
         {"x_vector", octonion_to_json(r.x)}, {"y_vector", octonion_to_json(r.y)},
         {"product", octonion_to_json(r.product)}, {"valuation", r.valuation}};
  if (r.lambda) j["lambda"] = r.lambda->to_string();
  if (r.mu) j["mu"] = r.mu->to_string();
  return j;
}

template <CoefficientField K>
Json trace_to_json(const ReductionTrace<K>& t) {
  Json a = Json::array();
  for (const auto& s : t.steps) {
    Json step{{"step", s.name}};
    for (const auto& [k, v] : s.values) step[k] = v;
    for (const auto& [k, v] : s.vectors) step[k] = octonions_to_json(v);
    a.push_back(std::move(step));
  }
  return a;
}

template <CoefficientField K>
Json certificate_to_json(const VertexCertificate<K>& c) {
  Json j{{"verdict", c.type ? to_string(*c.type) : "NotVertex"}};
  if (!c.type) j["reason"] = c.reason;
  if (c.witness) j["witness"] = order_witness_to_json(*c.witness);
  if (c.dual_length) j["dual_length"] = *c.dual_length;
  if (c.transformer) j["transformer"] = map_to_json(*c.transformer);
  return j;
}

inline Json identity_report_to_json(const IdentityReport& r, FieldId f) {
  Json res = Json::array();
  for (const auto& x : r.results) {
    Json e{{"identity", x.name}, {"passed", x.passed}, {"failed", x.failed}};
    if (x.counterexample) e["counterexample"] = *x.counterexample;
    res.push_back(std::move(e));
  }
  return Json{{"field", field_name(f)}, {"seed", r.seed},       {"samples", r.samples},
              {"degree", r.degree},     {"all_passed", r.all_passed()}, {"results", std::move(res)}};
}

inline Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(), e.byte);
  }
}

}  // namespace g2lat
