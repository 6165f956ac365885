#pragma once

// Canonical JSON serialization for report types.  nlohmann::json objects keep
// their keys sorted, so identical inputs serialize byte-identically.

#include <json.hpp>

#include "satake/cohomology.hpp"
#include "satake/oracle.hpp"

namespace satake {

using Json = nlohmann::json;

inline Json to_json(const Vec& v) { return Json(v); }

inline Json to_json(const Mat& m) {
  Json a = Json::array();
  for (const Vec& r : m) a.push_back(r);
  return a;
}

inline Json to_json(const UnderlineWeight& w) {
  Json a = Json::array();
  for (const Vec& c : w.comps) a.push_back(c);
  return a;
}

inline Json to_json(const ModPCharacter& c) {
  return Json{{"modulus", c.modulus}, {"basis", c.basis_tag}, {"exponents", c.exps}};
}

inline Json to_json(const Witness& w) {
  Json j{{"kind", w.kind}};
  if (!w.words_a.empty()) j["element_a"] = w.words_a;
  if (!w.words_b.empty()) j["element_b"] = w.words_b;
  if (w.length_a >= 0) j["length_a"] = w.length_a;
  if (w.length_b >= 0) j["length_b"] = w.length_b;
  if (!w.root.empty()) j["root"] = w.root;
  if (w.embedding >= 0) j["embedding"] = w.embedding;
  if (!w.character.empty()) j["character"] = w.character;
  return j;
}

inline Json to_json(const CheckReport& r) {
  Json j{{"name", r.name}, {"verdict", to_string(r.verdict)}};
  Json ws = Json::array();
  for (const Witness& w : r.witnesses) ws.push_back(to_json(w));
  j["witnesses"] = ws;
  if (!r.notes.empty()) j["notes"] = r.notes;
  return j;
}

inline Json to_json(const Constituent& c) {
  return Json{{"weight", to_json(c.weight)},
              {"witness", c.witness_words},
              {"length", c.witness_length},
              {"dim", c.dim},
              {"central_character", to_json(c.central_char)}};
}

inline Json to_json(const CohomologyReport& r) {
  Json degrees = Json::object();
  for (const auto& [deg, cs] : r.degrees) {
    Json arr = Json::array();
    for (const Constituent& c : cs) arr.push_back(to_json(c));
    degrees[std::to_string(deg)] = arr;
  }
  return Json{{"kind", to_string(r.kind)},
              {"filtration_caveat", r.caveat},
              {"dim_N0", r.dim_N0},
              {"degrees", degrees}};
}

inline Json to_json(const SatakeTargetReport& r) {
  Json j{{"orthogonality", to_string(r.orthogonality)}, {"dim_N0", r.dim_N0}};
  Json ws = Json::array();
  for (const Witness& w : r.witnesses) ws.push_back(to_json(w));
  j["witnesses"] = ws;
  if (r.orthogonality == Verdict::Pass) {
    Json tg = Json::object();
    for (const auto& [deg, cs] : r.targets) {
      Json arr = Json::array();
      for (const Constituent& c : cs) arr.push_back(to_json(c));
      tg[std::to_string(deg)] = arr;
    }
    j["targets"] = tg;
    if (r.has_torus_ext) j["torus_ext_free_ranks"] = r.torus_ext_ranks;
  }
  return j;
}

inline Json to_json(const PrincipalSeriesReport& r) {
  Json j{{"matched", r.matched}};
  if (r.matched) {
    j["matched_element"] = r.matched_words;
    j["matched_length"] = r.matched_length;
  }
  Json dims = Json::object();
  for (const auto& [deg, d] : r.dims) dims[std::to_string(deg)] = d;
  j["dims"] = dims;
  return j;
}

inline Json to_json(const ParameterSupportEntry& e) {
  Json j;
  Json jj = Json::array();
  for (int i : e.J) jj.push_back(i + 1);
  j["J"] = jj;
  j["orthogonality"] = to_string(e.orthogonality);
  j["dim_N0"] = e.dim_N0;
  if (e.orthogonality == Verdict::Pass) {
    Json pts = Json::array();
    for (const SupportPoint& p : e.points)
      pts.push_back(Json{{"character", to_json(p.character)}, {"degrees", p.degrees}});
    j["support"] = pts;
  }
  return j;
}

inline Json to_json(const PValuationTable& t) {
  Json rows = Json::array();
  for (const PValuationRow& r : t.rows)
    rows.push_back(Json{{"root", r.root},
                        {"height", r.height},
                        {"coxeter", r.coxeter},
                        {"value", std::to_string(r.height) + "/" + std::to_string(r.coxeter)}});
  return Json{{"verdict", to_string(t.verdict)}, {"rows", rows}};
}

inline Json to_json(const CEResult& r) {
  Json degrees = Json::object();
  for (const auto& [deg, mp] : r.blocks) {
    Json arr = Json::array();
    for (const auto& [w, dim] : mp) arr.push_back(Json{{"weight", to_json(w)}, {"dim", dim}});
    degrees[std::to_string(deg)] = arr;
  }
  Json totals = Json::object();
  for (const auto& [deg, tot] : r.degree_totals()) totals[std::to_string(deg)] = tot;
  return Json{{"degrees", degrees}, {"degree_totals", totals}};
}

inline Json to_json(const RootDatum& rd) {
  return Json{{"label", rd.label},
              {"preset", to_string(rd.preset)},
              {"lattice_rank", rd.d},
              {"simple_roots", to_json(rd.simple_roots)},
              {"simple_coroots", to_json(rd.simple_coroots)},
              {"cartan_matrix", to_json(rd.cartan)}};
}

}  // namespace satake
