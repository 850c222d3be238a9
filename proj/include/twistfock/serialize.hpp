#pragma once

// JSON views of the core types and check reports (nlohmann::json).

#include <nlohmann/json.hpp>

#include "twistfock/check_record.hpp"
#include "twistfock/fock.hpp"
#include "twistfock/lattice.hpp"
#include "twistfock/quadfield.hpp"
#include "twistfock/toroidal.hpp"

namespace twistfock {

using json = nlohmann::json;

inline json to_json(const Scalar& s) { return json(s.coord_strings()); }
inline Scalar scalar_from_json(const json& j) {
  return Scalar::from_coord_strings(j.get<std::vector<std::string>>());
}

inline json to_json(const QuadField& f) {
  json arr = json::array();
  for (const auto& [pair, c] : f.terms())
    arr.push_back({{"pair", {pair.first.str(), pair.second.str()}}, {"coeff", to_json(c)}});
  return arr;
}

inline QuadField quadfield_from_json(const json& j) {
  QuadField f;
  for (const auto& t : j) {
    auto a = Letter::parse(t.at("pair").at(0).get<std::string>());
    auto b = Letter::parse(t.at("pair").at(1).get<std::string>());
    if (!a || !b) throw std::invalid_argument("quadfield_from_json: bad letter");
    f.add_pair(*a, *b, scalar_from_json(t.at("coeff")));
  }
  return f;
}

inline std::string mode2_string(int mode2) {
  return std::to_string(mode2) + "/2";
}

inline json to_json(const FockState& s) {
  json arr = json::array();
  for (const auto& e : s.entries()) arr.push_back({e.letter.str(), mode2_string(e.mode2)});
  return arr;
}

inline json to_json(const StateVector& v) {
  json arr = json::array();
  for (const auto& [s, c] : v.sorted_terms())
    arr.push_back({{"state", to_json(s)}, {"coeff", to_json(c)}});
  return arr;
}

inline json to_json(const ToroidalElement& t) {
  json loop = json::array();
  for (const auto& [k, c] : t.loop.components())
    loop.push_back({{"basis_index", std::get<0>(k)},
                    {"j", std::get<1>(k)},
                    {"m", std::get<2>(k)},
                    {"coeff", to_json(c)}});
  json central = json::array();
  for (const auto& [k, c] : t.central.ds_terms())
    central.push_back(
        {{"basis", "sds"}, {"j", k.first}, {"m", k.second}, {"coeff", to_json(c)}});
  for (const auto& [k, c] : t.central.dt_terms())
    central.push_back({{"basis", "tdt"}, {"j", k.first}, {"m", 0}, {"coeff", to_json(c)}});
  return {{"loop", loop}, {"central", central}};
}

inline json to_json(const CheckRecord& r, bool timings) {
  json j{{"id", r.id},
         {"indices", r.indices},
         {"status", r.pass ? "pass" : "fail"}};
  if (!r.residual.empty()) j["residual"] = r.residual;
  if (timings) j["ms"] = r.ms;
  return j;
}

inline json to_json(const Report& rep, bool timings) {
  json rs = json::array();
  for (const auto& r : rep.records) rs.push_back(to_json(r, timings));
  return {{"kind", family_flag(rep.kind.family)},
          {"n", rep.kind.n},
          {"relations", rs}};
}

}  // namespace twistfock
