// Copyright 2026 The kneg Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "kneg/core.hpp"
#include "kneg/families.hpp"
#include "kneg/negativity.hpp"
#include "kneg/state.hpp"

namespace kneg {

inline constexpr const char* kReportSchemaVersion = "1.0";

inline nlohmann::json complex_to_json(const Complex& z) {
  return nlohmann::json::array({z.real(), z.imag()});
}

inline nlohmann::json report_to_json(const NegativityReport& rep) {
  nlohmann::json j;
  j["qubit"] = std::string(1, qubit_name(rep.reference));
  j["n_global"] = rep.n_global;
  j["negative_rank"] = rep.negative_rank;
  j["mu"] = {rep.mu0, rep.mu1};
  nlohmann::json nk, ek;
  for (const auto& [k, v] : rep.n_kway) nk[std::to_string(k)] = v;
  for (const auto& [k, v] : rep.e_kway) ek[std::to_string(k)] = v;
  if (!nk.is_null()) j["n_kway"] = nk;
  j["e_kway"] = ek;
  j["e0"] = rep.e0;
  nlohmann::json pairs, triples;
  for (const auto& [q, v] : rep.e_pair) pairs[pair_key(rep.reference, q)] = v;
  for (const auto& [qr, v] : rep.e_triple)
    triples[triple_key(rep.reference, qr.first, qr.second)] = v;
  j["e_pair"] = pairs;
  j["e_triple"] = triples;
  j["products"] = rep.products;
  j["residuals"] = rep.residuals;
  return j;
}

/// Oracle columns for a class-I family or la4 report on qubit A, plus the
/// absolute numeric-minus-oracle deltas.
inline void attach_oracle(nlohmann::json& report_json, const NegativityReport& rep,
                          const FamilyParams& fp) {
  if (rep.reference != 0) return;
  nlohmann::json oracle, delta;
  if (class_label(fp.family).cls == 1) {
    Class1Oracle o = oracle_class1(to_general_amplitudes(fp));
    PairwiseOracle po = oracle_pairwise(fp);
    oracle["n_global"] = o.n_global;
    oracle["ng2"] = table1_ng2(fp);
    oracle["e4"] = o.e4;
    oracle["e2"] = o.e2;
    oracle["mu"] = {std::max(o.mu0, o.mu1), std::min(o.mu0, o.mu1)};
    delta["n_global"] = std::abs(rep.n_global - o.n_global);
    delta["ng2"] = std::abs(rep.products.at("ng2") - table1_ng2(fp));
    delta["e4"] = std::abs(rep.e_kway.at(4) - o.e4);
    delta["e2"] = std::abs(rep.e_kway.at(2) - o.e2);
    for (Qubit q = 1; q < 4; ++q) {
      const std::string key = "ng_e2_" + pair_key(0, q);
      oracle[key] = po.ng_e_pair.at(q);
      delta[key] = std::abs(rep.products.at(key) - po.ng_e_pair.at(q));
    }
  } else if (fp.family == Family::La4) {
    La4Oracle o = oracle_la4(detail::real_family_param(fp, "a"));
    oracle["ng2"] = o.ng2;
    oracle["ng_e4"] = o.ng_e4;
    oracle["ng_e3"] = o.ng_e3;
    oracle["ng_e2"] = o.ng_e2;
    for (const char* k : {"ng2", "ng_e4", "ng_e3", "ng_e2"})
      delta[k] = std::abs(rep.products.at(k) - oracle[k].get<double>());
  } else {
    return;
  }
  report_json["oracle"] = oracle;
  report_json["oracle_delta"] = delta;
}

/// Assembles the top-level document. Aggregate residuals take the maximum
/// across the per-qubit reports.
inline nlohmann::json make_report_document(nlohmann::json input,
                                           const std::vector<nlohmann::json>& reports,
                                           double timing_ms) {
  nlohmann::json doc;
  doc["schema_version"] = kReportSchemaVersion;
  doc["input"] = std::move(input);
  doc["reports"] = reports;
  nlohmann::json agg = nlohmann::json::object();
  for (const nlohmann::json& r : reports)
    for (const auto& [key, value] : r.at("residuals").items()) {
      const double v = value.get<double>();
      if (!agg.contains(key) || agg[key].get<double>() < v) agg[key] = v;
    }
  doc["residuals"] = agg;
  doc["timing_ms"] = timing_ms;
  return doc;
}

inline nlohmann::json amplitudes_input_json(const PureState& psi, bool normalized_flag) {
  nlohmann::json j;
  j["kind"] = "amplitudes";
  j["n_qubits"] = psi.n_qubits();
  nlohmann::json amps = nlohmann::json::array();
  for (const Complex& z : psi.amplitudes()) amps.push_back(complex_to_json(z));
  j["amplitudes"] = amps;
  j["normalized_by_cli"] = normalized_flag;
  return j;
}

inline nlohmann::json family_input_json(const FamilyParams& fp) {
  nlohmann::json j;
  j["kind"] = "family";
  j["family"] = family_name(fp.family);
  nlohmann::json params = nlohmann::json::object();
  for (const auto& [name, value] : fp.params) params[name] = complex_to_json(value);
  j["params"] = params;
  j["derived"] = fp.derived;
  j["class"] = class_label(fp.family).cls;
  return j;
}

}  // namespace kneg
