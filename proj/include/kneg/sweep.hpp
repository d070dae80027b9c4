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

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "kneg/core.hpp"
#include "kneg/families.hpp"
#include "kneg/negativity.hpp"

namespace kneg {

struct SweepAxis {
  std::string name;
  double min = 0.0;
  double max = 0.0;
  int steps = 0;
};

/// A grid over 1 or 2 family parameters. Infeasible grid points produce rows
/// with empty quantity cells.
struct SweepSpec {
  Family family = Family::Gabcd;
  std::map<std::string, Complex> fixed;  // parameters not on an axis
  std::vector<SweepAxis> axes;           // outer first
  Qubit reference = 0;
  std::vector<std::string> quantities;   // column names, see quantity_value
};

inline std::vector<std::string> default_sweep_quantities() {
  return {"ng2",          "ng_e4",          "ng_e3",          "ng_e2",
          "ng_e4_minus_e0", "ng_e3_minus_e0", "ng_e2_minus_e0"};
}

/// Resolves a quantity column name against a report. Product keys (ng2,
/// ng_e4, ng_e2_AB, ...) are accepted alongside ng, e0, e2..e4 and n2..n4.
inline std::optional<double> quantity_value(const NegativityReport& rep,
                                            const std::string& name) {
  if (name == "ng") return rep.n_global;
  if (name == "e0") return rep.e0;
  if (name == "mu0") return rep.mu0;
  if (name == "mu1") return rep.mu1;
  if (name.size() == 2 && (name[0] == 'e' || name[0] == 'n') && name[1] >= '2' &&
      name[1] <= '4') {
    const int k = name[1] - '0';
    if (name[0] == 'e') return rep.e_kway.at(k);
    auto it = rep.n_kway.find(k);
    if (it == rep.n_kway.end()) return std::nullopt;
    return it->second;
  }
  auto it = rep.products.find(name);
  if (it != rep.products.end()) return it->second;
  return std::nullopt;
}

inline bool quantity_needs_kway_spectra(const std::string& name) {
  return name.size() == 2 && name[0] == 'n' && name[1] >= '2' && name[1] <= '4';
}

namespace detail {

inline std::string format_double(double x) {
  if (x == 0.0) x = 0.0;  // drop the sign of negative zero
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

inline double axis_value(const SweepAxis& ax, int i) {
  if (ax.steps == 1) return ax.min;
  return ax.min + (ax.max - ax.min) * i / (ax.steps - 1);
}

/// The Fig. 1 slice fixes d = c = sqrt((1-a^2-b^2)/2) when the caller sweeps
/// only a and b of gabcd.
inline bool wants_gabcd_slice(const SweepSpec& spec) {
  if (spec.family != Family::Gabcd) return false;
  auto has = [&](const std::string& n) {
    if (spec.fixed.count(n)) return true;
    for (const SweepAxis& ax : spec.axes)
      if (ax.name == n) return true;
    return false;
  };
  if (has("c") != has("d"))
    throw DomainError("gabcd sweep: give both c and d or neither");
  return !has("c");
}

}  // namespace detail

inline void validate_sweep(const SweepSpec& spec) {
  if (spec.axes.empty() || spec.axes.size() > 2)
    throw DomainError("sweep needs 1 or 2 axes");
  for (const SweepAxis& ax : spec.axes) {
    if (ax.steps < 2) throw DomainError("sweep axis needs at least 2 steps");
    auto names = family_param_names(spec.family);
    if (std::find(names.begin(), names.end(), ax.name) == names.end())
      throw DomainError("family " + std::string(family_name(spec.family)) +
                        " has no parameter '" + ax.name + "'");
  }
  if (spec.axes.size() == 2 && spec.axes[0].name == spec.axes[1].name)
    throw DomainError("sweep axes must differ");
}

/// Runs the sweep and renders it as CSV: header row, one row per grid point,
/// outer axis ascending then inner, '.' decimal, empty cell = infeasible.
inline std::string run_sweep_csv(const SweepSpec& spec_in, const Tolerances& tol = {}) {
  SweepSpec spec = spec_in;
  if (spec.quantities.empty()) spec.quantities = default_sweep_quantities();
  validate_sweep(spec);
  const bool slice = detail::wants_gabcd_slice(spec);

  ReportOptions opts;
  opts.with_kway_spectra = false;
  opts.with_selective_splits = false;
  for (const std::string& q : spec.quantities) {
    if (quantity_needs_kway_spectra(q)) opts.with_kway_spectra = true;
    // per-pair "ng_e2_AB" and per-triple "ng_e3_ABC" columns (the e0-
    // subtracted names share the prefix but not the length)
    if ((q.size() == 8 && q.rfind("ng_e2_", 0) == 0) ||
        (q.size() == 9 && q.rfind("ng_e3_", 0) == 0))
      opts.with_selective_splits = true;
  }

  std::string csv;
  for (size_t i = 0; i < spec.axes.size(); ++i)
    csv += (i ? "," : "") + spec.axes[i].name;
  for (const std::string& q : spec.quantities) csv += "," + q;
  csv += "\n";

  const int outer_steps = spec.axes[0].steps;
  const int inner_steps = spec.axes.size() == 2 ? spec.axes[1].steps : 1;
  for (int i = 0; i < outer_steps; ++i) {
    for (int j = 0; j < inner_steps; ++j) {
      FamilyParams fp;
      fp.family = spec.family;
      fp.params = spec.fixed;
      fp.params[spec.axes[0].name] = detail::axis_value(spec.axes[0], i);
      if (spec.axes.size() == 2)
        fp.params[spec.axes[1].name] = detail::axis_value(spec.axes[1], j);

      std::string row;
      row += detail::format_double(fp.params[spec.axes[0].name].real());
      if (spec.axes.size() == 2)
        row += "," + detail::format_double(fp.params[spec.axes[1].name].real());

      bool feasible = true;
      if (slice) {
        const double a2 = std::norm(fp.params.at("a"));
        const double b2 = std::norm(fp.params.at("b"));
        const double cd2 = 0.5 * (1.0 - a2 - b2);
        if (cd2 < -tol.norm_tol) {
          feasible = false;
        } else {
          const double cd = cd2 > 0.0 ? std::sqrt(cd2) : 0.0;
          fp.params["c"] = cd;
          fp.params["d"] = cd;
        }
      }

      if (feasible) {
        try {
          PureState psi = build_family(fp, tol.norm_tol);
          NegativityReport rep = build_report(psi, spec.reference, tol, opts);
          for (const std::string& q : spec.quantities) {
            std::optional<double> v = quantity_value(rep, q);
            if (!v) throw DomainError("unknown sweep quantity '" + q + "'");
            if (!std::isfinite(*v))
              throw NumericalError("non-finite value in sweep output");
            row += "," + detail::format_double(*v);
          }
        } catch (const DomainError&) {
          feasible = false;
        } catch (const NormalizationError&) {
          feasible = false;
        }
      }
      if (!feasible)
        for (size_t q = 0; q < spec.quantities.size(); ++q) row += ",";
      csv += row + "\n";
    }
  }
  return csv;
}

/// Grids behind the line/contour figures. 1: gabcd over (a, b) on the
/// symmetric slice; 2-3: lab3 over (a, b); 4-5: la4 over a for qubits A and D.
inline SweepSpec figure_preset(int fig) {
  SweepSpec s;
  switch (fig) {
    case 1:
      s.family = Family::Gabcd;
      s.axes = {{"a", 0.0, 1.0, 101}, {"b", 0.0, 1.0, 101}};
      s.quantities = {"ng2", "ng_e4", "ng_e2", "ng_e4_minus_e0", "ng_e2_minus_e0"};
      break;
    case 2:
      s.family = Family::Lab3;
      s.axes = {{"a", 0.0, 1.0 / std::sqrt(3.0), 101}, {"b", 0.0, 1.0, 101}};
      s.quantities = {"ng2", "ng_e4", "ng_e4_minus_e0"};
      break;
    case 3:
      s.family = Family::Lab3;
      s.axes = {{"a", 0.0, 1.0 / std::sqrt(3.0), 101}, {"b", 0.0, 1.0, 101}};
      s.quantities = {"ng2", "ng_e3", "ng_e2", "ng_e3_minus_e0", "ng_e2_minus_e0"};
      break;
    case 4:
    case 5:
      s.family = Family::La4;
      s.axes = {{"a", 0.0, 0.5, 201}};
      s.reference = fig == 4 ? 0 : 3;
      s.quantities = default_sweep_quantities();
      break;
    default:
      throw DomainError("figure preset must be 1..5");
  }
  return s;
}

}  // namespace kneg
