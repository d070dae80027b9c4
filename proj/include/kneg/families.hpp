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
#include <array>
#include <cmath>
#include <map>
#include <string>
#include <vector>

#include "kneg/core.hpp"
#include "kneg/state.hpp"

namespace kneg {

/// The nine SLOCC families of four-qubit entangled states, by their usual
/// names.
enum class Family {
  Gabcd,
  Labc2,
  La2b2,
  La2_0_31,
  Lab3,
  La4,
  L0_53,
  L0_71,
  L0_31_0_31,
};

struct ClassLabel {
  int cls;        // 1 or 2
  bool e3_zero;   // partial 3-way negativity vanishes in normal form
  bool e4_zero;   // partial 4-way negativity vanishes in normal form
};

inline ClassLabel class_label(Family f) {
  switch (f) {
    case Family::Gabcd:
    case Family::Labc2:
    case Family::La2b2:
    case Family::La2_0_31:
      return {1, true, false};
    case Family::Lab3:
    case Family::La4:
      return {2, false, false};
    case Family::L0_53:
    case Family::L0_71:
    case Family::L0_31_0_31:
      return {2, false, true};
  }
  throw DomainError("unknown family");
}

inline const char* family_name(Family f) {
  switch (f) {
    case Family::Gabcd: return "gabcd";
    case Family::Labc2: return "labc2";
    case Family::La2b2: return "la2b2";
    case Family::La2_0_31: return "la2-0-31";
    case Family::Lab3: return "lab3";
    case Family::La4: return "la4";
    case Family::L0_53: return "l0-53";
    case Family::L0_71: return "l0-71";
    case Family::L0_31_0_31: return "l0-31-0-31";
  }
  throw DomainError("unknown family");
}

inline std::vector<std::string> family_param_names(Family f) {
  switch (f) {
    case Family::Gabcd: return {"a", "b", "c", "d"};
    case Family::Labc2: return {"a", "b", "c"};
    case Family::La2b2: return {"a", "b"};
    case Family::La2_0_31: return {"a"};
    case Family::Lab3: return {"a", "b"};
    case Family::La4: return {"a"};
    default: return {};
  }
}

inline Family family_from_name(std::string name) {
  for (char& c : name) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
    if (c == '_') c = '-';
  }
  for (Family f : {Family::Gabcd, Family::Labc2, Family::La2b2, Family::La2_0_31,
                   Family::Lab3, Family::La4, Family::L0_53, Family::L0_71,
                   Family::L0_31_0_31})
    if (name == family_name(f)) return f;
  throw DomainError("unknown family '" + name + "'");
}

/// One of the nine families with its free parameters. `derived` holds the
/// coefficients fixed by normalization (e.g. d of labc2) once resolved.
struct FamilyParams {
  Family family = Family::Gabcd;
  std::map<std::string, Complex> params;
  std::map<std::string, double> derived;
};

namespace detail {

inline Complex family_param(const FamilyParams& fp, const std::string& name) {
  auto it = fp.params.find(name);
  if (it == fp.params.end())
    throw DomainError(std::string("missing parameter '") + name + "' for family " +
                      family_name(fp.family));
  return it->second;
}

inline double real_family_param(const FamilyParams& fp, const std::string& name) {
  Complex z = family_param(fp, name);
  if (std::abs(z.imag()) > 1e-12)
    throw DomainError(std::string("parameter '") + name + "' of family " +
                      family_name(fp.family) + " must be real");
  return z.real();
}

/// Nonnegative real root of a squared normalization coefficient; squares in
/// (-norm_tol, 0) are grid-edge artifacts and clamp to 0.
inline double derived_root(double square, double norm_tol, const char* what) {
  if (square < -norm_tol)
    throw DomainError(std::string("parameters leave ") + what +
                      "^2 negative: normalization infeasible");
  return square > 0.0 ? std::sqrt(square) : 0.0;
}

}  // namespace detail

/// Validates the free parameters and fills the derived coefficients.
inline void resolve_family(FamilyParams& fp, double norm_tol = 1e-10) {
  fp.derived.clear();
  for (const auto& [name, value] : fp.params) {
    (void)value;
    auto names = family_param_names(fp.family);
    if (std::find(names.begin(), names.end(), name) == names.end())
      throw DomainError("family " + std::string(family_name(fp.family)) +
                        " has no parameter '" + name + "'");
  }
  switch (fp.family) {
    case Family::Gabcd: {
      double sum = 0.0;
      for (const char* n : {"a", "b", "c", "d"})
        sum += std::norm(detail::family_param(fp, n));
      if (std::abs(sum - 1.0) > norm_tol)
        throw NormalizationError("gabcd requires |a|^2+|b|^2+|c|^2+|d|^2 = 1");
      break;
    }
    case Family::Labc2: {
      const double d2 = 1.0 - 2.0 * std::norm(detail::family_param(fp, "c")) -
                        std::norm(detail::family_param(fp, "b")) -
                        std::norm(detail::family_param(fp, "a"));
      fp.derived["d"] = detail::derived_root(d2, norm_tol, "d");
      break;
    }
    case Family::La2b2: {
      const double c2 = 0.5 * (1.0 - 2.0 * std::norm(detail::family_param(fp, "a")) -
                               2.0 * std::norm(detail::family_param(fp, "b")));
      fp.derived["c"] = detail::derived_root(c2, norm_tol, "c");
      break;
    }
    case Family::La2_0_31: {
      const double b2 = (1.0 - 2.0 * std::norm(detail::family_param(fp, "a"))) / 3.0;
      fp.derived["b"] = detail::derived_root(b2, norm_tol, "b");
      break;
    }
    case Family::Lab3: {
      const double a = detail::real_family_param(fp, "a");
      const double b = detail::real_family_param(fp, "b");
      const double c2 = 0.5 * (1.0 - b * b - 3.0 * a * a);
      fp.derived["c"] = detail::derived_root(c2, norm_tol, "c");
      break;
    }
    case Family::La4: {
      const double a = detail::real_family_param(fp, "a");
      if (a < -norm_tol || a > 0.5 + norm_tol)
        throw DomainError("la4 requires a in [0, 1/2]");
      const double c2 = (1.0 - 4.0 * a * a) / 3.0;
      fp.derived["c"] = detail::derived_root(c2, norm_tol, "c");
      break;
    }
    case Family::L0_53:
    case Family::L0_71:
    case Family::L0_31_0_31:
      if (!fp.params.empty())
        throw DomainError(std::string(family_name(fp.family)) +
                          " takes no parameters");
      break;
  }
}

namespace detail {

inline int label4(const char* bits) {
  int v = 0;
  for (int i = 0; i < 4; ++i) v = (v << 1) | (bits[i] - '0');
  return v;
}

}  // namespace detail

/// The 8-amplitude even-weight state spanned by |0000>, |0011>, |0101>,
/// |0110>, |1111>, |1100>, |1010>, |1001> with coefficients (alpha, beta,
/// chi, delta, A, B, C, D) in that order.
inline PureState build_general_class1(const std::array<Complex, 8>& c,
                                      double norm_tol = 1e-10) {
  std::vector<Complex> amps(16);
  amps[detail::label4("0000")] = c[0];
  amps[detail::label4("0011")] = c[1];
  amps[detail::label4("0101")] = c[2];
  amps[detail::label4("0110")] = c[3];
  amps[detail::label4("1111")] = c[4];
  amps[detail::label4("1100")] = c[5];
  amps[detail::label4("1010")] = c[6];
  amps[detail::label4("1001")] = c[7];
  return PureState(4, std::move(amps), norm_tol);
}

/// Table mapping of the four class-I families onto the general even-weight
/// state. Requires resolved params.
inline std::array<Complex, 8> to_general_amplitudes(const FamilyParams& fp) {
  switch (fp.family) {
    case Family::Gabcd: {
      const Complex a = detail::family_param(fp, "a"), b = detail::family_param(fp, "b"),
                    c = detail::family_param(fp, "c"), d = detail::family_param(fp, "d");
      const Complex apd = 0.5 * (a + d), amd = 0.5 * (a - d);
      const Complex bpc = 0.5 * (b + c), bmc = 0.5 * (b - c);
      return {apd, amd, bpc, bmc, apd, amd, bpc, bmc};
    }
    case Family::Labc2: {
      const Complex a = detail::family_param(fp, "a"), b = detail::family_param(fp, "b"),
                    c = detail::family_param(fp, "c");
      const Complex apb = 0.5 * (a + b), amb = 0.5 * (a - b);
      const Complex d = fp.derived.at("d");
      return {apb, amb, c, d, apb, amb, c, 0.0};
    }
    case Family::La2b2: {
      const Complex a = detail::family_param(fp, "a"), b = detail::family_param(fp, "b");
      const Complex c = fp.derived.at("c");
      return {a, c, b, c, a, 0.0, b, 0.0};
    }
    case Family::La2_0_31: {
      const Complex a = detail::family_param(fp, "a");
      const Complex b = fp.derived.at("b");
      return {a, b, b, b, a, 0.0, 0.0, 0.0};
    }
    default:
      throw DomainError("family has no class-I general form");
  }
}

/// Builds the representative state of a family; resolves derived
/// coefficients in place.
inline PureState build_family(FamilyParams& fp, double norm_tol = 1e-10) {
  resolve_family(fp, norm_tol);
  using detail::label4;
  std::vector<Complex> amps(16);
  switch (fp.family) {
    case Family::Gabcd:
    case Family::Labc2:
    case Family::La2b2:
    case Family::La2_0_31:
      return build_general_class1(to_general_amplitudes(fp), norm_tol);
    case Family::Lab3: {
      const double a = detail::real_family_param(fp, "a");
      const double b = detail::real_family_param(fp, "b");
      const double c = fp.derived.at("c");
      const Complex ic_r2 = Complex(0.0, c / std::sqrt(2.0));
      amps[label4("0000")] = a;
      amps[label4("1111")] = a;
      amps[label4("0101")] = 0.5 * (a + b);
      amps[label4("1010")] = 0.5 * (a + b);
      amps[label4("0110")] = 0.5 * (a - b);
      amps[label4("1001")] = 0.5 * (a - b);
      amps[label4("0001")] = ic_r2;
      amps[label4("0010")] = ic_r2;
      amps[label4("0111")] = ic_r2;
      amps[label4("1011")] = ic_r2;
      break;
    }
    case Family::La4: {
      const double a = detail::real_family_param(fp, "a");
      const double c = fp.derived.at("c");
      amps[label4("0000")] = a;
      amps[label4("0101")] = a;
      amps[label4("1010")] = a;
      amps[label4("1111")] = a;
      amps[label4("0001")] = Complex(0.0, c);
      amps[label4("0110")] = c;
      amps[label4("1011")] = Complex(0.0, -c);
      break;
    }
    case Family::L0_53:
      for (const char* s : {"0000", "0101", "1000", "1110"}) amps[label4(s)] = 0.5;
      break;
    case Family::L0_71:
      for (const char* s : {"0000", "1011", "1101", "1110"}) amps[label4(s)] = 0.5;
      break;
    case Family::L0_31_0_31: {
      const double r = 1.0 / std::sqrt(2.0);
      amps[label4("0000")] = r;
      amps[label4("0111")] = r;
      break;
    }
    default:
      throw DomainError("unknown family");
  }
  return PureState(4, std::move(amps), norm_tol);
}

/// Closed forms for the general even-weight state with respect to qubit A.
struct Class1Oracle {
  double mu0 = 0.0;
  double mu1 = 0.0;
  double n_global = 0.0;
  double e4 = 0.0;
  double e2 = 0.0;
};

inline Class1Oracle oracle_class1(const std::array<Complex, 8>& c,
                                  double norm_tol = 1e-10) {
  double sum = 0.0;
  for (const Complex& z : c) sum += std::norm(z);
  if (std::abs(sum - 1.0) > norm_tol)
    throw NormalizationError("oracle_class1 requires normalized amplitudes");
  Class1Oracle o;
  o.mu0 = std::norm(c[0]) + std::norm(c[1]) + std::norm(c[2]) + std::norm(c[3]);
  o.mu1 = std::norm(c[4]) + std::norm(c[5]) + std::norm(c[6]) + std::norm(c[7]);
  o.n_global = 2.0 * std::sqrt(o.mu0 * o.mu1);
  if (o.n_global > 0.0) {
    o.e4 = 4.0 / o.n_global *
           (std::norm(c[4]) * std::norm(c[0]) + std::norm(c[5]) * std::norm(c[1]) +
            std::norm(c[6]) * std::norm(c[2]) + std::norm(c[7]) * std::norm(c[3]));
    o.e2 = o.n_global - o.e4;
  }
  return o;
}

/// Printed per-family pairwise closed forms with respect to qubit A, as
/// E-values and as N_G products. Requires resolved params.
///
/// Note on labc2: the source expression for N_G E_2^{AB} carries |c|^2 d^2
/// with coefficient 1, which contradicts both the pairwise sum rule
/// E_2 = E_2^{AB}+E_2^{AC}+E_2^{AD} and the general-state reduction; the
/// coefficient forced by either route is 4, used here.
struct PairwiseOracle {
  double n_global = 0.0;
  std::map<Qubit, double> e_pair;     // q -> E_2^{A-Aq}
  std::map<Qubit, double> ng_e_pair;  // q -> N_G E_2^{A-Aq}
};

inline PairwiseOracle oracle_pairwise(const FamilyParams& fp) {
  PairwiseOracle o;
  const Qubit B = 1, C = 2, D = 3;
  switch (fp.family) {
    case Family::Gabcd: {
      const Complex a = detail::family_param(fp, "a"), b = detail::family_param(fp, "b"),
                    c = detail::family_param(fp, "c"), d = detail::family_param(fp, "d");
      const double apd = std::norm(a + d), amd = std::norm(a - d);
      const double bpc = std::norm(b + c), bmc = std::norm(b - c);
      o.n_global = 1.0;
      o.e_pair[B] = 0.5 * (apd * amd + bpc * bmc);
      o.e_pair[C] = 0.5 * (apd * bpc + amd * bmc);
      o.e_pair[D] = 0.5 * (apd * bmc + amd * bpc);
      break;
    }
    case Family::Labc2: {
      const Complex a = detail::family_param(fp, "a"), b = detail::family_param(fp, "b"),
                    c = detail::family_param(fp, "c");
      const double d = fp.derived.at("d");
      const double apb = std::norm(a + b), amb = std::norm(a - b);
      const double c2 = std::norm(c), d2 = d * d;
      o.n_global = std::sqrt(std::max(0.0, 1.0 - d2 * d2));
      o.ng_e_pair[B] = 0.5 * apb * amb + 4.0 * c2 * d2;
      o.ng_e_pair[C] = 2.0 * apb * c2 + amb * d2;
      o.ng_e_pair[D] = 2.0 * amb * c2 + apb * d2;
      break;
    }
    case Family::La2b2: {
      const double a2 = std::norm(detail::family_param(fp, "a"));
      const double b2 = std::norm(detail::family_param(fp, "b"));
      const double c2 = fp.derived.at("c") * fp.derived.at("c");
      o.n_global = std::sqrt(std::max(0.0, 1.0 - 4.0 * c2 * c2));
      o.ng_e_pair[B] = 4.0 * c2 * (a2 + b2);
      o.ng_e_pair[C] = 8.0 * a2 * b2;
      o.ng_e_pair[D] = 4.0 * c2 * (a2 + b2);
      break;
    }
    case Family::La2_0_31: {
      const double a2 = std::norm(detail::family_param(fp, "a"));
      const double b2 = fp.derived.at("b") * fp.derived.at("b");
      o.n_global = 2.0 * std::sqrt(std::max(0.0, a2 - a2 * a2));
      o.ng_e_pair[B] = 4.0 * a2 * b2;
      o.ng_e_pair[C] = 4.0 * a2 * b2;
      o.ng_e_pair[D] = 4.0 * a2 * b2;
      break;
    }
    default:
      throw DomainError("oracle_pairwise: family is not class I");
  }
  for (Qubit q : {B, C, D}) {
    if (o.e_pair.count(q) && !o.ng_e_pair.count(q))
      o.ng_e_pair[q] = o.n_global * o.e_pair[q];
    else if (o.ng_e_pair.count(q) && !o.e_pair.count(q))
      o.e_pair[q] = o.n_global > 0.0 ? o.ng_e_pair[q] / o.n_global : 0.0;
  }
  return o;
}

/// The four printed la4 polynomials in a.
struct La4Oracle {
  double ng2 = 0.0;
  double ng_e4 = 0.0;
  double ng_e3 = 0.0;
  double ng_e2 = 0.0;
};

inline La4Oracle oracle_la4(double a) {
  if (a < -1e-12 || a > 0.5 + 1e-12) throw DomainError("oracle_la4: a must lie in [0, 1/2]");
  const double a2 = a * a, a4 = a2 * a2;
  La4Oracle o;
  o.ng2 = 8.0 / 9.0 * (a2 - 2.0 * a4 + 1.0);
  o.ng_e4 = 8.0 * a4;
  o.ng_e3 = 4.0 / 9.0 * (4.0 * a2 - 32.0 * a4 + 1.0);
  o.ng_e2 = 4.0 / 9.0 * (10.0 * a4 - 2.0 * a2 + 1.0);
  return o;
}

/// Printed squared global negativity for qubit A (the table column).
/// Requires resolved params.
inline double table1_ng2(const FamilyParams& fp) {
  switch (fp.family) {
    case Family::Gabcd:
      return 1.0;
    case Family::Labc2: {
      const double d = fp.derived.at("d");
      return 1.0 - d * d * d * d;
    }
    case Family::La2b2: {
      const double c = fp.derived.at("c");
      return 1.0 - 4.0 * c * c * c * c;
    }
    case Family::La2_0_31: {
      const double a2 = std::norm(detail::family_param(fp, "a"));
      return 4.0 * (a2 - a2 * a2);
    }
    default:
      throw DomainError("table1_ng2: family is not class I");
  }
}

/// A generic in-domain parameter choice for each family, used wherever "one
/// representative per family" is needed.
inline FamilyParams representative_params(Family f) {
  switch (f) {
    case Family::Gabcd:
      return {f, {{"a", 0.6}, {"b", 0.4}, {"c", 0.2}, {"d", std::sqrt(0.44)}}, {}};
    case Family::Labc2:
      return {f, {{"a", 0.5}, {"b", 0.3}, {"c", 0.4}}, {}};
    case Family::La2b2:
      return {f, {{"a", 0.5}, {"b", 0.4}}, {}};
    case Family::La2_0_31:
      return {f, {{"a", 0.5}}, {}};
    case Family::Lab3:
      return {f, {{"a", 0.4}, {"b", 0.5}}, {}};
    case Family::La4:
      return {f, {{"a", 0.3}}, {}};
    default:
      return {f, {}, {}};
  }
}

inline std::vector<Family> all_families() {
  return {Family::Gabcd, Family::Labc2, Family::La2b2,
          Family::La2_0_31, Family::Lab3, Family::La4,
          Family::L0_53, Family::L0_71, Family::L0_31_0_31};
}

/// Golden values reported for the three parameter-free states.
struct GoldenValue {
  Family family;
  Qubit qubit;
  std::string quantity;  // a key of NegativityReport::products
  double value;
};

inline std::vector<GoldenValue> fixed_state_expected() {
  const Qubit A = 0, B = 1, C = 2, D = 3;
  return {
      {Family::L0_53, A, "ng2", 0.75},
      {Family::L0_53, D, "ng2", 0.75},
      {Family::L0_53, A, "ng_e3_ABC", 0.25},
      {Family::L0_53, A, "ng_e3_ABD", 0.25},
      {Family::L0_53, D, "ng_e3_ACD", 0.25},
      {Family::L0_53, D, "ng_e2_BD", 0.25},
      {Family::L0_71, A, "ng2", 0.75},
      {Family::L0_71, A, "ng_e3", 0.75},
      {Family::L0_71, A, "ng_e3_ABC", 0.25},
      {Family::L0_71, A, "ng_e3_ABD", 0.25},
      {Family::L0_71, A, "ng_e3_ACD", 0.25},
      {Family::L0_71, D, "ng2", 1.0},
      {Family::L0_71, D, "ng_e3", 0.5},
      {Family::L0_71, D, "ng_e2", 0.5},
      {Family::L0_71, D, "ng_e3_ABD", 0.25},
      {Family::L0_71, D, "ng_e3_ACD", 0.25},
      {Family::L0_71, D, "ng_e2_BD", 0.25},
      {Family::L0_71, D, "ng_e2_CD", 0.25},
      {Family::L0_31_0_31, A, "ng2", 0.0},
      {Family::L0_31_0_31, B, "ng2", 1.0},
      {Family::L0_31_0_31, B, "ng_e3", 1.0},
      {Family::L0_31_0_31, C, "ng2", 1.0},
      {Family::L0_31_0_31, C, "ng_e3", 1.0},
      {Family::L0_31_0_31, D, "ng2", 1.0},
      {Family::L0_31_0_31, D, "ng_e3", 1.0},
  };
}

}  // namespace kneg
