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

#include <cmath>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "kneg/core.hpp"
#include "kneg/linalg.hpp"
#include "kneg/matrix.hpp"
#include "kneg/state.hpp"
#include "kneg/transpose.hpp"

namespace kneg {

/// Projector onto the span of eigenvectors with eigenvalue below
/// -neg_threshold. Basis-invariant, so degenerate negative eigenspaces need
/// no disambiguation.
struct NegativeProjector {
  int rank = 0;
  Matrix projector;
};

inline NegativeProjector negative_projector(const Matrix& m, const Tolerances& tol = {}) {
  EigenDecomposition eig = hermitian_eigen(m, tol);
  NegativeProjector out;
  out.projector = Matrix(m.dim());
  for (int k = 0; k < m.dim(); ++k) {
    if (eig.eigenvalues[k] >= -tol.neg_threshold) continue;
    ++out.rank;
    for (int i = 0; i < m.dim(); ++i) {
      const Complex vik = eig.eigenvectors(i, k);
      if (vik == Complex(0.0)) continue;
      for (int j = 0; j < m.dim(); ++j)
        out.projector(i, j) += vik * std::conj(eig.eigenvectors(j, k));
    }
  }
  return out;
}

namespace detail {

inline double clamp_negativity(double value, double neg_threshold) {
  return std::abs(value) <= neg_threshold ? 0.0 : value;
}

inline double negativity_from_spectrum(const std::vector<double>& eigenvalues,
                                       double prefactor, double neg_threshold) {
  double s = 0.0;
  for (double lambda : eigenvalues)
    if (lambda < -neg_threshold) s -= lambda;
  return clamp_negativity(prefactor * s, neg_threshold);
}

}  // namespace detail

/// N_G for a bipartite split S | complement: (||rho^T_S||_1 - 1) / (2^|S|-1).
inline double global_negativity(const Matrix& rho, const std::vector<Qubit>& subset,
                                int n_qubits, const Tolerances& tol = {}) {
  EigenDecomposition eig = hermitian_eigen(global_pt(rho, subset, n_qubits), tol);
  const double d_s = static_cast<double>(dim_of(static_cast<int>(subset.size())));
  return detail::negativity_from_spectrum(eig.eigenvalues, 2.0 / (d_s - 1.0),
                                          tol.neg_threshold);
}

/// N_K: negativity of the K-way partial transpose with respect to qubit p.
inline double kway_negativity(const Matrix& rho, Qubit p, int k, int n_qubits,
                              const Tolerances& tol = {}) {
  EigenDecomposition eig = hermitian_eigen(kway_pt(rho, p, k, n_qubits), tol);
  return detail::negativity_from_spectrum(eig.eigenvalues, 2.0, tol.neg_threshold);
}

namespace detail {

/// -2 tr(P^- m), the contribution of m to the global negativity of qubit p.
inline double projector_contribution(const NegativeProjector& neg, const Matrix& m) {
  if (neg.rank == 0) return 0.0;
  const double v = -2.0 * real_trace_product(neg.projector, m);
  return v == 0.0 ? 0.0 : v;  // normalize negative zero
}

}  // namespace detail

/// E_K^p evaluated on the negative eigenspace of the global partial
/// transpose with respect to p.
inline double partial_kway_negativity(const Matrix& rho, Qubit p, int k, int n_qubits,
                                      const Tolerances& tol = {}) {
  NegativeProjector neg = negative_projector(global_pt(rho, {p}, n_qubits), tol);
  return detail::projector_contribution(neg, kway_pt(rho, p, k, n_qubits));
}

/// E_0^p: the untransposed density matrix evaluated on the same eigenspace.
/// Always <= 0 for a valid density matrix.
inline double e_zero(const Matrix& rho, Qubit p, int n_qubits, const Tolerances& tol = {}) {
  NegativeProjector neg = negative_projector(global_pt(rho, {p}, n_qubits), tol);
  return detail::projector_contribution(neg, rho);
}

/// E_2^{p-pq}: pair-selective contribution.
inline double partial_pair_negativity(const Matrix& rho, Qubit p, Qubit q, int n_qubits,
                                      const Tolerances& tol = {}) {
  NegativeProjector neg = negative_projector(global_pt(rho, {p}, n_qubits), tol);
  return detail::projector_contribution(neg, pair_pt(rho, p, q, n_qubits));
}

/// E_3^{p-pqr}: triple-selective contribution.
inline double partial_triple_negativity(const Matrix& rho, Qubit p, Qubit q, Qubit r,
                                        int n_qubits, const Tolerances& tol = {}) {
  NegativeProjector neg = negative_projector(global_pt(rho, {p}, n_qubits), tol);
  return detail::projector_contribution(neg, triple_pt(rho, p, q, r, n_qubits));
}

/// Every negativity-type quantity for one state and one reference qubit,
/// plus the residuals of the decomposition identities they must satisfy.
struct NegativityReport {
  Qubit reference = 0;
  double n_global = 0.0;
  int negative_rank = 0;
  double mu0 = 0.0;
  double mu1 = 0.0;
  std::map<int, double> n_kway;   // K -> N_K (optional, see ReportOptions)
  std::map<int, double> e_kway;   // K -> E_K
  double e0 = 0.0;
  std::map<Qubit, double> e_pair;                     // q -> E_2^{p-pq}
  std::map<std::pair<Qubit, Qubit>, double> e_triple; // {q,r} -> E_3^{p-pqr}
  std::map<std::string, double> products;
  std::map<std::string, double> residuals;
};

struct ReportOptions {
  /// Diagonalize each K-way transpose to fill n_kway. Sweeps over large
  /// grids turn this off when no N_K column was requested.
  bool with_kway_spectra = true;
  /// Compute the pair/triple selective transposes, their E contributions and
  /// the split residuals. Sweeps turn this off when no such column was
  /// requested; everything else in the report is unaffected.
  bool with_selective_splits = true;
};

inline std::string pair_key(Qubit p, Qubit q) {
  Qubit lo = std::min(p, q), hi = std::max(p, q);
  return std::string() + qubit_name(lo) + qubit_name(hi);
}

inline std::string triple_key(Qubit p, Qubit q, Qubit r) {
  Qubit a = p, b = q, c = r;
  if (a > b) std::swap(a, b);
  if (b > c) std::swap(b, c);
  if (a > b) std::swap(a, b);
  return std::string() + qubit_name(a) + qubit_name(b) + qubit_name(c);
}

inline NegativityReport build_report(const PureState& psi, Qubit p,
                                     const Tolerances& tol = {},
                                     const ReportOptions& opts = {}) {
  const int n = psi.n_qubits();
  if (n != 4) throw DomainError("build_report: a 4-qubit state is required");
  require_valid_qubit(p, n);

  const Matrix rho = density_from_state(psi);
  const Matrix gpt = global_pt(rho, {p}, n);
  const EigenDecomposition geig = hermitian_eigen(gpt, tol);

  NegativityReport rep;
  rep.reference = p;
  rep.n_global =
      detail::negativity_from_spectrum(geig.eigenvalues, 2.0, tol.neg_threshold);

  NegativeProjector neg;
  neg.projector = Matrix(rho.dim());
  for (int k = 0; k < rho.dim(); ++k) {
    if (geig.eigenvalues[k] >= -tol.neg_threshold) continue;
    ++neg.rank;
    for (int i = 0; i < rho.dim(); ++i)
      for (int j = 0; j < rho.dim(); ++j)
        neg.projector(i, j) +=
            geig.eigenvectors(i, k) * std::conj(geig.eigenvectors(j, k));
  }
  rep.negative_rank = neg.rank;

  auto [mu0, mu1] = schmidt_pair(psi, p);
  rep.mu0 = mu0;
  rep.mu1 = mu1;

  std::map<int, Matrix> kpt;
  for (int k = 2; k <= 4; ++k) {
    kpt.emplace(k, kway_pt(rho, p, k, n));
    rep.e_kway[k] = detail::projector_contribution(neg, kpt.at(k));
    if (opts.with_kway_spectra) {
      EigenDecomposition keig = hermitian_eigen(kpt.at(k), tol);
      rep.n_kway[k] =
          detail::negativity_from_spectrum(keig.eigenvalues, 2.0, tol.neg_threshold);
    }
  }
  rep.e0 = detail::projector_contribution(neg, rho);

  std::map<Qubit, Matrix> ppt;
  std::map<std::pair<Qubit, Qubit>, Matrix> tpt;
  if (opts.with_selective_splits) {
    for (Qubit q = 0; q < n; ++q) {
      if (q == p) continue;
      ppt.emplace(q, pair_pt(rho, p, q, n));
      rep.e_pair[q] = detail::projector_contribution(neg, ppt.at(q));
    }
    for (Qubit q = 0; q < n; ++q) {
      if (q == p) continue;
      for (Qubit r = q + 1; r < n; ++r) {
        if (r == p) continue;
        tpt.emplace(std::make_pair(q, r), triple_pt(rho, p, q, r, n));
        rep.e_triple[{q, r}] = detail::projector_contribution(neg, tpt.at({q, r}));
      }
    }
  }

  const double ng = rep.n_global;
  rep.products["ng2"] = ng * ng;
  for (int k = 2; k <= 4; ++k) {
    rep.products["ng_e" + std::to_string(k)] = ng * rep.e_kway[k];
    rep.products["ng_e" + std::to_string(k) + "_minus_e0"] =
        ng * (rep.e_kway[k] - rep.e0);
  }
  for (const auto& [q, e] : rep.e_pair)
    rep.products["ng_e2_" + pair_key(p, q)] = ng * e;
  for (const auto& [qr, e] : rep.e_triple)
    rep.products["ng_e3_" + triple_key(p, qr.first, qr.second)] = ng * e;

  // Identity residuals. Eq. (3n) and the triple split are exact elementwise;
  // the pair split fails on imaginary parts of single-flip coherences, so it
  // is recorded here and only asserted where it must hold.
  Matrix sum_k = kpt.at(2) + kpt.at(3) + kpt.at(4) - 2.0 * rho;
  rep.residuals["eq3n"] = max_abs_diff(gpt, sum_k);

  double e_sum = 0.0;
  for (int k = 2; k <= 4; ++k) e_sum += rep.e_kway[k] - rep.e0;
  rep.residuals["eq5n"] = std::abs(rep.n_global - (e_sum + rep.e0));

  if (opts.with_selective_splits) {
    Matrix sum_pairs(rho.dim());
    for (const auto& [q, m] : ppt) sum_pairs += m;
    sum_pairs -= 2.0 * rho;
    rep.residuals["ro2tsum"] = max_abs_diff(kpt.at(2), sum_pairs);

    Matrix sum_triples(rho.dim());
    for (const auto& [qr, m] : tpt) sum_triples += m;
    sum_triples -= 2.0 * rho;
    rep.residuals["ro3tsum"] = max_abs_diff(kpt.at(3), sum_triples);

    double pair_split = rep.e_kway[2] - rep.e0;
    for (const auto& [q, e] : rep.e_pair) pair_split -= e - rep.e0;
    rep.residuals["pair_split"] = std::abs(pair_split);

    double triple_split = rep.e_kway[3] - rep.e0;
    for (const auto& [qr, e] : rep.e_triple) triple_split -= e - rep.e0;
    rep.residuals["triple_split"] = std::abs(triple_split);
  }

  rep.residuals["schmidt"] = std::abs(ng - 2.0 * std::sqrt(mu0 * mu1));
  rep.residuals["monogamy_eq"] =
      std::abs(ng * ng - (ng * rep.e_kway[4] + ng * rep.e_kway[2]));
  return rep;
}

struct MonogamyCheck {
  double lhs4 = 0.0;  // N_G * E_4
  double lhs2 = 0.0;  // N_G * E_2
  double rhs = 0.0;   // (N_G)^2
  bool holds = false;
};

inline MonogamyCheck monogamy_check(const NegativityReport& rep) {
  MonogamyCheck mc;
  mc.lhs4 = rep.n_global * rep.e_kway.at(4);
  mc.lhs2 = rep.n_global * rep.e_kway.at(2);
  mc.rhs = rep.n_global * rep.n_global;
  mc.holds = mc.lhs4 <= mc.rhs + kReportTol && mc.lhs2 <= mc.rhs + kReportTol;
  return mc;
}

}  // namespace kneg
