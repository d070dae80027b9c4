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
#include <numeric>
#include <utility>
#include <vector>

#include "kneg/core.hpp"
#include "kneg/matrix.hpp"
#include "kneg/state.hpp"

namespace kneg {

struct EigenDecomposition {
  std::vector<double> eigenvalues;  // ascending
  Matrix eigenvectors;              // orthonormal columns, same order
};

namespace detail {

/// One cyclic Jacobi rotation zeroing element (p, q) of the Hermitian
/// matrix h, accumulating the rotation into v.
inline void jacobi_rotate(Matrix& h, Matrix& v, int p, int q) {
  const Complex hpq = h(p, q);
  const double abs_hpq = std::abs(hpq);
  if (abs_hpq == 0.0) return;
  const Complex phase = hpq / abs_hpq;  // e^{i beta}
  const double app = h(p, p).real();
  const double aqq = h(q, q).real();
  const double tau = (app - aqq) / (2.0 * abs_hpq);
  const double t = (tau >= 0.0) ? 1.0 / (tau + std::sqrt(tau * tau + 1.0))
                                : -1.0 / (-tau + std::sqrt(tau * tau + 1.0));
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;
  const Complex spe = s * phase;             // s e^{i beta}
  const Complex sme = s * std::conj(phase);  // s e^{-i beta}

  const int n = h.dim();
  // Columns: M <- M R with R = [[c, -s e^{ib}], [s e^{-ib}, c]] at (p, q).
  for (int k = 0; k < n; ++k) {
    const Complex kp = h(k, p), kq = h(k, q);
    h(k, p) = c * kp + sme * kq;
    h(k, q) = -spe * kp + c * kq;
  }
  // Rows: M <- R^dag M.
  for (int k = 0; k < n; ++k) {
    const Complex pk = h(p, k), qk = h(q, k);
    h(p, k) = c * pk + spe * qk;
    h(q, k) = -sme * pk + c * qk;
  }
  for (int k = 0; k < n; ++k) {
    const Complex kp = v(k, p), kq = v(k, q);
    v(k, p) = c * kp + sme * kq;
    v(k, q) = -spe * kp + c * kq;
  }
  h(p, q) = 0.0;
  h(q, p) = 0.0;
  h(p, p) = Complex(h(p, p).real(), 0.0);
  h(q, q) = Complex(h(q, q).real(), 0.0);
}

inline double off_diagonal_norm(const Matrix& h) {
  double s = 0.0;
  for (int i = 0; i < h.dim(); ++i)
    for (int j = i + 1; j < h.dim(); ++j) s += std::norm(h(i, j));
  return std::sqrt(2.0 * s);
}

}  // namespace detail

/// Full spectrum of a Hermitian matrix by cyclic Jacobi rotations.
/// Deterministic for identical input; at most 100 sweeps.
inline EigenDecomposition hermitian_eigen(const Matrix& m, const Tolerances& tol = {}) {
  if (!m.is_hermitian(tol.herm_tol))
    throw ContractError("hermitian_eigen: input is not Hermitian");

  const int n = m.dim();
  Matrix h = m;
  Matrix v = Matrix::identity(n);
  const double scale = std::max(1.0, m.frobenius_norm());

  bool converged = false;
  for (int sweep = 0; sweep < 100; ++sweep) {
    if (detail::off_diagonal_norm(h) <= tol.eig_tol * scale) {
      converged = true;
      break;
    }
    for (int p = 0; p < n - 1; ++p)
      for (int q = p + 1; q < n; ++q) detail::jacobi_rotate(h, v, p, q);
  }
  if (!converged && detail::off_diagonal_norm(h) > tol.eig_tol * scale)
    throw NumericalError("hermitian_eigen: no convergence within 100 sweeps");

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return h(a, a).real() < h(b, b).real(); });

  EigenDecomposition out;
  out.eigenvalues.resize(n);
  out.eigenvectors = Matrix(n);
  for (int j = 0; j < n; ++j) {
    out.eigenvalues[j] = h(order[j], order[j]).real();
    for (int i = 0; i < n; ++i) out.eigenvectors(i, j) = v(i, order[j]);
  }
  return out;
}

/// Sum of absolute eigenvalues of a Hermitian matrix.
inline double trace_norm(const Matrix& m, const Tolerances& tol = {}) {
  EigenDecomposition eig = hermitian_eigen(m, tol);
  double s = 0.0;
  for (double lambda : eig.eigenvalues) s += std::abs(lambda);
  return s;
}

/// Rank-1 projector |psi><psi|.
inline Matrix density_from_state(const PureState& psi) {
  Matrix rho(psi.dim());
  for (int i = 0; i < psi.dim(); ++i) {
    const Complex ai = psi.amplitude(i);
    if (ai == Complex(0.0)) continue;
    for (int j = 0; j < psi.dim(); ++j) rho(i, j) = ai * std::conj(psi.amplitude(j));
  }
  return rho;
}

/// Traces out every qubit not in `keep`; kept qubits keep their relative
/// order. `keep` must be a nonempty subset of 0..n-1.
inline Matrix partial_trace(const Matrix& m, const std::vector<Qubit>& keep, int n_qubits) {
  if (keep.empty()) throw DomainError("partial_trace: empty keep set");
  if (m.dim() != dim_of(n_qubits)) throw DomainError("partial_trace: dimension mismatch");
  subset_mask(keep, n_qubits);
  std::vector<Qubit> kept = keep;
  std::sort(kept.begin(), kept.end());

  std::vector<Qubit> traced;
  for (Qubit q = 0; q < n_qubits; ++q)
    if (std::find(kept.begin(), kept.end(), q) == kept.end()) traced.push_back(q);

  const int k = static_cast<int>(kept.size());
  const int t = n_qubits - k;
  Matrix out(dim_of(k));

  auto embed = [&](int sub, const std::vector<Qubit>& qubits) {
    int label = 0;
    const int nq = static_cast<int>(qubits.size());
    for (int b = 0; b < nq; ++b)
      if ((sub >> (nq - 1 - b)) & 1) label |= qubit_mask(qubits[b], n_qubits);
    return label;
  };

  for (int r = 0; r < dim_of(k); ++r) {
    const int rk = embed(r, kept);
    for (int c = 0; c < dim_of(k); ++c) {
      const int ck = embed(c, kept);
      Complex sum = 0.0;
      for (int x = 0; x < dim_of(t); ++x) {
        const int xt = embed(x, traced);
        sum += m(rk | xt, ck | xt);
      }
      out(r, c) = sum;
    }
  }
  return out;
}

/// Eigenvalues (mu0 >= mu1) of the single-qubit reduced density matrix of a
/// pure state, from the closed form for a 2x2 Hermitian matrix. Kept
/// independent of the Jacobi solver so the Schmidt identity can serve as a
/// cross-check of the eigensolver path.
inline std::pair<double, double> schmidt_pair(const PureState& psi, Qubit q) {
  require_valid_qubit(q, psi.n_qubits());
  Matrix red = partial_trace(density_from_state(psi), {q}, psi.n_qubits());
  const double a = red(0, 0).real();
  const double d = red(1, 1).real();
  const double b2 = std::norm(red(0, 1));
  const double disc = std::sqrt((a - d) * (a - d) + 4.0 * b2);
  double mu0 = 0.5 * (a + d + disc);
  double mu1 = 0.5 * (a + d - disc);
  mu0 = std::clamp(mu0, 0.0, 1.0);
  mu1 = std::clamp(mu1, 0.0, 1.0);
  return {mu0, mu1};
}

}  // namespace kneg
