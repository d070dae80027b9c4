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

#include <array>
#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "kneg/core.hpp"

namespace kneg {

/// Pure state of n qubits as a unit-norm amplitude vector over the
/// computational basis. Basis label I carries qubit 0 (party A) in its most
/// significant bit.
class PureState {
 public:
  PureState(int n_qubits, std::vector<Complex> amplitudes, double norm_tol = 1e-10)
      : n_(n_qubits), amps_(std::move(amplitudes)) {
    if (n_ < 1) throw DomainError("state needs at least one qubit");
    if (amps_.size() != static_cast<size_t>(dim_of(n_)))
      throw DomainError("amplitude count does not match qubit count");
    double norm2 = 0.0;
    for (const Complex& z : amps_) {
      if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
        throw DomainError("non-finite amplitude");
      norm2 += std::norm(z);
    }
    if (std::abs(norm2 - 1.0) > norm_tol)
      throw NormalizationError("state is not normalized");
  }

  /// Rescales the given amplitudes to unit norm first.
  static PureState normalized(int n_qubits, std::vector<Complex> amplitudes) {
    double norm2 = 0.0;
    for (const Complex& z : amplitudes) norm2 += std::norm(z);
    if (norm2 <= 0.0) throw NormalizationError("cannot normalize the zero vector");
    double inv = 1.0 / std::sqrt(norm2);
    for (Complex& z : amplitudes) z *= inv;
    return PureState(n_qubits, std::move(amplitudes));
  }

  /// Computational basis ket from a bit string such as "0101" (qubit A first).
  static PureState basis(const std::string& bits) {
    int n = static_cast<int>(bits.size());
    std::vector<Complex> amps(dim_of(n));
    int label = 0;
    for (char c : bits) {
      if (c != '0' && c != '1') throw DomainError("basis string must be 0/1");
      label = (label << 1) | (c - '0');
    }
    amps[label] = 1.0;
    return PureState(n, std::move(amps));
  }

  int n_qubits() const { return n_; }
  int dim() const { return dim_of(n_); }
  const std::vector<Complex>& amplitudes() const { return amps_; }
  const Complex& amplitude(int label) const { return amps_[label]; }

 private:
  int n_;
  std::vector<Complex> amps_;
};

/// Applies a single-qubit unitary (row-major 2x2) to qubit q.
inline PureState apply_single_qubit_unitary(const PureState& psi, Qubit q,
                                            const std::array<Complex, 4>& u) {
  int n = psi.n_qubits();
  require_valid_qubit(q, n);
  int mask = qubit_mask(q, n);
  std::vector<Complex> out(psi.dim());
  for (int I = 0; I < psi.dim(); ++I) {
    if (I & mask) continue;
    int J = I | mask;
    Complex a0 = psi.amplitude(I);
    Complex a1 = psi.amplitude(J);
    out[I] = u[0] * a0 + u[1] * a1;
    out[J] = u[2] * a0 + u[3] * a1;
  }
  return PureState(n, std::move(out));
}

/// Relabels qubits: qubit q of the input becomes qubit perm[q] of the output.
inline PureState permute_qubits(const PureState& psi, const std::vector<Qubit>& perm) {
  int n = psi.n_qubits();
  if (static_cast<int>(perm.size()) != n) throw DomainError("permutation size mismatch");
  subset_mask(perm, n);  // validates range and distinctness
  std::vector<Complex> out(psi.dim());
  for (int I = 0; I < psi.dim(); ++I) {
    int J = 0;
    for (Qubit q = 0; q < n; ++q)
      if (bit_of(I, q, n)) J |= qubit_mask(perm[q], n);
    out[J] = psi.amplitude(I);
  }
  return PureState(n, std::move(out));
}

}  // namespace kneg
