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

#include <bit>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace kneg {

using Complex = std::complex<double>;

/// Qubit index. Qubit 0 is party A and occupies the most significant bit of
/// a basis label, so a four-qubit label reads |i_A i_B i_C i_D>.
using Qubit = int;

struct Tolerances {
  double norm_tol = 1e-10;
  double herm_tol = 1e-10;
  double trace_tol = 1e-10;
  double eig_tol = 1e-12;
  double neg_threshold = 1e-9;
};

/// Residual bound used when asserting the decomposition identities; looser
/// than eig_tol to absorb accumulation across 16x16 eigensolves.
inline constexpr double kReportTol = 1e-8;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Input state or parameter set is not normalized.
struct NormalizationError : Error {
  using Error::Error;
};

/// Parameter or qubit selection outside its valid domain.
struct DomainError : Error {
  using Error::Error;
};

/// An operation received an operand violating its contract (e.g. a
/// non-Hermitian matrix where a Hermitian one is required).
struct ContractError : Error {
  using Error::Error;
};

/// Numerical failure (e.g. eigensolver did not converge).
struct NumericalError : Error {
  using Error::Error;
};

inline int dim_of(int n_qubits) { return 1 << n_qubits; }

/// Bit position of qubit q inside an n-qubit basis label (MSB-first).
inline int bit_position(int n_qubits, Qubit q) { return n_qubits - 1 - q; }

inline int bit_of(int label, Qubit q, int n_qubits) {
  return (label >> bit_position(n_qubits, q)) & 1;
}

inline int qubit_mask(Qubit q, int n_qubits) {
  return 1 << bit_position(n_qubits, q);
}

inline int flip_qubit(int label, Qubit q, int n_qubits) {
  return label ^ qubit_mask(q, n_qubits);
}

inline int subset_mask(const std::vector<Qubit>& qubits, int n_qubits) {
  int mask = 0;
  for (Qubit q : qubits) {
    if (q < 0 || q >= n_qubits) throw DomainError("qubit index out of range");
    int m = qubit_mask(q, n_qubits);
    if (mask & m) throw DomainError("duplicate qubit in subset");
    mask |= m;
  }
  return mask;
}

inline int popcount(int x) { return std::popcount(static_cast<uint32_t>(x)); }

inline char qubit_name(Qubit q) { return static_cast<char>('A' + q); }

inline Qubit qubit_from_name(char c, int n_qubits) {
  if (c >= 'a' && c <= 'z') c = static_cast<char>(c - 'a' + 'A');
  Qubit q = c - 'A';
  if (q < 0 || q >= n_qubits) throw DomainError(std::string("unknown qubit '") + c + "'");
  return q;
}

inline void require_valid_qubit(Qubit q, int n_qubits) {
  if (q < 0 || q >= n_qubits) throw DomainError("qubit index out of range");
}

}  // namespace kneg
