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

#include <vector>

#include "kneg/core.hpp"
#include "kneg/matrix.hpp"

namespace kneg {

/// Classification of a matrix element (I, J) by how many qubits flip between
/// the bra and ket labels, and whether a chosen qubit p is among them.
struct FlipClass {
  int count;
  bool p_flipped;
};

inline FlipClass flip_class(int bra, int ket, Qubit p, int n_qubits) {
  if (bra < 0 || bra >= dim_of(n_qubits) || ket < 0 || ket >= dim_of(n_qubits))
    throw DomainError("flip_class: basis label out of range");
  require_valid_qubit(p, n_qubits);
  const int x = bra ^ ket;
  return {popcount(x), (x & qubit_mask(p, n_qubits)) != 0};
}

/// Global partial transpose: exchanges the bits of subset S between bra and
/// ket labels of every element. S must be a nonempty proper subset.
inline Matrix global_pt(const Matrix& rho, const std::vector<Qubit>& subset, int n_qubits) {
  if (rho.dim() != dim_of(n_qubits)) throw DomainError("global_pt: dimension mismatch");
  const int mask = subset_mask(subset, n_qubits);
  if (mask == 0 || mask == dim_of(n_qubits) - 1)
    throw DomainError("global_pt: subset must be nonempty and proper");
  Matrix out(rho.dim());
  for (int i = 0; i < rho.dim(); ++i)
    for (int j = 0; j < rho.dim(); ++j) {
      const int ir = (i & ~mask) | (j & mask);
      const int jr = (j & ~mask) | (i & mask);
      out(i, j) = rho(ir, jr);
    }
  return out;
}

/// K-way partial transpose with respect to qubit p. For K > 2 the p-indices
/// of exactly the flip-count-K elements with p flipped are exchanged; the
/// K = 2 variant bundles flip counts 1 and 2 (this conjugates single-flip
/// p-coherences, which is what keeps the transpose Hermitian for complex
/// states).
inline Matrix kway_pt(const Matrix& rho, Qubit p, int k, int n_qubits) {
  if (rho.dim() != dim_of(n_qubits)) throw DomainError("kway_pt: dimension mismatch");
  require_valid_qubit(p, n_qubits);
  if (k < 2 || k > n_qubits) throw DomainError("kway_pt: K out of range");
  const int pmask = qubit_mask(p, n_qubits);
  Matrix out(rho.dim());
  for (int i = 0; i < rho.dim(); ++i)
    for (int j = 0; j < rho.dim(); ++j) {
      const int x = i ^ j;
      const int flips = popcount(x);
      const bool selected =
          (x & pmask) && (k == 2 ? (flips == 1 || flips == 2) : flips == k);
      out(i, j) = selected ? rho(i ^ pmask, j ^ pmask) : rho(i, j);
    }
  return out;
}

/// Pair-selective transpose: touches only elements whose flips are confined
/// to {p, q}; among those, elements with p flipped get their p-indices
/// exchanged (a q-only flip transposes trivially).
inline Matrix pair_pt(const Matrix& rho, Qubit p, Qubit q, int n_qubits) {
  if (rho.dim() != dim_of(n_qubits)) throw DomainError("pair_pt: dimension mismatch");
  require_valid_qubit(p, n_qubits);
  require_valid_qubit(q, n_qubits);
  if (p == q) throw DomainError("pair_pt: qubits must differ");
  const int pmask = qubit_mask(p, n_qubits);
  const int pair = pmask | qubit_mask(q, n_qubits);
  Matrix out(rho.dim());
  for (int i = 0; i < rho.dim(); ++i)
    for (int j = 0; j < rho.dim(); ++j) {
      const int x = i ^ j;
      const bool selected = x != 0 && (x & ~pair) == 0 && (x & pmask);
      out(i, j) = selected ? rho(i ^ pmask, j ^ pmask) : rho(i, j);
    }
  return out;
}

/// Triple-selective transpose: touches exactly the elements where p, q, r
/// all flip and every other qubit is unflipped. Requiring the remaining
/// qubits unflipped is what makes the three triple transposes sum to the
/// 3-way transpose plus 2 rho as an exact identity.
inline Matrix triple_pt(const Matrix& rho, Qubit p, Qubit q, Qubit r, int n_qubits) {
  if (rho.dim() != dim_of(n_qubits)) throw DomainError("triple_pt: dimension mismatch");
  require_valid_qubit(p, n_qubits);
  require_valid_qubit(q, n_qubits);
  require_valid_qubit(r, n_qubits);
  if (p == q || p == r || q == r) throw DomainError("triple_pt: qubits must be distinct");
  const int pmask = qubit_mask(p, n_qubits);
  const int triple = pmask | qubit_mask(q, n_qubits) | qubit_mask(r, n_qubits);
  Matrix out(rho.dim());
  for (int i = 0; i < rho.dim(); ++i)
    for (int j = 0; j < rho.dim(); ++j) {
      const bool selected = (i ^ j) == triple;
      out(i, j) = selected ? rho(i ^ pmask, j ^ pmask) : rho(i, j);
    }
  return out;
}

/// Which selective transposition to apply.
struct TransposeSpec {
  enum class Mode { Global, KWay, PairSelective, TripleSelective };

  Mode mode;
  std::vector<Qubit> subset;  // Global
  Qubit p = 0;
  Qubit q = 0;
  Qubit r = 0;
  int k = 0;

  static TransposeSpec global(std::vector<Qubit> subset) {
    TransposeSpec s;
    s.mode = Mode::Global;
    s.subset = std::move(subset);
    return s;
  }
  static TransposeSpec kway(Qubit p, int k) {
    TransposeSpec s;
    s.mode = Mode::KWay;
    s.p = p;
    s.k = k;
    return s;
  }
  static TransposeSpec pair_selective(Qubit p, Qubit q) {
    TransposeSpec s;
    s.mode = Mode::PairSelective;
    s.p = p;
    s.q = q;
    return s;
  }
  static TransposeSpec triple_selective(Qubit p, Qubit q, Qubit r) {
    TransposeSpec s;
    s.mode = Mode::TripleSelective;
    s.p = p;
    s.q = q;
    s.r = r;
    return s;
  }

  Matrix apply(const Matrix& rho, int n_qubits) const {
    switch (mode) {
      case Mode::Global:
        return global_pt(rho, subset, n_qubits);
      case Mode::KWay:
        return kway_pt(rho, p, k, n_qubits);
      case Mode::PairSelective:
        return pair_pt(rho, p, q, n_qubits);
      case Mode::TripleSelective:
        return triple_pt(rho, p, q, r, n_qubits);
    }
    throw DomainError("unknown transpose mode");
  }
};

}  // namespace kneg
