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
#include <optional>
#include <vector>

#include "kneg/core.hpp"
#include "kneg/linalg.hpp"
#include "kneg/negativity.hpp"
#include "kneg/state.hpp"

namespace kneg {

/// One branch of a computational-basis measurement of a single qubit.
/// `collapsed` is empty for a zero-probability outcome.
struct MeasurementOutcome {
  int outcome = 0;
  double probability = 0.0;
  std::optional<PureState> collapsed;  // state of the remaining qubits
};

/// Projective Z-basis measurement of qubit p. The two outcome probabilities
/// sum to 1 and each collapsed state is normalized.
inline std::array<MeasurementOutcome, 2> measure_qubit(const PureState& psi, Qubit p,
                                                       double neg_threshold = 1e-9) {
  const int n = psi.n_qubits();
  require_valid_qubit(p, n);
  if (n < 2) throw DomainError("measure_qubit: nothing would remain");

  std::array<MeasurementOutcome, 2> out;
  const int mask = qubit_mask(p, n);
  for (int bit = 0; bit < 2; ++bit) {
    std::vector<Complex> branch(dim_of(n - 1));
    double prob = 0.0;
    for (int I = 0; I < psi.dim(); ++I) {
      if (((I & mask) != 0) != (bit == 1)) continue;
      // Drop qubit p's bit, keeping the order of the remaining qubits.
      const int high = I >> (bit_position(n, p) + 1);
      const int low = I & (mask - 1);
      branch[(high << bit_position(n, p)) | low] = psi.amplitude(I);
      prob += std::norm(psi.amplitude(I));
    }
    out[bit].outcome = bit;
    out[bit].probability = prob;
    if (prob > neg_threshold)
      out[bit].collapsed = PureState::normalized(n - 1, std::move(branch));
  }
  return out;
}

/// Re-embeds a collapsed (n-1)-qubit state as an n-qubit state with qubit p
/// fixed to `bit`.
inline PureState embed_measured(const PureState& collapsed, Qubit p, int bit) {
  const int n = collapsed.n_qubits() + 1;
  require_valid_qubit(p, n);
  std::vector<Complex> amps(dim_of(n));
  const int pos = bit_position(n, p);
  for (int r = 0; r < collapsed.dim(); ++r) {
    const int high = r >> pos;
    const int low = r & ((1 << pos) - 1);
    const int I = (high << (pos + 1)) | (bit << pos) | low;
    amps[I] = collapsed.amplitude(r);
  }
  return PureState(n, std::move(amps));
}

/// Squared global negativity of the pure-state decomposition obtained by
/// measuring `measured`: sum over outcomes of (P_k times the negativity of
/// the collapsed state with respect to `reference`) squared.
inline double psd_negativity_sq(const PureState& psi, Qubit measured, Qubit reference,
                                const Tolerances& tol = {}) {
  const int n = psi.n_qubits();
  require_valid_qubit(measured, n);
  require_valid_qubit(reference, n);
  if (measured == reference)
    throw DomainError("psd_negativity_sq: measured and reference qubits must differ");

  const Qubit ref_after = reference > measured ? reference - 1 : reference;
  double total = 0.0;
  for (const MeasurementOutcome& mo : measure_qubit(psi, measured, tol.neg_threshold)) {
    if (!mo.collapsed) continue;
    auto [mu0, mu1] = schmidt_pair(*mo.collapsed, ref_after);
    const double term = mo.probability * 2.0 * std::sqrt(mu0 * mu1);
    total += term * term;
  }
  return total;
}

struct ReducedBoundCheck {
  double lhs = 0.0;  // squared negativity of the traced-out mixed state
  double rhs = 0.0;  // sum of the two surviving pairwise products
  bool holds = false;
};

/// Checks [N^{ref}(Tr_traced rho)]^2 <= sum of the two surviving pairwise
/// products N_G E_2^{ref-ref q}, q running over the untouched qubits.
inline ReducedBoundCheck reduced_negativity_bound_check(const PureState& psi, Qubit traced,
                                                        Qubit reference,
                                                        const Tolerances& tol = {}) {
  const int n = psi.n_qubits();
  require_valid_qubit(traced, n);
  require_valid_qubit(reference, n);
  if (traced == reference)
    throw DomainError("reduced_negativity_bound_check: qubits must differ");

  std::vector<Qubit> keep;
  for (Qubit q = 0; q < n; ++q)
    if (q != traced) keep.push_back(q);
  const Matrix reduced = partial_trace(density_from_state(psi), keep, n);
  const Qubit ref_after = reference > traced ? reference - 1 : reference;

  ReducedBoundCheck chk;
  const double neg = global_negativity(reduced, {ref_after}, n - 1, tol);
  chk.lhs = neg * neg;

  const NegativityReport rep = build_report(psi, reference, tol, {.with_kway_spectra = false});
  for (Qubit q = 0; q < n; ++q) {
    if (q == traced || q == reference) continue;
    chk.rhs += rep.n_global * rep.e_pair.at(q);
  }
  chk.holds = chk.lhs <= chk.rhs + kReportTol;
  return chk;
}

}  // namespace kneg
