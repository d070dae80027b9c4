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
#include <numeric>
#include <random>
#include <vector>

#include "kneg/core.hpp"
#include "kneg/families.hpp"
#include "kneg/state.hpp"

namespace kneg {

using RngEngine = std::mt19937_64;

/// Unit-norm state with Gaussian amplitudes (real_only drops the imaginary
/// parts before normalizing).
inline PureState random_state(int n_qubits, RngEngine& rng, bool real_only = false) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<Complex> amps(dim_of(n_qubits));
  for (Complex& z : amps) {
    const double re = gauss(rng);
    const double im = real_only ? 0.0 : gauss(rng);
    z = Complex(re, im);
  }
  return PureState::normalized(n_qubits, std::move(amps));
}

/// Normalized amplitudes (alpha..D) for a random even-weight class-I state.
inline std::array<Complex, 8> random_class1_amplitudes(RngEngine& rng,
                                                       bool real_only = false) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::array<Complex, 8> c;
  double norm2 = 0.0;
  for (Complex& z : c) {
    z = Complex(gauss(rng), real_only ? 0.0 : gauss(rng));
    norm2 += std::norm(z);
  }
  const double inv = 1.0 / std::sqrt(norm2);
  for (Complex& z : c) z *= inv;
  return c;
}

/// Random 2x2 unitary (row-major) from three uniform angles.
inline std::array<Complex, 4> random_unitary2(RngEngine& rng) {
  std::uniform_real_distribution<double> angle(0.0, 2.0 * 3.14159265358979323846);
  const double theta = 0.5 * angle(rng);
  const double phi1 = angle(rng), phi2 = angle(rng);
  const double c = std::cos(theta), s = std::sin(theta);
  return {c * std::exp(Complex(0.0, phi1)), s * std::exp(Complex(0.0, phi2)),
          -s * std::exp(Complex(0.0, -phi2)), c * std::exp(Complex(0.0, -phi1))};
}

/// Applies an independent random unitary to each qubit.
inline PureState random_local_rotation(const PureState& psi, RngEngine& rng) {
  PureState out = psi;
  for (Qubit q = 0; q < psi.n_qubits(); ++q)
    out = apply_single_qubit_unitary(out, q, random_unitary2(rng));
  return out;
}

inline std::vector<Qubit> random_qubit_permutation(int n_qubits, RngEngine& rng) {
  std::vector<Qubit> perm(n_qubits);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

namespace detail {

/// Complex number uniform on the disk of the given radius.
inline Complex random_disk(RngEngine& rng, double radius) {
  std::uniform_real_distribution<double> uni(-radius, radius);
  for (;;) {
    Complex z(uni(rng), uni(rng));
    if (std::norm(z) <= radius * radius) return z;
  }
}

}  // namespace detail

/// In-domain random parameter draw for a family (rejection sampling against
/// the normalization constraint).
inline FamilyParams draw_family_params(Family f, RngEngine& rng) {
  std::uniform_real_distribution<double> uni01(0.0, 1.0);
  FamilyParams fp;
  fp.family = f;
  switch (f) {
    case Family::Gabcd: {
      std::normal_distribution<double> gauss(0.0, 1.0);
      std::array<Complex, 4> v;
      double norm2 = 0.0;
      for (Complex& z : v) {
        z = Complex(gauss(rng), gauss(rng));
        norm2 += std::norm(z);
      }
      const double inv = 1.0 / std::sqrt(norm2);
      fp.params["a"] = v[0] * inv;
      fp.params["b"] = v[1] * inv;
      fp.params["c"] = v[2] * inv;
      fp.params["d"] = v[3] * inv;
      break;
    }
    case Family::Labc2:
      for (;;) {
        const Complex a = detail::random_disk(rng, 1.0);
        const Complex b = detail::random_disk(rng, 1.0);
        const Complex c = detail::random_disk(rng, 1.0 / std::sqrt(2.0));
        if (std::norm(a) + std::norm(b) + 2.0 * std::norm(c) <= 1.0) {
          fp.params = {{"a", a}, {"b", b}, {"c", c}};
          break;
        }
      }
      break;
    case Family::La2b2:
      for (;;) {
        const Complex a = detail::random_disk(rng, 1.0 / std::sqrt(2.0));
        const Complex b = detail::random_disk(rng, 1.0 / std::sqrt(2.0));
        if (2.0 * std::norm(a) + 2.0 * std::norm(b) <= 1.0) {
          fp.params = {{"a", a}, {"b", b}};
          break;
        }
      }
      break;
    case Family::La2_0_31:
      fp.params["a"] = detail::random_disk(rng, 1.0 / std::sqrt(2.0));
      break;
    case Family::Lab3:
      for (;;) {
        const double a = uni01(rng) / std::sqrt(3.0);
        const double b = uni01(rng);
        if (3.0 * a * a + b * b <= 1.0) {
          fp.params = {{"a", a}, {"b", b}};
          break;
        }
      }
      break;
    case Family::La4:
      fp.params["a"] = 0.5 * uni01(rng);
      break;
    case Family::L0_53:
    case Family::L0_71:
    case Family::L0_31_0_31:
      break;
  }
  resolve_family(fp);
  return fp;
}

}  // namespace kneg
