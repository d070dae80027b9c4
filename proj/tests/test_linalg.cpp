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

#include <catch2/catch_amalgamated.hpp>
#include <cmath>
#include <complex>
#include <vector>

#include "kneg/kneg.hpp"

using namespace kneg;
using Catch::Approx;

namespace {

PureState ghz4() {
  std::vector<Complex> amps(16);
  amps[0] = 1.0 / std::sqrt(2.0);
  amps[15] = 1.0 / std::sqrt(2.0);
  return PureState(4, amps);
}

PureState gabcd(Complex a, Complex b, Complex c, Complex d) {
  FamilyParams fp{Family::Gabcd, {{"a", a}, {"b", b}, {"c", c}, {"d", d}}, {}};
  return build_family(fp);
}

Matrix random_hermitian(int dim, RngEngine& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Matrix m(dim);
  for (int i = 0; i < dim; ++i) {
    m(i, i) = gauss(rng);
    for (int j = i + 1; j < dim; ++j) {
      Complex z(gauss(rng), gauss(rng));
      m(i, j) = z;
      m(j, i) = std::conj(z);
    }
  }
  return m;
}

}  // namespace

TEST_CASE("density_from_state on basis and GHZ states") {
  Matrix rho = density_from_state(PureState::basis("0000"));
  REQUIRE(rho(0, 0) == Complex(1.0));
  REQUIRE(std::abs(rho.trace() - 1.0) < 1e-14);
  for (int i = 1; i < 16; ++i) REQUIRE(rho(i, i) == Complex(0.0));

  Matrix g = density_from_state(ghz4());
  for (auto [i, j] : {std::pair{0, 0}, {0, 15}, {15, 0}, {15, 15}})
    REQUIRE(std::abs(g(i, j) - 0.5) < 1e-15);
  REQUIRE(std::abs(g.trace() - 1.0) < 1e-14);
}

TEST_CASE("density_from_state gives a rank-1 projector for G_abcd") {
  Matrix rho = density_from_state(gabcd(0.5, 0.5, 0.5, 0.5));
  REQUIRE(std::abs(rho.trace() - 1.0) < 1e-12);
  REQUIRE(rho.is_hermitian(1e-14));
  REQUIRE(max_abs_diff(rho * rho, rho) < 1e-12);  // idempotence oracle
}

TEST_CASE("hermitian_eigen recovers known spectra") {
  SECTION("identity") {
    EigenDecomposition eig = hermitian_eigen(Matrix::identity(16));
    for (double x : eig.eigenvalues) REQUIRE(x == Approx(1.0).margin(1e-13));
  }
  SECTION("already diagonal, ascending output") {
    Matrix m(3);
    m(0, 0) = 3.0;
    m(1, 1) = 1.0;
    m(2, 2) = 2.0;
    EigenDecomposition eig = hermitian_eigen(m);
    REQUIRE(eig.eigenvalues[0] == Approx(1.0));
    REQUIRE(eig.eigenvalues[1] == Approx(2.0));
    REQUIRE(eig.eigenvalues[2] == Approx(3.0));
  }
  SECTION("real off-diagonal 2x2") {
    Matrix m(2);
    m(0, 1) = 0.5;
    m(1, 0) = 0.5;
    EigenDecomposition eig = hermitian_eigen(m);
    REQUIRE(eig.eigenvalues[0] == Approx(-0.5).margin(1e-14));
    REQUIRE(eig.eigenvalues[1] == Approx(0.5).margin(1e-14));
  }
  SECTION("imaginary off-diagonal 2x2") {
    Matrix m(2);
    m(0, 1) = Complex(0.0, 0.5);
    m(1, 0) = Complex(0.0, -0.5);
    EigenDecomposition eig = hermitian_eigen(m);
    REQUIRE(eig.eigenvalues[0] == Approx(-0.5).margin(1e-14));
    REQUIRE(eig.eigenvalues[1] == Approx(0.5).margin(1e-14));
  }
}

TEST_CASE("hermitian_eigen reconstruction and orthonormality") {
  RngEngine rng(20260809);
  Tolerances tol;
  for (int rep = 0; rep < 8; ++rep) {
    Matrix m = random_hermitian(16, rng);
    EigenDecomposition eig = hermitian_eigen(m, tol);

    Matrix lambda(16);
    for (int i = 0; i < 16; ++i) lambda(i, i) = eig.eigenvalues[i];
    Matrix rec = eig.eigenvectors * lambda * eig.eigenvectors.adjoint();
    double scale = std::max(1.0, m.frobenius_norm());
    REQUIRE((rec - m).frobenius_norm() <= tol.eig_tol * scale);

    Matrix gram = eig.eigenvectors.adjoint() * eig.eigenvectors;
    REQUIRE(max_abs_diff(gram, Matrix::identity(16)) <= tol.eig_tol);

    double sum = 0.0;
    for (double x : eig.eigenvalues) sum += x;
    REQUIRE(sum == Approx(m.trace().real()).margin(1e-10 * scale));
  }
}

TEST_CASE("hermitian_eigen of the GHZ global partial transpose") {
  Matrix rho = density_from_state(ghz4());
  Matrix pt = global_pt(rho, {0}, 4);
  EigenDecomposition eig = hermitian_eigen(pt);

  // Independent oracle: the only coherence block after transposition is the
  // 2x2 block spanned by |1000> and |0111>, holding 1/2 off-diagonal. Its
  // characteristic polynomial x^2 - (tr)x + det = x^2 - 1/4 has roots +-1/2.
  const double t = pt(7, 7).real() + pt(8, 8).real();
  const double det = (pt(7, 7) * pt(8, 8) - pt(7, 8) * pt(8, 7)).real();
  const double lam_neg = 0.5 * (t - std::sqrt(t * t - 4.0 * det));
  REQUIRE(lam_neg == Approx(-0.5).margin(1e-14));

  int negatives = 0;
  for (double x : eig.eigenvalues)
    if (x < -1e-9) ++negatives;
  REQUIRE(negatives == 1);
  REQUIRE(eig.eigenvalues.front() == Approx(-0.5).margin(1e-12));
}

TEST_CASE("hermitian_eigen rejects non-Hermitian input") {
  Matrix m(2);
  m(0, 1) = 1.0;  // m(1,0) left at 0
  REQUIRE_THROWS_AS(hermitian_eigen(m), ContractError);
}

TEST_CASE("hermitian_eigen converges to an exactly diagonal matrix") {
  // Quadratic convergence drives the off-diagonal norm to exact zero well
  // inside the sweep cap, so even an unreachably small tolerance succeeds.
  RngEngine rng(8);
  Matrix m = random_hermitian(8, rng);
  Tolerances tol;
  tol.eig_tol = 1e-30;
  REQUIRE_NOTHROW(hermitian_eigen(m, tol));
}

TEST_CASE("trace_norm") {
  SECTION("pure-state density has trace norm 1") {
    RngEngine rng(7);
    Matrix rho = density_from_state(random_state(4, rng));
    REQUIRE(trace_norm(rho) == Approx(1.0).margin(1e-12));
  }
  SECTION("GHZ global PT has trace norm 2") {
    Matrix pt = global_pt(density_from_state(ghz4()), {0}, 4);
    REQUIRE(trace_norm(pt) == Approx(2.0).margin(1e-10));
  }
  SECTION("zero matrix") { REQUIRE(trace_norm(Matrix(4)) == 0.0); }
}

TEST_CASE("partial_trace of a product state recovers the factor") {
  // |0> (x) |phi> on 2 qubits with |phi> = (3|0> + 4i|1>)/5.
  std::vector<Complex> amps(4);
  amps[0] = 0.6;
  amps[1] = Complex(0.0, 0.8);
  PureState psi(2, amps);
  Matrix red = partial_trace(density_from_state(psi), {1}, 2);
  REQUIRE(red(0, 0).real() == Approx(0.36));
  REQUIRE(red(1, 1).real() == Approx(0.64));
  REQUIRE(std::abs(red(0, 1) - Complex(0.0, -0.48)) < 1e-14);
}

TEST_CASE("tracing qubit D of G_abcd yields the printed W mixture") {
  const double a = 0.7, b = 0.5, c = 0.3;
  const double d = std::sqrt(1.0 - a * a - b * b - c * c);
  PureState psi = gabcd(a, b, c, d);
  Matrix red = partial_trace(density_from_state(psi), {0, 1, 2}, 4);

  auto w_state = [&](bool one_branch) {
    std::vector<Complex> amps(8);
    const double apd = (a + d) / 2, amd = (a - d) / 2;
    const double bpc = (b + c) / 2, bmc = (b - c) / 2;
    if (!one_branch) {
      amps[0b000] = apd;
      amps[0b110] = amd;
      amps[0b101] = bpc;
      amps[0b011] = bmc;
    } else {
      amps[0b111] = apd;
      amps[0b001] = amd;
      amps[0b010] = bpc;
      amps[0b100] = bmc;
    }
    return PureState::normalized(3, amps);
  };
  Matrix mix = 0.5 * density_from_state(w_state(false)) +
               0.5 * density_from_state(w_state(true));
  REQUIRE(max_abs_diff(red, mix) < 1e-12);
}

TEST_CASE("tracing qubit D of l0-53 yields 3/4 |T0><T0| + 1/4 |010><010|") {
  FamilyParams fp{Family::L0_53, {}, {}};
  PureState psi = build_family(fp);
  Matrix red = partial_trace(density_from_state(psi), {0, 1, 2}, 4);

  std::vector<Complex> t0(8);
  t0[0b000] = 1.0 / std::sqrt(3.0);
  t0[0b100] = 1.0 / std::sqrt(3.0);
  t0[0b111] = 1.0 / std::sqrt(3.0);
  Matrix mix = 0.75 * density_from_state(PureState(3, t0)) +
               0.25 * density_from_state(PureState::basis("010"));
  REQUIRE(max_abs_diff(red, mix) < 1e-12);
}

TEST_CASE("partial_trace preserves trace and positivity") {
  RngEngine rng(99);
  Tolerances tol;
  for (int rep = 0; rep < 6; ++rep) {
    PureState psi = random_state(4, rng);
    Matrix rho = density_from_state(psi);
    for (const std::vector<Qubit>& keep :
         std::vector<std::vector<Qubit>>{{0}, {3}, {1, 2}, {0, 3}, {0, 1, 2}}) {
      Matrix red = partial_trace(rho, keep, 4);
      REQUIRE(red.dim() == dim_of(static_cast<int>(keep.size())));
      REQUIRE(std::abs(red.trace() - Complex(1.0)) < tol.trace_tol);
      REQUIRE(red.is_hermitian(tol.herm_tol));
      EigenDecomposition eig = hermitian_eigen(red, tol);
      REQUIRE(eig.eigenvalues.front() >= -tol.eig_tol);
    }
  }
  REQUIRE_THROWS_AS(partial_trace(Matrix(16), {}, 4), DomainError);
  REQUIRE_THROWS_AS(partial_trace(Matrix(16), {4}, 4), DomainError);
}

TEST_CASE("schmidt_pair basics") {
  SECTION("G_abcd is maximally mixed for qubit A") {
    auto [mu0, mu1] = schmidt_pair(gabcd(0.6, 0.4, 0.2, std::sqrt(0.44)), 0);
    REQUIRE(mu0 == Approx(0.5).margin(1e-12));
    REQUIRE(mu1 == Approx(0.5).margin(1e-12));
  }
  SECTION("labc2 has mu = (1 +- d^2)/2") {
    FamilyParams fp{Family::Labc2, {{"a", 0.5}, {"b", 0.3}, {"c", 0.4}}, {}};
    PureState psi = build_family(fp);
    const double d2 = fp.derived.at("d") * fp.derived.at("d");
    auto [mu0, mu1] = schmidt_pair(psi, 0);
    REQUIRE(mu0 == Approx((1.0 + d2) / 2.0).margin(1e-12));
    REQUIRE(mu1 == Approx((1.0 - d2) / 2.0).margin(1e-12));
  }
  SECTION("product qubit") {
    auto [mu0, mu1] = schmidt_pair(PureState::basis("0110"), 1);
    REQUIRE(mu0 == Approx(1.0));
    REQUIRE(mu1 == Approx(0.0).margin(1e-15));
  }
}

TEST_CASE("schmidt_pair reproduces the trace-norm route to ten eigensolver digits") {
  RngEngine rng(9);
  Tolerances tol;
  for (int rep = 0; rep < 8; ++rep) {
    PureState psi = random_state(4, rng, rep % 2 == 0);
    for (Qubit p = 0; p < 4; ++p) {
      auto [mu0, mu1] = schmidt_pair(psi, p);
      const double ng = global_negativity(density_from_state(psi), {p}, 4, tol);
      REQUIRE(std::abs(ng - 2.0 * std::sqrt(mu0 * mu1)) <= 10.0 * tol.eig_tol);
    }
  }
}

TEST_CASE("state validation") {
  REQUIRE_THROWS_AS(PureState(2, std::vector<Complex>(4, 0.6), 1e-10), NormalizationError);
  REQUIRE_THROWS_AS(PureState(2, std::vector<Complex>(3)), DomainError);
  REQUIRE_NOTHROW(PureState::normalized(2, std::vector<Complex>{1.0, 1.0, 1.0, 1.0}));
}
