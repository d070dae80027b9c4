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
#include <vector>

#include "kneg/kneg.hpp"

using namespace kneg;
using Catch::Approx;

namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

PureState build(Family f, std::map<std::string, Complex> params = {}) {
  FamilyParams fp{f, std::move(params), {}};
  return build_family(fp);
}

}  // namespace

TEST_CASE("gabcd degenerates to GHZ when a = d = 1/sqrt(2)") {
  PureState psi = build(Family::Gabcd,
                        {{"a", kInvSqrt2}, {"b", 0.0}, {"c", 0.0}, {"d", kInvSqrt2}});
  REQUIRE(std::abs(psi.amplitude(0b0000) - Complex(kInvSqrt2)) < 1e-15);
  REQUIRE(std::abs(psi.amplitude(0b1111) - Complex(kInvSqrt2)) < 1e-15);
  for (int i = 1; i < 15; ++i) REQUIRE(psi.amplitude(i) == Complex(0.0));
}

TEST_CASE("l0-53 has the printed four amplitudes") {
  PureState psi = build(Family::L0_53);
  for (int label : {0b0000, 0b0101, 0b1000, 0b1110})
    REQUIRE(std::abs(psi.amplitude(label) - Complex(0.5)) < 1e-15);
  double weight = 0.0;
  for (int i = 0; i < 16; ++i) weight += std::norm(psi.amplitude(i));
  REQUIRE(weight == Approx(1.0).margin(1e-14));
}

TEST_CASE("la4 at the boundary a = 1/2 loses its imaginary terms") {
  PureState psi = build(Family::La4, {{"a", 0.5}});
  for (int label : {0b0000, 0b0101, 0b1010, 0b1111})
    REQUIRE(std::abs(psi.amplitude(label) - Complex(0.5)) < 1e-12);
  REQUIRE(std::abs(psi.amplitude(0b0001)) < 1e-12);
  REQUIRE(std::abs(psi.amplitude(0b0110)) < 1e-12);
  REQUIRE(std::abs(psi.amplitude(0b1011)) < 1e-12);
}

TEST_CASE("lab3 carries the ic/sqrt(2) odd-weight amplitudes") {
  FamilyParams fp{Family::Lab3, {{"a", 0.4}, {"b", 0.5}}, {}};
  PureState psi = build_family(fp);
  const double c = fp.derived.at("c");
  REQUIRE(c == Approx(std::sqrt((1.0 - 0.25 - 0.48) / 2.0)));
  for (int label : {0b0001, 0b0010, 0b0111, 0b1011})
    REQUIRE(std::abs(psi.amplitude(label) - Complex(0.0, c * kInvSqrt2)) < 1e-15);
}

TEST_CASE("build_general_class1 mappings") {
  SECTION("GHZ from alpha = A = 1/sqrt(2)") {
    PureState psi = build_general_class1({kInvSqrt2, 0, 0, 0, kInvSqrt2, 0, 0, 0});
    REQUIRE(std::abs(psi.amplitude(0b0000) - Complex(kInvSqrt2)) < 1e-15);
    REQUIRE(std::abs(psi.amplitude(0b1111) - Complex(kInvSqrt2)) < 1e-15);
  }
  SECTION("the la2b2 table row reproduces build_family exactly") {
    FamilyParams fp{Family::La2b2, {{"a", Complex(0.5, 0.2)}, {"b", 0.4}}, {}};
    PureState direct = build_family(fp);
    PureState mapped = build_general_class1(to_general_amplitudes(fp));
    for (int i = 0; i < 16; ++i)
      REQUIRE(std::abs(direct.amplitude(i) - mapped.amplitude(i)) < 1e-15);
  }
  SECTION("unnormalized coefficients are rejected") {
    REQUIRE_THROWS_AS(build_general_class1({1.0, 1.0, 0, 0, 0, 0, 0, 0}),
                      NormalizationError);
  }
  SECTION("all amplitudes equal gives a maximally entangled qubit A") {
    const Complex z = 1.0 / std::sqrt(8.0);
    PureState psi = build_general_class1({z, z, z, z, z, z, z, z});
    auto [mu0, mu1] = schmidt_pair(psi, 0);
    REQUIRE(mu0 == Approx(0.5).margin(1e-12));
    REQUIRE(mu1 == Approx(0.5).margin(1e-12));
    REQUIRE(global_negativity(density_from_state(psi), {0}, 4) ==
            Approx(1.0).margin(1e-10));
  }
}

TEST_CASE("oracle_class1 closed forms") {
  SECTION("GHZ") {
    Class1Oracle o = oracle_class1({kInvSqrt2, 0, 0, 0, kInvSqrt2, 0, 0, 0});
    REQUIRE(o.n_global == Approx(1.0));
    REQUIRE(o.e4 == Approx(1.0));
    REQUIRE(o.e2 == Approx(0.0).margin(1e-15));
  }
  SECTION("gabcd(1,0,0,0) splits E_4 = E_2 = 1/2") {
    FamilyParams fp{Family::Gabcd, {{"a", 1.0}, {"b", 0.0}, {"c", 0.0}, {"d", 0.0}}, {}};
    resolve_family(fp);
    Class1Oracle o = oracle_class1(to_general_amplitudes(fp));
    REQUIRE(o.e4 == Approx(0.5));
    REQUIRE(o.e2 == Approx(0.5));
  }
  SECTION("product input has zero negativity") {
    Class1Oracle o = oracle_class1({1.0, 0, 0, 0, 0, 0, 0, 0});
    REQUIRE(o.n_global == 0.0);
    REQUIRE(o.e4 == 0.0);
    REQUIRE(o.e2 == 0.0);
  }
}

TEST_CASE("oracle_pairwise closed forms") {
  SECTION("gabcd(1,0,0,0)") {
    FamilyParams fp{Family::Gabcd, {{"a", 1.0}, {"b", 0.0}, {"c", 0.0}, {"d", 0.0}}, {}};
    resolve_family(fp);
    PairwiseOracle o = oracle_pairwise(fp);
    REQUIRE(o.e_pair.at(1) == Approx(0.5));
    REQUIRE(o.e_pair.at(2) == Approx(0.0).margin(1e-15));
    REQUIRE(o.e_pair.at(3) == Approx(0.0).margin(1e-15));
  }
  SECTION("la2b2 has N_G E_2^{AC} = 8 a^2 b^2") {
    FamilyParams fp{Family::La2b2, {{"a", 0.5}, {"b", 0.4}}, {}};
    resolve_family(fp);
    PairwiseOracle o = oracle_pairwise(fp);
    REQUIRE(o.ng_e_pair.at(2) == Approx(8.0 * 0.25 * 0.16));
  }
  SECTION("la2-0-31 has three equal pairwise products") {
    FamilyParams fp{Family::La2_0_31, {{"a", 0.5}}, {}};
    resolve_family(fp);
    PairwiseOracle o = oracle_pairwise(fp);
    const double expected = 4.0 * 0.25 * fp.derived.at("b") * fp.derived.at("b");
    for (Qubit q : {1, 2, 3}) REQUIRE(o.ng_e_pair.at(q) == Approx(expected));
  }
}

TEST_CASE("pairwise oracles match the numerical projector route") {
  RngEngine rng(51);
  for (Family f : {Family::Gabcd, Family::Labc2, Family::La2b2, Family::La2_0_31}) {
    for (int rep = 0; rep < 8; ++rep) {
      FamilyParams fp = draw_family_params(f, rng);
      PureState psi = build_family(fp);
      Matrix rho = density_from_state(psi);
      PairwiseOracle o = oracle_pairwise(fp);
      const double ng = global_negativity(rho, {0}, 4);
      REQUIRE(ng == Approx(o.n_global).margin(1e-9));
      for (Qubit q : {1, 2, 3}) {
        const double numeric = ng * partial_pair_negativity(rho, 0, q, 4);
        REQUIRE(numeric == Approx(o.ng_e_pair.at(q)).margin(1e-9));
      }
    }
  }
}

TEST_CASE("class-I closed forms match numerics, including complex parameters") {
  RngEngine rng(52);
  for (int rep = 0; rep < 10; ++rep) {
    auto c = random_class1_amplitudes(rng, rep % 2 == 0);
    PureState psi = build_general_class1(c);
    Matrix rho = density_from_state(psi);
    Class1Oracle o = oracle_class1(c);
    REQUIRE(global_negativity(rho, {0}, 4) == Approx(o.n_global).margin(1e-9));
    REQUIRE(partial_kway_negativity(rho, 0, 4, 4) == Approx(o.e4).margin(1e-9));
    REQUIRE(partial_kway_negativity(rho, 0, 2, 4) == Approx(o.e2).margin(1e-9));
    auto [mu0, mu1] = schmidt_pair(psi, 0);
    REQUIRE(mu0 == Approx(std::max(o.mu0, o.mu1)).margin(1e-10));
    REQUIRE(mu1 == Approx(std::min(o.mu0, o.mu1)).margin(1e-10));
  }
}

TEST_CASE("oracle_la4 polynomials") {
  La4Oracle at_half = oracle_la4(0.5);
  REQUIRE(at_half.ng2 == Approx(1.0));
  REQUIRE(at_half.ng_e4 == Approx(0.5));
  REQUIRE(at_half.ng_e3 == Approx(0.0).margin(1e-15));
  REQUIRE(at_half.ng_e2 == Approx(0.5));

  La4Oracle at_zero = oracle_la4(0.0);
  REQUIRE(at_zero.ng2 == Approx(8.0 / 9.0));
  REQUIRE(at_zero.ng_e4 == 0.0);
  REQUIRE(at_zero.ng_e3 == Approx(4.0 / 9.0));
  REQUIRE(at_zero.ng_e2 == Approx(4.0 / 9.0));

  for (int i = 0; i <= 20; ++i) {
    const double a = 0.5 * i / 20.0;
    La4Oracle o = oracle_la4(a);
    REQUIRE(o.ng_e4 + o.ng_e3 + o.ng_e2 == Approx(o.ng2).margin(1e-14));
  }
}

TEST_CASE("la4 numerics match the polynomials") {
  for (double a : {0.0, 0.1, 0.25, 0.4, 0.5}) {
    FamilyParams fp{Family::La4, {{"a", a}}, {}};
    PureState psi = build_family(fp);
    NegativityReport rep = build_report(psi, 0);
    La4Oracle o = oracle_la4(a);
    REQUIRE(rep.products.at("ng2") == Approx(o.ng2).margin(1e-9));
    REQUIRE(rep.products.at("ng_e4") == Approx(o.ng_e4).margin(1e-9));
    REQUIRE(rep.products.at("ng_e3") == Approx(o.ng_e3).margin(1e-9));
    REQUIRE(rep.products.at("ng_e2") == Approx(o.ng_e2).margin(1e-9));
    REQUIRE(std::abs(rep.e0) < 1e-9);
  }
}

TEST_CASE("table1_ng2 matches numerics on random draws") {
  RngEngine rng(53);
  for (Family f : {Family::Gabcd, Family::Labc2, Family::La2b2, Family::La2_0_31}) {
    for (int rep = 0; rep < 8; ++rep) {
      FamilyParams fp = draw_family_params(f, rng);
      PureState psi = build_family(fp);
      const double ng = global_negativity(density_from_state(psi), {0}, 4);
      REQUIRE(ng * ng == Approx(table1_ng2(fp)).margin(1e-9));
    }
  }
}

TEST_CASE("lab3 reaches N_G E_4 = 1/2 at a = 1/sqrt(3), b = 0") {
  FamilyParams fp{Family::Lab3, {{"a", 1.0 / std::sqrt(3.0)}, {"b", 0.0}}, {}};
  PureState psi = build_family(fp);
  REQUIRE(fp.derived.at("c") == Approx(0.0).margin(1e-9));
  NegativityReport rep = build_report(psi, 0);
  REQUIRE(rep.products.at("ng_e4") == Approx(0.5).margin(1e-6));
}

TEST_CASE("fixed_state_expected golden rows all hold") {
  std::map<Family, PureState> states;
  for (Family f : {Family::L0_53, Family::L0_71, Family::L0_31_0_31})
    states.emplace(f, build(f));
  for (const GoldenValue& g : fixed_state_expected()) {
    NegativityReport rep = build_report(states.at(g.family), g.qubit);
    INFO(family_name(g.family) << " qubit " << qubit_name(g.qubit) << " " << g.quantity);
    REQUIRE(rep.products.at(g.quantity) == Approx(g.value).margin(1e-8));
  }
}

TEST_CASE("family parameter validation") {
  SECTION("gabcd must be normalized by the caller") {
    FamilyParams fp{Family::Gabcd, {{"a", 1.0}, {"b", 1.0}, {"c", 0.0}, {"d", 0.0}}, {}};
    REQUIRE_THROWS_AS(build_family(fp), NormalizationError);
  }
  SECTION("labc2 rejects parameters that leave d^2 negative") {
    FamilyParams fp{Family::Labc2, {{"a", 0.9}, {"b", 0.6}, {"c", 0.0}}, {}};
    REQUIRE_THROWS_AS(build_family(fp), DomainError);
  }
  SECTION("boundary squares within norm_tol clamp to zero") {
    FamilyParams fp{Family::La2_0_31, {{"a", std::sqrt(0.5 + 1e-11)}}, {}};
    REQUIRE_NOTHROW(build_family(fp));
    REQUIRE(fp.derived.at("b") == 0.0);
  }
  SECTION("lab3 parameters must be real") {
    FamilyParams fp{Family::Lab3, {{"a", Complex(0.3, 0.2)}, {"b", 0.1}}, {}};
    REQUIRE_THROWS_AS(build_family(fp), DomainError);
  }
  SECTION("la4 domain is [0, 1/2]") {
    FamilyParams fp{Family::La4, {{"a", 0.6}}, {}};
    REQUIRE_THROWS_AS(build_family(fp), DomainError);
  }
  SECTION("unknown parameter names are rejected") {
    FamilyParams fp{Family::La4, {{"x", 0.1}}, {}};
    REQUIRE_THROWS_AS(build_family(fp), DomainError);
  }
  SECTION("parameter-free families take no parameters") {
    FamilyParams fp{Family::L0_53, {{"a", 0.1}}, {}};
    REQUIRE_THROWS_AS(build_family(fp), DomainError);
  }
}

TEST_CASE("family names round-trip and classes are labeled") {
  for (Family f : {Family::Gabcd, Family::Labc2, Family::La2b2, Family::La2_0_31,
                   Family::Lab3, Family::La4, Family::L0_53, Family::L0_71,
                   Family::L0_31_0_31})
    REQUIRE(family_from_name(family_name(f)) == f);
  REQUIRE(family_from_name("LA2_0_31") == Family::La2_0_31);
  REQUIRE_THROWS_AS(family_from_name("nonsense"), DomainError);

  REQUIRE(class_label(Family::Gabcd).cls == 1);
  REQUIRE(class_label(Family::Gabcd).e3_zero);
  REQUIRE(class_label(Family::Lab3).cls == 2);
  REQUIRE_FALSE(class_label(Family::Lab3).e4_zero);
  REQUIRE(class_label(Family::L0_71).e4_zero);
}
