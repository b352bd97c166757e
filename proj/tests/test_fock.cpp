// Copyright 2026 The pairtangle Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <catch2/catch_amalgamated.hpp>
#include <cmath>
#include <vector>

#include "pairtangle/fock.hpp"

using namespace pairtangle;

namespace {
const double kAsinh1 = std::asinh(1.0);
}

TEST_CASE("slot indices follow the canonical (s,p),(s,a),(w,p),(w,a) order") {
  CHECK(slot_index(kSlotSParticle) == 0);
  CHECK(slot_index(kSlotSAntiparticle) == 1);
  CHECK(slot_index(kSlotOmegaParticle) == 2);
  CHECK(slot_index(kSlotOmegaAntiparticle) == 3);
}

TEST_CASE("fermion vacuum image: cos/-sin table, unit norm") {
  for (double rf : {0.0, 0.2, 0.7853981633974483, 1.2, kPi / 2.0}) {
    const FockVector v = fermion_out_vacuum(rf);
    CHECK(v.statistics == Statistics::fermion);
    CHECK(v.amplitude({0, 0}) == std::cos(rf));
    CHECK(v.amplitude({1, 1}) == -std::sin(rf));
    CHECK(v.norm_squared() == Catch::Approx(1.0).margin(1e-15));
    CHECK(v.truncation_tail == 0.0);
    // exactly one negative amplitude once pairs are produced
    int negatives = 0;
    for (const auto& [occ, amp] : v.amplitudes) negatives += amp < 0.0;
    CHECK(negatives == (rf > 0.0 ? 1 : 0));
  }
  // r_f = 0 is exactly the bare vacuum: a single-term table.
  CHECK(fermion_out_vacuum(0.0).amplitudes.size() == 1);
  // r_f = pi/2 inverts the population completely.
  const FockVector full = fermion_out_vacuum(kPi / 2.0);
  CHECK(full.amplitude({1, 1}) == -1.0);
  CHECK(std::fabs(full.amplitude({0, 0})) < 1e-16);
  CHECK_THROWS_AS(fermion_out_vacuum(-0.1), domain_error);
  CHECK_THROWS_AS(fermion_out_vacuum(kPi / 2.0 + 0.01), domain_error);
}

TEST_CASE("fermion one-particle image is Pauli-blocked: exactly {(1,0): 1}") {
  for (double rf : {0.0, 0.5, 1.3, kPi / 2.0}) {
    const FockVector v = fermion_out_one(rf);
    REQUIRE(v.amplitudes.size() == 1);
    CHECK(v.amplitude({1, 0}) == 1.0);
    CHECK(v.dims == std::vector<int>{2, 1});
  }
  CHECK_THROWS_AS(fermion_out_one(2.0), domain_error);
}

TEST_CASE("boson cutoffs: values and tail guarantees") {
  CHECK(boson_cutoff(0.0, 1e-12) == 0);
  CHECK(boson_one_cutoff(0.0, 1e-12) == 0);
  // Frozen at the maximal squeezing r = asinh(1) (tanh^2 r = 1/2).
  CHECK(boson_cutoff(kAsinh1, 1e-12) == 43);
  CHECK(boson_one_cutoff(kAsinh1, 1e-12) == 44);
  // The analytic remainders at the chosen cutoffs sit at or below eps.
  for (double r : {0.1, 0.3, 0.5, 0.7, kAsinh1}) {
    for (double eps : {1e-8, 1e-12}) {
      const double x = std::tanh(r) * std::tanh(r);
      const int nv = boson_cutoff(r, eps);
      CHECK(std::pow(x, nv + 1) <= eps);
      const int no = boson_one_cutoff(r, eps);
      CHECK(std::pow(x, no + 1) * ((no + 2) - (no + 1) * x) <= eps);
      CHECK(no >= nv);
    }
  }
  CHECK_THROWS_AS(boson_cutoff(0.5, 0.0), domain_error);
  CHECK_THROWS_AS(boson_cutoff(0.5, 1.0), domain_error);
}

TEST_CASE("scalar vacuum image: squeezed-vacuum amplitudes and recorded tail") {
  SECTION("r = 0 is exactly the bare vacuum") {
    const FockVector v = scalar_out_vacuum(0.0, 1e-12);
    REQUIRE(v.amplitudes.size() == 1);
    CHECK(v.amplitude({0, 0}) == 1.0);
    CHECK(v.truncation_tail == 0.0);
  }
  for (double r : {0.2, 0.5, kAsinh1}) {
    const double eps = 1e-12;
    const FockVector v = scalar_out_vacuum(r, eps);
    const double t = std::tanh(r), c = std::cosh(r);
    const int n_c = boson_cutoff(r, eps);
    CHECK(static_cast<int>(v.amplitudes.size()) == n_c + 1);
    CHECK(v.dims == std::vector<int>{n_c + 1, n_c + 1});
    for (int n = 0; n <= n_c; ++n)
      CHECK(v.amplitude({n, n}) == Catch::Approx(std::pow(t, n) / c).epsilon(1e-15));
    // truncated but not renormalized: norm in [1 - eps, 1], tail recorded
    CHECK(v.norm_squared() >= 1.0 - eps);
    CHECK(v.norm_squared() <= 1.0 + 1e-15);
    CHECK(v.truncation_tail <= eps);
    CHECK(v.truncation_tail >= 0.0);
  }
  CHECK_THROWS_AS(scalar_out_vacuum(-0.1, 1e-12), domain_error);
  CHECK_THROWS_AS(scalar_out_vacuum(kAsinh1 + 0.01, 1e-12), domain_error);
}

TEST_CASE("scalar one-particle image: sqrt(n+1) ladder and extended cutoff") {
  for (double r : {0.2, 0.5, kAsinh1}) {
    const double eps = 1e-12;
    const FockVector v = scalar_out_one(r, eps);
    const double t = std::tanh(r), c = std::cosh(r);
    const int n_c = boson_one_cutoff(r, eps);
    CHECK(v.dims == std::vector<int>{n_c + 2, n_c + 1});
    for (int n = 0; n <= n_c; ++n)
      CHECK(v.amplitude({n + 1, n}) ==
            Catch::Approx(std::sqrt(n + 1.0) * std::pow(t, n) / (c * c)).epsilon(1e-15));
    CHECK(v.norm_squared() >= 1.0 - eps);
    CHECK(v.truncation_tail <= eps);
  }
  // The extension matters exactly where the (n+1) weight bites hardest.
  CHECK(scalar_out_one(kAsinh1, 1e-12).dims == std::vector<int>{46, 45});
}

TEST_CASE("restriction normalization factors") {
  // M = 1 at r = asinh(1): tanh^2 r = 1/2, so N1 = 2/sqrt(3), N2 = 2.
  const RestrictionParams p = restriction_params(kAsinh1, 1);
  CHECK(p.n1 == Catch::Approx(1.1547005383792515).margin(1e-15));
  CHECK(p.n2 == Catch::Approx(2.0).margin(1e-14));
  // Both factors >= 1 and finite across the legal range.
  for (int m : {1, 2, 3, 7}) {
    for (double r : {0.0, 0.3, 0.6, kAsinh1}) {
      const RestrictionParams q = restriction_params(r, m);
      CHECK(q.n1 >= 1.0);
      CHECK(q.n2 >= 1.0);
      CHECK(std::isfinite(q.n2));
    }
  }
  // Large M converges to the unrestricted normalization.
  const RestrictionParams wide = restriction_params(0.3, 40);
  CHECK(wide.n1 == Catch::Approx(1.0).margin(1e-14));
  CHECK(wide.n2 == Catch::Approx(1.0).margin(1e-14));
  CHECK_THROWS_AS(restriction_params(0.5, 0), domain_error);
  CHECK_THROWS_AS(restriction_params(0.5, -3), domain_error);
}

TEST_CASE("restricted states: exact unit norm and constant amplitude ratios") {
  for (int m : {1, 2, 3, 5}) {
    for (double r : {0.0, 0.2, 0.45, 0.7, kAsinh1}) {
      const FockVector vac = scalar_restricted_vacuum(r, m);
      const FockVector one = scalar_restricted_one(r, m);
      CHECK(vac.norm_squared() == Catch::Approx(1.0).margin(1e-14));
      CHECK(one.norm_squared() == Catch::Approx(1.0).margin(1e-14));
      CHECK(vac.truncation_tail == 0.0);
      CHECK(one.truncation_tail == 0.0);
      CHECK(static_cast<int>(vac.amplitudes.size()) == (r == 0.0 ? 1 : m + 1));
      CHECK(static_cast<int>(one.amplitudes.size()) == (r == 0.0 ? 1 : m));

      if (r == 0.0) continue;
      // Same shape as the unrestricted series, scaled by constant N1 / N2.
      const RestrictionParams p = restriction_params(r, m);
      const FockVector uvac = scalar_out_vacuum(r, 1e-12);
      const FockVector uone = scalar_out_one(r, 1e-12);
      for (int n = 0; n <= m; ++n)
        CHECK(vac.amplitude({n, n}) / uvac.amplitude({n, n}) ==
              Catch::Approx(p.n1).epsilon(1e-13));
      for (int n = 0; n < m; ++n)
        CHECK(one.amplitude({n + 1, n}) / uone.amplitude({n + 1, n}) ==
              Catch::Approx(p.n2).epsilon(1e-13));
    }
  }
}

TEST_CASE("entangled two-mode input, both partners inertial") {
  const FockVector bell = build_bell_out(InertialSpec{}, InertialSpec{});
  REQUIRE(bell.amplitudes.size() == 2);
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  CHECK(bell.amplitude({0, 0, 0, 0}) == Catch::Approx(inv_sqrt2).margin(1e-16));
  CHECK(bell.amplitude({1, 0, 1, 0}) == Catch::Approx(inv_sqrt2).margin(1e-16));
  CHECK(bell.norm_squared() == Catch::Approx(1.0).margin(1e-15));
  CHECK(bell.truncation_tail == 0.0);
}

TEST_CASE("entangled input, omega partner a uniformly accelerated fermion") {
  const double rf = 0.6;
  const FockVector st = build_bell_out(InertialSpec{}, FermionSpec{rf});
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  // Exactly three terms survive.
  REQUIRE(st.amplitudes.size() == 3);
  CHECK(st.amplitude({0, 0, 0, 0}) == Catch::Approx(std::cos(rf) * inv_sqrt2).margin(1e-16));
  CHECK(st.amplitude({0, 0, 1, 1}) == Catch::Approx(-std::sin(rf) * inv_sqrt2).margin(1e-16));
  CHECK(st.amplitude({1, 0, 1, 0}) == Catch::Approx(inv_sqrt2).margin(1e-16));
  CHECK(st.norm_squared() == Catch::Approx(1.0).margin(1e-15));
}

TEST_CASE("entangled input, scalar expansions: term counts and combined tail") {
  SECTION("one partner accelerated, unrestricted") {
    const double r = 0.5, eps = 1e-12;
    const FockVector st = build_bell_out(InertialSpec{}, ScalarSpec{r, eps});
    const int expected =
        (boson_cutoff(r, eps) + 1) + (boson_one_cutoff(r, eps) + 1);
    CHECK(static_cast<int>(st.amplitudes.size()) == expected);
    CHECK(st.norm_squared() >= 1.0 - eps);
    CHECK(st.truncation_tail <= eps);
    // Spot-check both branches against the factor formulas.
    const double t = std::tanh(r), c = std::cosh(r);
    CHECK(st.amplitude({0, 0, 2, 2}) ==
          Catch::Approx(t * t / c / std::sqrt(2.0)).epsilon(1e-14));
    CHECK(st.amplitude({1, 0, 3, 2}) ==
          Catch::Approx(std::sqrt(3.0) * t * t / (c * c) / std::sqrt(2.0)).epsilon(1e-14));
  }
  SECTION("both partners accelerated, restricted: finite product expansion") {
    // (M+1)^2 vacuum-branch tuples plus M^2 one-particle tuples.
    for (int m : {1, 2}) {
      const FockVector st =
          build_bell_out(ScalarRestrictedSpec{kAsinh1, m}, ScalarRestrictedSpec{kAsinh1, m});
      CHECK(static_cast<int>(st.amplitudes.size()) == (m + 1) * (m + 1) + m * m);
      CHECK(st.norm_squared() == Catch::Approx(1.0).margin(1e-14));
    }
  }
  SECTION("mixed statistics are rejected") {
    CHECK_THROWS_AS(build_bell_out(FermionSpec{0.3}, ScalarSpec{0.3, 1e-10}), domain_error);
    CHECK_THROWS_AS(build_bell_out(ScalarRestrictedSpec{0.3, 1}, FermionSpec{0.3}),
                    domain_error);
  }
  SECTION("inertial partner adapts statistics") {
    CHECK(build_bell_out(InertialSpec{}, ScalarSpec{0.3, 1e-10}).statistics ==
          Statistics::boson);
    CHECK(build_bell_out(InertialSpec{}, FermionSpec{0.3}).statistics ==
          Statistics::fermion);
  }
}
