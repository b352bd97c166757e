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

#pragma once

#include <cmath>
#include <string>

#include "pairtangle/common.hpp"

namespace pairtangle {

/// Uniform electric field acting on a charge of mass m. In natural units the
/// classical acceleration is a = E/m, and pair production is controlled by
/// the dimensionless combination mu^2 = m^2/(2E) = m/(2a).
struct FieldConfig {
  double mass = 1.0;   ///< particle mass m > 0
  double field = 1.0;  ///< field strength E > 0 (charge absorbed into E)
};

inline void validate(const FieldConfig& cfg) {
  require_domain(cfg.mass > 0.0, "FieldConfig: mass must be positive");
  require_domain(cfg.field > 0.0, "FieldConfig: field must be positive");
}

/// Classical acceleration a = E/m of the charge in the field.
inline double acceleration(const FieldConfig& cfg) {
  validate(cfg);
  return cfg.field / cfg.mass;
}

/// mu^2 = m^2/(2E), the tunneling exponent scale of pair production.
inline double mu_squared(const FieldConfig& cfg) {
  validate(cfg);
  return cfg.mass * cfg.mass / (2.0 * cfg.field);
}

/// |Gamma(1/2 + iy)| from the reflection identity
///   |Gamma(1/2 + iy)|^2 = pi / cosh(pi y),
/// written as 2 pi e^{-pi|y|} / (1 + e^{-2 pi |y|}) so it cannot overflow.
inline double gamma_half_imag_mod(double y) {
  const double x = kPi * std::fabs(y);
  return std::sqrt(2.0 * kPi * std::exp(-x) / (1.0 + std::exp(-2.0 * x)));
}

/// |Gamma(iy)| for y > 0 from the reflection identity
///   |Gamma(iy)|^2 = pi / (y sinh(pi y)),
/// written as 2 pi e^{-pi y} / (y (1 - e^{-2 pi y})) so it cannot overflow.
inline double gamma_imag_mod(double y) {
  require_domain(y > 0.0, "gamma_imag_mod: y must be positive");
  const double x = kPi * y;
  return std::sqrt(2.0 * kPi * std::exp(-x) / (y * -std::expm1(-2.0 * x)));
}

/// Bogoliubov data for a charged scalar in a uniform field. The out-basis is
/// related to the in-basis by coefficients with |alpha|^2 - |beta|^2 = 1;
/// the squeezing parameter r = asinh(|beta|) reparameterizes them.
struct BogoliubovScalar {
  double mu2;        ///< m^2/(2E)
  double alpha_mod;  ///< |alpha| = sqrt(2 pi) e^{-pi mu^2/2} / |Gamma(1/2 + i mu^2)|
  double beta_mod;   ///< |beta| = e^{-pi mu^2}
  double r;          ///< asinh(|beta|), in [0, asinh 1]
};

/// Bogoliubov data for a Dirac fermion in a uniform field. Unitarity reads
/// |alpha|^2 + |beta|^2 = 1; the squeezing parameter is r_f = asin(beta).
struct BogoliubovFermion {
  double mu2;        ///< m^2/(2E)
  double alpha_mod;  ///< |alpha| = sqrt(2 pi / mu^2) e^{-pi mu^2/2} / |Gamma(i mu^2)|
  double beta_mod;   ///< |beta| = e^{-pi mu^2}
  double r_f;        ///< asin(|beta|), in [0, pi/2]
};

/// Scalar Bogoliubov coefficients at tunneling parameter mu^2 >= 0. |alpha|
/// is evaluated through the Gamma-modulus form; unitarity is a consequence,
/// not an input.
inline BogoliubovScalar scalar_coefficients(double mu2) {
  require_domain(mu2 >= 0.0, "scalar_coefficients: mu^2 must be non-negative");
  const double beta = std::exp(-kPi * mu2);
  const double alpha = std::sqrt(2.0 * kPi) * std::exp(-kPi * mu2 / 2.0) / gamma_half_imag_mod(mu2);
  return {mu2, alpha, beta, std::asinh(beta)};
}

/// Fermion Bogoliubov coefficients at tunneling parameter mu^2 >= 0. The
/// mu^2 = 0 limit is |alpha| = 0, |beta| = 1, r_f = pi/2 (every mode pairs).
inline BogoliubovFermion fermion_coefficients(double mu2) {
  require_domain(mu2 >= 0.0, "fermion_coefficients: mu^2 must be non-negative");
  const double beta = std::exp(-kPi * mu2);
  if (mu2 == 0.0) return {mu2, 0.0, 1.0, r_f_max};
  const double alpha =
      std::sqrt(2.0 * kPi / mu2) * std::exp(-kPi * mu2 / 2.0) / gamma_imag_mod(mu2);
  return {mu2, alpha, beta, std::asin(std::min(beta, 1.0))};
}

/// Squeezing parameter of a mode produced at acceleration a = E/m:
/// |beta| = e^{-pi m/(2a)}, mapped through asinh (bosons) or asin (fermions).
inline double r_from_acceleration(double mass, double accel, Statistics stats) {
  require_domain(mass > 0.0, "r_from_acceleration: mass must be positive");
  require_domain(accel > 0.0, "r_from_acceleration: acceleration must be positive");
  const double beta = std::exp(-kPi * mass / (2.0 * accel));
  return stats == Statistics::boson ? std::asinh(beta) : std::asin(beta);
}

/// Mean occupation numbers seen in two complementary experiments at frequency
/// omega: the spectrum of pairs produced from the vacuum by the accelerating
/// field (Boltzmann factor in m/a) versus the thermal Unruh spectrum an
/// accelerated detector sees in the inertial vacuum (Planck factor in
/// omega/a). They are different functions; the pair spectrum depends on the
/// mass, the Unruh spectrum on the detected frequency.
struct SpectrumPair {
  double accelerated;  ///< e^{-pi m/a} = sinh^2 r
  double unruh;        ///< 1 / (e^{2 pi omega/a} - 1)
};

inline SpectrumPair spectra(double mass, double accel, double omega) {
  require_domain(mass > 0.0, "spectra: mass must be positive");
  require_domain(accel > 0.0, "spectra: acceleration must be positive");
  require_domain(omega > 0.0, "spectra: omega must be positive");
  return {std::exp(-kPi * mass / accel), 1.0 / std::expm1(2.0 * kPi * omega / accel)};
}

}  // namespace pairtangle
