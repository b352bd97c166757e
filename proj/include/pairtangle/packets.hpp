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
#include <complex>

#include "pairtangle/common.hpp"
#include "pairtangle/quadrature.hpp"

namespace pairtangle {

/// One non-relativistic Gaussian packet in a linear potential -m a x.
/// The envelope rides the classical trajectory x0 + v0 t + a t^2/2 and
/// spreads as sigma(t) = sqrt(b + t^2/(4 m^2 b)); the accumulated phase
/// S = m (v0 x + a x t - a v0 t^2/2 - a^2 t^3/6 - v0^2 t/2) makes the
/// ansatz an exact solution of the Schroedinger equation.
struct PacketParams {
  double mass = 1.0;  ///< m > 0
  double b = 1.0;     ///< squared width parameter of the initial envelope, b > 0
  double x0 = 0.0;    ///< initial envelope center
  double v0 = 0.0;    ///< initial velocity
  double a = 0.0;     ///< uniform acceleration
};

inline void validate(const PacketParams& p) {
  require_domain(p.mass > 0.0, "PacketParams: mass must be positive");
  require_domain(p.b > 0.0, "PacketParams: width parameter b must be positive");
}

/// Envelope width sigma(t) of a packet of width parameter b.
inline double packet_sigma(double mass, double b, double t) {
  return std::sqrt(b + t * t / (4.0 * mass * mass * b));
}

/// Amplitude of an accelerated Gaussian packet at (x, t).
inline std::complex<double> accelerated_packet_amplitude(double x, double t,
                                                         const PacketParams& p) {
  validate(p);
  const std::complex<double> w{4.0 * p.b, 2.0 * t / p.mass};
  const double xc = x - p.x0 - p.v0 * t - 0.5 * p.a * t * t;
  const double phase = p.mass * (p.v0 * x + p.a * x * t - 0.5 * p.a * p.v0 * t * t -
                                 p.a * p.a * t * t * t / 6.0 - 0.5 * p.v0 * p.v0 * t);
  return std::pow(8.0 * p.b / kPi, 0.25) / std::sqrt(w) * std::exp(-xc * xc / w) *
         std::exp(std::complex<double>(0.0, phase));
}

/// Amplitude of a free packet released at rest at the origin.
inline std::complex<double> free_packet_amplitude(double x, double t, double mass = 1.0,
                                                  double b = 1.0) {
  return accelerated_packet_amplitude(x, t, PacketParams{mass, b, 0.0, 0.0, 0.0});
}

/// L2 overlap <psi_a | psi_b> at time t, by adaptive quadrature over
/// [min center - 8 sigma, max center + 8 sigma]. Both packets must share
/// (mass, b) so the domain rule covers them jointly.
inline std::complex<double> packet_overlap(const PacketParams& pa, const PacketParams& pb,
                                           double t, const QuadratureOptions& opt = {}) {
  validate(pa);
  validate(pb);
  const double sig = packet_sigma(pa.mass, pa.b, t);
  const double ca = pa.x0 + pa.v0 * t + 0.5 * pa.a * t * t;
  const double cb = pb.x0 + pb.v0 * t + 0.5 * pb.a * t * t;
  const double lo = std::min(ca, cb) - 8.0 * sig;
  const double hi = std::max(ca, cb) + 8.0 * sig;
  auto f = [&](double x) {
    return accelerated_packet_amplitude(x, t, pa) * std::conj(accelerated_packet_amplitude(x, t, pb));
  };
  return integrate(f, lo, hi, opt).value;
}

/// Exchange symmetry of the two-body superposition.
enum class ExchangeSign { plus, minus };

/// Two identical-mass packets entangled by velocity exchange:
///   Psi_pm(x, y) = N [ psi(x; v1, a1) psi(y; v2, a2) pm psi(x; v2, a1) psi(y; v1, a2) ]
/// with N fixed by the two-body norm. The x packet always feels a1 and the
/// y packet a2; only the velocities are swapped between the branches.
struct TwoBodyParams {
  double mass = 1.0;
  double b = 1.0;
  double x0 = 0.0;
  double v1 = 0.0;
  double v2 = 0.0;
  double a1 = 0.0;
  double a2 = 0.0;
  ExchangeSign sign = ExchangeSign::plus;
};

inline void validate(const TwoBodyParams& p) {
  require_domain(p.mass > 0.0, "TwoBodyParams: mass must be positive");
  require_domain(p.b > 0.0, "TwoBodyParams: width parameter b must be positive");
  if (p.sign == ExchangeSign::minus)
    require_domain(p.v1 != p.v2,
                   "TwoBodyParams: antisymmetric state with v1 == v2 is identically zero");
}

/// Dimensionless velocity separation controlling the Schmidt number:
/// v~ = m |v2 - v1| sqrt(b).
inline double v_tilde(const TwoBodyParams& p) {
  validate(p);
  return p.mass * std::fabs(p.v2 - p.v1) * std::sqrt(p.b);
}

inline PacketParams x_packet(const TwoBodyParams& p, double v) {
  return PacketParams{p.mass, p.b, p.x0, v, p.a1};
}
inline PacketParams y_packet(const TwoBodyParams& p, double v) {
  return PacketParams{p.mass, p.b, p.x0, v, p.a2};
}

/// Evaluates a normalized two-body amplitude at fixed time. The (quadrature)
/// normalization is computed once at construction, so grid sweeps stay cheap.
class TwoBodyEvaluator {
 public:
  TwoBodyEvaluator(const TwoBodyParams& params, double t, const QuadratureOptions& opt = {})
      : p_(params), t_(t) {
    validate(p_);
    const std::complex<double> f12 = packet_overlap(x_packet(p_, p_.v1), x_packet(p_, p_.v2), t, opt);
    const std::complex<double> g21 = packet_overlap(y_packet(p_, p_.v2), y_packet(p_, p_.v1), t, opt);
    const double s = sign_factor();
    const double norm_sq = 2.0 + 2.0 * s * (f12 * g21).real();
    require_domain(norm_sq > 1e-12, "TwoBodyEvaluator: state norm is numerically zero");
    norm_ = 1.0 / std::sqrt(norm_sq);
  }

  std::complex<double> amplitude(double x, double y) const {
    const std::complex<double> direct = accelerated_packet_amplitude(x, t_, x_packet(p_, p_.v1)) *
                                        accelerated_packet_amplitude(y, t_, y_packet(p_, p_.v2));
    const std::complex<double> exchanged = accelerated_packet_amplitude(x, t_, x_packet(p_, p_.v2)) *
                                           accelerated_packet_amplitude(y, t_, y_packet(p_, p_.v1));
    return norm_ * (direct + sign_factor() * exchanged);
  }

  double norm_factor() const { return norm_; }
  double time() const { return t_; }
  const TwoBodyParams& params() const { return p_; }

 private:
  double sign_factor() const { return p_.sign == ExchangeSign::plus ? 1.0 : -1.0; }

  TwoBodyParams p_;
  double t_;
  double norm_;
};

/// Convenience single-point evaluation (builds the normalization each call).
inline std::complex<double> two_body_amplitude(double x, double y, double t,
                                               const TwoBodyParams& p,
                                               const QuadratureOptions& opt = {}) {
  return TwoBodyEvaluator(p, t, opt).amplitude(x, y);
}

/// Purity P = Tr rho_x^2 of the one-particle reduced state of Psi_pm. The
/// four-fold integral collapses into products of 1D overlaps: with branch k
/// assigning velocities (x: v_{sigma_k}, y: v_{tau_k}),
///   P = sum_{k,l,m,n} c_k c_l c_m c_n F(sigma_k, sigma_m) F(sigma_l, sigma_n)
///                                   G(tau_k, tau_n) G(tau_l, tau_m) / (norm)^2,
/// where F/G are the x/y packet overlap matrices. The raw 4D integral is
/// never touched.
inline double purity(const TwoBodyParams& p, double t, const QuadratureOptions& opt = {}) {
  validate(p);
  const double vs[2] = {p.v1, p.v2};
  std::complex<double> F[2][2], G[2][2];
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      F[i][j] = packet_overlap(x_packet(p, vs[i]), x_packet(p, vs[j]), t, opt);
      G[i][j] = packet_overlap(y_packet(p, vs[i]), y_packet(p, vs[j]), t, opt);
    }
  }
  const double s = p.sign == ExchangeSign::plus ? 1.0 : -1.0;
  // branch k = 0: (x: v1, y: v2); branch k = 1: (x: v2, y: v1), coefficient s^k
  const auto sig = [](int k) { return k == 0 ? 0 : 1; };
  const auto tau = [](int k) { return k == 0 ? 1 : 0; };
  const auto coeff = [s](int k) { return k == 0 ? 1.0 : s; };
  std::complex<double> norm_sq{0.0, 0.0};
  for (int k = 0; k < 2; ++k)
    for (int l = 0; l < 2; ++l)
      norm_sq += coeff(k) * coeff(l) * F[sig(k)][sig(l)] * G[tau(k)][tau(l)];
  require_domain(norm_sq.real() > 1e-12, "purity: state norm is numerically zero");
  std::complex<double> four{0.0, 0.0};
  for (int k = 0; k < 2; ++k)
    for (int l = 0; l < 2; ++l)
      for (int m = 0; m < 2; ++m)
        for (int n = 0; n < 2; ++n)
          four += coeff(k) * coeff(l) * coeff(m) * coeff(n) * F[sig(k)][sig(m)] *
                  F[sig(l)][sig(n)] * G[tau(k)][tau(n)] * G[tau(l)][tau(m)];
  return (four / (norm_sq * norm_sq)).real();
}

/// Closed-form Schmidt number of Psi_pm as a function of v~ alone:
///   K_+ = 2 / (1 + 4 f / (1 + f)^2) with f = exp(-v~^2);  K_- = 2.
inline double schmidt_number_closed(double vt, ExchangeSign sign) {
  require_domain(vt >= 0.0, "schmidt_number_closed: v~ must be non-negative");
  if (sign == ExchangeSign::minus) return 2.0;
  const double f = std::exp(-vt * vt);
  return 2.0 / (1.0 + 4.0 * f / ((1.0 + f) * (1.0 + f)));
}

/// Schmidt number and purity of the reduced one-particle state, from the
/// overlap quadrature route.
struct SchmidtResult {
  double schmidt_number;  ///< K = 1/P
  double purity;          ///< P = Tr rho^2
};

inline SchmidtResult schmidt_from_purity(const TwoBodyParams& p, double t = 0.0,
                                         const QuadratureOptions& opt = {}) {
  const double pur = purity(p, t, opt);
  return {1.0 / pur, pur};
}

}  // namespace pairtangle
