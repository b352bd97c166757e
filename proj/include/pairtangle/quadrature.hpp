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
#include <sstream>
#include <utility>

#include "pairtangle/common.hpp"

namespace pairtangle {

struct QuadratureOptions {
  double abs_tol = 1e-12;        ///< absolute tolerance for the whole interval
  double rel_tol = 1e-12;        ///< relative tolerance against the running estimate
  int max_depth = 40;            ///< bisection depth guard
  long max_evaluations = 4000000;  ///< integrand evaluation budget
};

struct QuadratureOutcome {
  std::complex<double> value;
  double error_bound;  ///< accumulated |Kronrod - Gauss| over accepted panels
  long evaluations;
};

namespace detail {

// Gauss-Kronrod 7-15 pair on [-1, 1]: Kronrod abscissae (non-negative half),
// Kronrod weights, and the embedded 7-point Gauss weights.
inline constexpr double kGk15Nodes[8] = {
    0.9914553711208126, 0.9491079123427585, 0.8648644233597691, 0.7415311855993944,
    0.5860872354676911, 0.4058451513773972, 0.2077849550078985, 0.0};
inline constexpr double kGk15WeightsK[8] = {
    0.0229353220105292, 0.0630920926299786, 0.1047900103222502, 0.1406532597155259,
    0.1690047266392679, 0.1903505780647854, 0.2044329400752989, 0.2094821410847278};
inline constexpr double kGk15WeightsG[4] = {
    0.1294849661688697, 0.2797053914892767, 0.3818300505051189, 0.4179591836734694};

template <typename F>
void gk15_panel(F& f, double lo, double hi, std::complex<double>& kronrod,
                double& gauss_diff, long& evals) {
  const double mid = 0.5 * (lo + hi);
  const double hlen = 0.5 * (hi - lo);
  std::complex<double> resk = kGk15WeightsK[7] * f(mid);
  std::complex<double> resg = kGk15WeightsG[3] * f(mid);
  for (int j = 0; j < 7; ++j) {
    const double dx = hlen * kGk15Nodes[j];
    const std::complex<double> sum = f(mid - dx) + f(mid + dx);
    resk += kGk15WeightsK[j] * sum;
    if (j % 2 == 1) resg += kGk15WeightsG[j / 2] * sum;
  }
  evals += 15;
  kronrod = resk * hlen;
  gauss_diff = std::abs((resk - resg) * hlen);
}

template <typename F>
void gk15_adaptive(F& f, double lo, double hi, double tol_per_length, int depth,
                   const QuadratureOptions& opt, QuadratureOutcome& out) {
  std::complex<double> panel;
  double err;
  gk15_panel(f, lo, hi, panel, err, out.evaluations);
  if (out.evaluations > opt.max_evaluations) {
    std::ostringstream msg;
    msg << "quadrature exceeded evaluation budget (" << opt.max_evaluations
        << ") on [" << lo << ", " << hi << "]";
    throw numeric_error(msg.str());
  }
  const double tol_local = tol_per_length * (hi - lo);
  if (err <= tol_local || err <= opt.rel_tol * std::abs(panel)) {
    out.value += panel;
    out.error_bound += err;
    return;
  }
  if (depth >= opt.max_depth) {
    std::ostringstream msg;
    msg << "quadrature failed to converge on [" << lo << ", " << hi
        << "]: error estimate " << err << " > local tolerance " << tol_local
        << " at depth " << depth;
    throw numeric_error(msg.str());
  }
  const double mid = 0.5 * (lo + hi);
  gk15_adaptive(f, lo, mid, tol_per_length, depth + 1, opt, out);
  gk15_adaptive(f, mid, hi, tol_per_length, depth + 1, opt, out);
}

}  // namespace detail

/// Adaptive Gauss-Kronrod (7, 15) quadrature of a complex-valued integrand
/// over [lo, hi]. Panels are accepted when the Kronrod-Gauss discrepancy
/// meets the tolerance prorated by panel length; otherwise the panel is
/// bisected. Deterministic: accumulation happens in left-to-right interval
/// order. Throws numeric_error when the depth or evaluation guard trips.
template <typename F>
QuadratureOutcome integrate(F&& f, double lo, double hi, const QuadratureOptions& opt = {}) {
  require_domain(lo < hi, "integrate: interval must have lo < hi");
  QuadratureOutcome out{{0.0, 0.0}, 0.0, 0};
  auto& fn = f;
  detail::gk15_adaptive(fn, lo, hi, opt.abs_tol / (hi - lo), 0, opt, out);
  return out;
}

}  // namespace pairtangle
