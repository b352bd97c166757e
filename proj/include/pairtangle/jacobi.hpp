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

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "pairtangle/common.hpp"

namespace pairtangle {

/// Eigenvalues of a dense real symmetric matrix by the cyclic Jacobi
/// iteration. Every density matrix and partial transpose handled here is
/// real symmetric (all state amplitudes are real with phases fixed to zero),
/// so no complex path is needed.
///
/// `a` is the row-major n x n matrix; it is consumed. Sweeps rotate away each
/// off-diagonal pair (p, q) in turn until the off-diagonal Frobenius norm
/// drops below `off_tol`. Convergence is quadratic once the matrix is nearly
/// diagonal; the sweep cap is generous and only a genuinely pathological
/// input can hit it, in which case a numeric_error carries the diagnostics.
///
/// Returns the eigenvalues sorted ascending.
inline std::vector<double> jacobi_eigenvalues(std::vector<double> a, int n,
                                              double off_tol = 1e-13,
                                              int max_sweeps = 64) {
  require_domain(n >= 1, "jacobi_eigenvalues: dimension must be >= 1");
  require_domain(static_cast<std::size_t>(n) * static_cast<std::size_t>(n) == a.size(),
                 "jacobi_eigenvalues: matrix storage does not match dimension");
  auto at = [&](int i, int j) -> double& { return a[static_cast<std::size_t>(i) * n + j]; };

  auto off_norm = [&]() {
    double s = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) s += at(i, j) * at(i, j);
    return std::sqrt(2.0 * s);
  };

  if (n == 1) return {a[0]};

  double off = off_norm();
  int sweep = 0;
  while (off >= off_tol) {
    if (++sweep > max_sweeps)
      throw numeric_error("jacobi_eigenvalues: no convergence after " +
                          std::to_string(max_sweeps) + " sweeps (n=" + std::to_string(n) +
                          ", off-norm=" + std::to_string(off) + ")");
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = at(p, q);
        if (apq == 0.0) continue;
        // Classic rotation choice: the smaller-angle root of
        // tan(2 phi) = 2 a_pq / (a_qq - a_pp), stable when the gap is large.
        const double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
        double t;
        if (std::fabs(theta) > 1e150) {
          t = 1.0 / (2.0 * theta);
        } else {
          t = 1.0 / (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
          if (theta < 0.0) t = -t;
        }
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        const double tau = s / (1.0 + c);

        at(p, p) -= t * apq;
        at(q, q) += t * apq;
        at(p, q) = 0.0;
        at(q, p) = 0.0;
        for (int k = 0; k < n; ++k) {
          if (k == p || k == q) continue;
          const double akp = at(k, p);
          const double akq = at(k, q);
          at(k, p) = akp - s * (akq + tau * akp);
          at(p, k) = at(k, p);
          at(k, q) = akq + s * (akp - tau * akq);
          at(q, k) = at(k, q);
        }
      }
    }
    off = off_norm();
  }

  std::vector<double> eig(n);
  for (int i = 0; i < n; ++i) eig[i] = at(i, i);
  std::sort(eig.begin(), eig.end());
  return eig;
}

}  // namespace pairtangle
