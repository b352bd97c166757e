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
#include <future>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

namespace pairtangle {

inline constexpr double kPi = std::numbers::pi;

/// Raised when inputs are outside the physical/legal domain of an operation
/// (non-positive mass, squeezing beyond its range, degenerate states, ...).
class domain_error : public std::invalid_argument {
 public:
  explicit domain_error(const std::string& what) : std::invalid_argument(what) {}
};

/// Raised when a numerical procedure fails to converge or would exceed a
/// resource guard (quadrature depth, Jacobi sweeps, dense matrix size).
class numeric_error : public std::runtime_error {
 public:
  explicit numeric_error(const std::string& what) : std::runtime_error(what) {}
};

/// Statistics of the produced pairs. Bosonic modes squeeze into an infinite
/// two-mode expansion, fermionic modes saturate at single occupancy.
enum class Statistics { boson, fermion };

inline const char* to_string(Statistics s) {
  return s == Statistics::boson ? "boson" : "fermion";
}

/// Largest bosonic squeezing parameter: r = asinh(|beta|) with |beta| <= 1,
/// reached in the infinite-acceleration limit.
inline const double r_max = std::asinh(1.0);

/// Largest fermionic squeezing parameter: r_f = asin(beta_f) with beta_f <= 1.
inline constexpr double r_f_max = kPi / 2.0;

/// Eigenvalues of a partial transpose above this floor are treated as
/// numerical zeros and do not contribute to the negativity.
inline constexpr double negative_eigenvalue_floor = -1e-12;

inline void require_domain(bool condition, const std::string& what) {
  if (!condition) throw domain_error(what);
}

/// Run body(i) for i in [0, n) on a small thread pool. Exceptions from any
/// chunk are rethrown. Callers write results into preallocated slots indexed
/// by i, so the assembled output is independent of scheduling order.
template <typename Body>
void parallel_for(int n, Body&& body) {
  if (n <= 0) return;
  const int hw = static_cast<int>(std::thread::hardware_concurrency());
  const int workers = std::max(1, std::min(n, hw > 0 ? hw : 4));
  if (workers == 1) {
    for (int i = 0; i < n; ++i) body(i);
    return;
  }
  std::vector<std::future<void>> futures;
  futures.reserve(static_cast<std::size_t>(workers));
  for (int w = 0; w < workers; ++w) {
    futures.push_back(std::async(std::launch::async, [&, w]() {
      for (int i = w; i < n; i += workers) body(i);
    }));
  }
  for (auto& f : futures) f.get();  // propagates the first exception
}

}  // namespace pairtangle
