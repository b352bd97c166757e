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
#include <map>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include "pairtangle/common.hpp"
#include "pairtangle/fock.hpp"
#include "pairtangle/jacobi.hpp"

namespace pairtangle {

/// Largest dense block the eigensolver accepts. Connected-component
/// splitting of the sparse partial transpose keeps physical blocks tiny
/// (tens of rows even at the largest cutoffs), so hitting this means the
/// cutoff is far too aggressive.
inline constexpr int kMaxDenseDimension = 4096;

/// Sanity cap on the nominal product dimension d_A * d_B of a reduced
/// density matrix. Matrices stay sparse maps, so this guards bookkeeping
/// blow-up, not allocation of d^2 doubles.
inline constexpr long kMaxProductDimension = 1L << 22;

/// How the four slots are split into the two observed sides; slots on
/// neither side are traced out. Both sides must be nonempty and disjoint.
struct BipartitionSpec {
  std::vector<SlotLabel> side_a;
  std::vector<SlotLabel> side_b;
};

/// s mode (both species) vs omega mode (both species): nothing traced out.
inline BipartitionSpec whole_mode_bipartition() {
  return {{kSlotSParticle, kSlotSAntiparticle},
          {kSlotOmegaParticle, kSlotOmegaAntiparticle}};
}

/// s mode (both species) vs one species of the omega mode; the other omega
/// species is traced out.
inline BipartitionSpec mode_vs_species(Species omega_species) {
  return {{kSlotSParticle, kSlotSAntiparticle}, {{Mode::omega, omega_species}}};
}

/// One species of the s mode vs one species of the omega mode; the two
/// remaining slots are traced out.
inline BipartitionSpec species_vs_species(Species s_species, Species omega_species) {
  return {{{Mode::s, s_species}}, {{Mode::omega, omega_species}}};
}

/// Reduced density matrix over the A (x) B occupation basis, stored as a
/// sparse symmetric map. Row index is the mixed-radix flattening of the A
/// occupations (major) then the B occupations (minor). Real symmetric by
/// construction (real amplitudes), positive semidefinite before any
/// transposition (it is a Gram matrix), trace = 1 - truncation_tail.
struct DensityMatrix {
  int dim_a = 1;
  int dim_b = 1;
  std::map<std::pair<int, int>, double> entries;
  double trace = 0.0;
  double truncation_tail = 0.0;

  long dim() const { return static_cast<long>(dim_a) * dim_b; }

  double entry(int i, int j) const {
    const auto it = entries.find({i, j});
    return it == entries.end() ? 0.0 : it->second;
  }
};

/// Sum of squared entries = Tr rho^2 for the real symmetric storage.
inline double purity(const DensityMatrix& rho) {
  double s = 0.0;
  for (const auto& [ij, v] : rho.entries) s += v * v;
  return s;
}

namespace detail {

inline std::vector<int> side_indices(const std::vector<SlotLabel>& side) {
  std::vector<int> idx;
  idx.reserve(side.size());
  for (const SlotLabel l : side) idx.push_back(slot_index(l));
  std::sort(idx.begin(), idx.end());
  require_domain(std::adjacent_find(idx.begin(), idx.end()) == idx.end(),
                 "bipartition side lists a slot twice");
  return idx;
}

}  // namespace detail

/// rho_{A,B} = Tr_rest |Psi><Psi| for a four-slot state. Rows and columns
/// run over the kept occupation tuples; terms of |Psi> sharing the same
/// traced-out occupations contribute amp_i * amp_j to entry (i, j), which is
/// what partial tracing of a projector does in the number basis.
inline DensityMatrix reduced_density(const FockVector& state, const BipartitionSpec& spec) {
  require_domain(state.dims.size() == 4,
                 "reduced_density: expected a four-slot state");
  require_domain(!spec.side_a.empty() && !spec.side_b.empty(),
                 "reduced_density: both sides of the bipartition must be nonempty");
  const std::vector<int> a = detail::side_indices(spec.side_a);
  const std::vector<int> b = detail::side_indices(spec.side_b);
  for (int ia : a)
    for (int ib : b)
      require_domain(ia != ib, "reduced_density: sides of the bipartition must be disjoint");

  std::vector<int> traced;
  for (int i = 0; i < 4; ++i) {
    const bool kept = std::find(a.begin(), a.end(), i) != a.end() ||
                      std::find(b.begin(), b.end(), i) != b.end();
    if (!kept) traced.push_back(i);
  }

  DensityMatrix rho;
  rho.dim_a = 1;
  for (int i : a) rho.dim_a *= state.dims[i];
  rho.dim_b = 1;
  for (int i : b) rho.dim_b *= state.dims[i];
  if (rho.dim() > kMaxProductDimension)
    throw numeric_error(
        "reduced_density: product dimension " + std::to_string(rho.dim()) +
        " exceeds the sanity cap; reduce the boson cutoff (larger epsilon)");
  rho.truncation_tail = state.truncation_tail;

  auto flat = [&state](const std::vector<int>& occ, const std::vector<int>& slots) {
    int idx = 0;
    for (int s : slots) idx = idx * state.dims[s] + occ[s];
    return idx;
  };

  // Group the expansion terms by their traced-out occupations.
  std::map<std::vector<int>, std::vector<std::pair<int, double>>> groups;
  for (const auto& [occ, amp] : state.amplitudes) {
    std::vector<int> key;
    key.reserve(traced.size());
    for (int s : traced) key.push_back(occ[s]);
    groups[std::move(key)].emplace_back(flat(occ, a) * rho.dim_b + flat(occ, b), amp);
  }
  for (const auto& [key, members] : groups)
    for (const auto& [i, amp_i] : members)
      for (const auto& [j, amp_j] : members) rho.entries[{i, j}] += amp_i * amp_j;

  for (const auto& [ij, v] : rho.entries)
    if (ij.first == ij.second) rho.trace += v;
  return rho;
}

/// Transpose the A-side indices: entry ((ia,ib),(ja,jb)) moves to
/// ((ja,ib),(ia,jb)). Trace and Hermiticity are preserved; positivity is
/// exactly what it may lose, which is what negativity detects.
inline DensityMatrix partial_transpose(const DensityMatrix& rho) {
  DensityMatrix out;
  out.dim_a = rho.dim_a;
  out.dim_b = rho.dim_b;
  out.trace = rho.trace;
  out.truncation_tail = rho.truncation_tail;
  for (const auto& [ij, v] : rho.entries) {
    const int ia = ij.first / rho.dim_b, ib = ij.first % rho.dim_b;
    const int ja = ij.second / rho.dim_b, jb = ij.second % rho.dim_b;
    out.entries[{ja * rho.dim_b + ib, ia * rho.dim_b + jb}] = v;
  }
  return out;
}

struct NegativityResult {
  double negativity = 0.0;
  std::vector<double> negative_eigenvalues;  // sorted ascending (most negative first)
};

/// N_e = |sum of eigenvalues below -1e-12| of a Hermitian (here: real
/// symmetric) matrix. The sparse matrix is first split into connected
/// components with a union-find over its nonzero pattern; each component is
/// then diagonalized densely. Indices that appear in no entry contribute
/// eigenvalue 0 and are skipped. Eigenvalues in [-1e-12, 0] are round-off
/// zeros of the Jacobi sweep and never counted.
inline NegativityResult negativity(const DensityMatrix& pt_matrix) {
  std::map<int, int> parent;
  auto find = [&parent](int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  for (const auto& [ij, v] : pt_matrix.entries) {
    if (v == 0.0) continue;
    if (!parent.count(ij.first)) parent[ij.first] = ij.first;
    if (!parent.count(ij.second)) parent[ij.second] = ij.second;
    const int ri = find(ij.first), rj = find(ij.second);
    if (ri != rj) parent[std::max(ri, rj)] = std::min(ri, rj);
  }

  std::map<int, std::vector<int>> components;
  for (const auto& [i, p] : parent) components[find(i)].push_back(i);

  NegativityResult result;
  for (const auto& [root, members] : components) {
    const int k = static_cast<int>(members.size());
    if (k > kMaxDenseDimension)
      throw numeric_error(
          "negativity: connected component of dimension " + std::to_string(k) +
          " exceeds " + std::to_string(kMaxDenseDimension) +
          "; reduce the boson cutoff (larger epsilon)");
    std::vector<double> eig;
    if (k == 1) {
      eig = {pt_matrix.entry(members[0], members[0])};
    } else {
      std::map<int, int> local;
      for (int m = 0; m < k; ++m) local[members[m]] = m;
      std::vector<double> dense(static_cast<std::size_t>(k) * k, 0.0);
      for (int mi = 0; mi < k; ++mi)
        for (int mj = 0; mj < k; ++mj)
          dense[static_cast<std::size_t>(mi) * k + mj] =
              pt_matrix.entry(members[mi], members[mj]);
      eig = jacobi_eigenvalues(std::move(dense), k);
    }
    for (double lambda : eig)
      if (lambda < negative_eigenvalue_floor) {
        result.negativity -= lambda;
        result.negative_eigenvalues.push_back(lambda);
      }
  }
  std::sort(result.negative_eigenvalues.begin(), result.negative_eigenvalues.end());
  return result;
}

/// LN = log2(2 N_e + 1).
inline double log_negativity(double n_e) {
  require_domain(n_e >= 0.0, "log_negativity: negativity must be non-negative");
  return std::log2(1.0 + 2.0 * n_e);
}

/// Negativity and logarithmic negativity of one bipartition, together with
/// the error budget inherited from state truncation: a state missing tail
/// mass delta can shift N_e by at most ~ 4 sqrt(d_A d_B) delta (trace-norm
/// perturbation spread over at most d_A d_B eigenvalues), and LN responds
/// with slope at most 2/ln 2. Claims like "LN = 0" are therefore asserted
/// as LN <= ln_bound, never as exact zeros of truncated states.
struct EntanglementReport {
  double negativity = 0.0;
  double log_negativity = 0.0;
  std::vector<double> negative_eigenvalues;
  double truncation_error = 0.0;   ///< delta: probability mass the state lost
  double negativity_bound = 0.0;   ///< |Delta N_e| <= 4 sqrt(d_A d_B) delta
  double ln_bound = 0.0;           ///< (2 / ln 2) * negativity_bound
};

inline EntanglementReport analyze_bipartition(const FockVector& state,
                                              const BipartitionSpec& spec) {
  const DensityMatrix rho = reduced_density(state, spec);
  const NegativityResult neg = negativity(partial_transpose(rho));
  EntanglementReport report;
  report.negativity = neg.negativity;
  report.log_negativity = log_negativity(neg.negativity);
  report.negative_eigenvalues = neg.negative_eigenvalues;
  report.truncation_error = state.truncation_tail;
  report.negativity_bound =
      4.0 * std::sqrt(static_cast<double>(rho.dim())) * state.truncation_tail;
  report.ln_bound = 2.0 / std::numbers::ln2 * report.negativity_bound;
  return report;
}

/// Which of the two partners (or both) undergoes uniform acceleration.
enum class Scenario { one_accelerated, both_accelerated };

// ---------------------------------------------------------------------------
// Closed forms. These are the independent expressions the generic pipeline
// is cross-checked against; none of them call into the machinery above.
// ---------------------------------------------------------------------------

/// Fermion pair, one partner accelerated. The full split stays maximally
/// entangled (LN = 1); tracing the omega antiparticles leaves
/// log2(1 + cos^2 r_f), tracing the particles log2(1 + sin^2 r_f) — the
/// entanglement shifts from particles to antiparticles as r_f grows but the
/// two negativities always add up to 1/2 + ... on the nose.
struct FermionOneLn {
  double total = 1.0;
  double sp = 0.0;  ///< s mode vs omega particles
  double sa = 0.0;  ///< s mode vs omega antiparticles
};

inline FermionOneLn fermion_closed_one(double r_f) {
  require_domain(r_f >= 0.0 && r_f <= r_f_max,
                 "fermion_closed_one: r_f must lie in [0, pi/2]");
  const double c2 = std::cos(r_f) * std::cos(r_f);
  const double s2 = std::sin(r_f) * std::sin(r_f);
  return {1.0, std::log2(1.0 + c2), std::log2(1.0 + s2)};
}

/// Fermion pair, both partners accelerated with the same r_f.
struct FermionBothLn {
  double total = 1.0;
  double pp = 0.0;  ///< particles vs particles
  double aa = 0.0;  ///< antiparticles vs antiparticles
  double pa = 0.0;  ///< particles vs antiparticles (= ap by symmetry)
};

inline FermionBothLn fermion_closed_both(double r_f) {
  require_domain(r_f >= 0.0 && r_f <= r_f_max,
                 "fermion_closed_both: r_f must lie in [0, pi/2]");
  const double c2 = std::cos(r_f) * std::cos(r_f);
  const double s2 = std::sin(r_f) * std::sin(r_f);
  return {1.0, std::log2(1.0 + c2 * c2), std::log2(1.0 + s2 * s2),
          std::log2(1.0 + c2 * s2)};
}

/// Scalar pair, one partner accelerated, no pair-number restriction:
/// LN of (s mode) vs (omega particles) from the block-diagonal structure of
/// the partial transpose. Block n couples |1, n> with |0, n+1> and
/// contributes one potentially negative eigenvalue; the series of their
/// moduli is summed until increments fall below 1e-15. Terms shrink like
/// tanh^{2n} r, so the cap is unreachable for the allowed r range.
inline double scalar_ln_sp_unrestricted(double r) {
  require_domain(r >= 0.0 && r <= r_max,
                 "scalar_ln_sp_unrestricted: r must lie in [0, asinh(1)]");
  const double t = std::tanh(r);
  const double c2 = std::cosh(r) * std::cosh(r);
  double sum = 1.0 / (2.0 * c2);
  for (int n = 0; n < 5000; ++n) {
    const double d1 = n == 0 ? 0.0 : n * std::pow(t, 2 * n - 2) / (2.0 * c2 * c2);
    const double d2 = std::pow(t, 2 * n + 2) / (2.0 * c2);
    const double o = std::pow(t, 2 * n) * std::sqrt(n + 1.0) / (2.0 * c2 * std::cosh(r));
    const double term = std::sqrt((d1 - d2) * (d1 - d2) + 4.0 * o * o);
    sum += term;
    if (term < 1e-15 && n > 2) return std::log2(sum);
  }
  throw numeric_error("scalar_ln_sp_unrestricted: series did not converge within 5000 terms");
}

/// Scalar pair, one partner accelerated, at most M pairs produced per mode.
/// Unlike the unrestricted case the antiparticle side now carries
/// entanglement too, so both closed forms are reported.
struct ScalarRestrictedLn {
  double sp = 0.0;  ///< s mode vs omega particles
  double sa = 0.0;  ///< s mode vs omega antiparticles
};

inline ScalarRestrictedLn scalar_closed_restricted(double r, int max_pairs) {
  const RestrictionParams p = restriction_params(r, max_pairs);
  const double t = std::tanh(r);
  const double c2 = std::cosh(r) * std::cosh(r);
  const double n1 = p.n1, n2 = p.n2;

  // Particle side: block n of the partial transpose contributes
  // (t^{2n-4} / 2 cosh^2 r) (sqrt(S^2 + E) - S). The n = 1 block is written
  // in its cancellation-free form (S picks up a t^4 that would otherwise be
  // divided back out of t^{-2}).
  double sum = 0.0;
  for (int n = 1; n <= max_pairs; ++n) {
    if (n == 1) {
      sum += n1 / (2.0 * c2) *
             (std::sqrt(n1 * n1 * t * t * t * t + 4.0 * n2 * n2 / c2) - n1 * t * t);
    } else {
      const double s = (n - 1) * n2 * n2 / c2 + n1 * n1 * t * t * t * t;
      const double e = 4.0 * n1 * n1 * n2 * n2 * t * t * t * t / c2;
      sum += std::pow(t, 2 * n - 4) / (2.0 * c2) * (std::sqrt(s * s + e) - s);
    }
  }

  // Antiparticle side: a single 2x2 block of the partial transpose goes
  // negative, at occupations (M, M-1).
  const double pref = n1 * n1 * std::pow(t, 2 * max_pairs - 2) / (2.0 * c2);
  const double disc = 1.0 + 4.0 * n2 * n2 * max_pairs * t * t / (n1 * n1 * c2);
  ScalarRestrictedLn out;
  out.sp = std::log2(1.0 + sum);
  out.sa = std::log2(1.0 - pref * (1.0 - std::sqrt(disc)));
  return out;
}

}  // namespace pairtangle
