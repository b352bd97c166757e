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
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "pairtangle/common.hpp"

namespace pairtangle {

/// Mode label of a slot. The `s` mode is held by the inertial partner; the
/// `omega` mode is the one whose quanta get re-expanded in the accelerated
/// (out) basis, where pair production populates both species.
enum class Mode { s, omega };

/// Particle / antiparticle species within one mode.
enum class Species { particle, antiparticle };

/// One tensor factor of the four-slot occupation basis.
struct SlotLabel {
  Mode mode;
  Species species;
};

/// Canonical slot position, fixed everywhere (including exports):
/// (s,p) = 0, (s,a) = 1, (omega,p) = 2, (omega,a) = 3.
constexpr int slot_index(SlotLabel l) {
  return (l.mode == Mode::s ? 0 : 2) + (l.species == Species::particle ? 0 : 1);
}

constexpr SlotLabel kSlotSParticle{Mode::s, Species::particle};
constexpr SlotLabel kSlotSAntiparticle{Mode::s, Species::antiparticle};
constexpr SlotLabel kSlotOmegaParticle{Mode::omega, Species::particle};
constexpr SlotLabel kSlotOmegaAntiparticle{Mode::omega, Species::antiparticle};

/// Sparse expansion of a state over occupation-number tuples with real
/// amplitudes (every phase in the mode transformations used here is fixed to
/// zero, so nothing complex survives).
///
/// Two layouts occur: two-slot single-mode factors ordered (particle,
/// antiparticle), and full four-slot states ordered (s,p),(s,a),(w,p),(w,a).
/// Values are immutable once built and safe to share across threads.
struct FockVector {
  Statistics statistics = Statistics::boson;
  /// Per-slot basis size (maximum occupation + 1), derived from content.
  std::vector<int> dims;
  /// occupation tuple -> amplitude; exact zeros are never stored.
  std::map<std::vector<int>, double> amplitudes;
  /// Upper bound on the probability mass lost to truncation. Exactly zero
  /// for fermionic and pair-number-restricted states.
  double truncation_tail = 0.0;

  double norm_squared() const {
    double s = 0.0;
    for (const auto& [occ, amp] : amplitudes) s += amp * amp;
    return s;
  }

  double amplitude(const std::vector<int>& occ) const {
    const auto it = amplitudes.find(occ);
    return it == amplitudes.end() ? 0.0 : it->second;
  }
};

namespace detail {

/// Insert one basis term, growing the slot dimensions; exact zeros are
/// skipped so trivial limits (r = 0) produce exact single-term tables.
inline void add_term(FockVector& v, std::vector<int> occ, double amp) {
  if (amp == 0.0) return;
  for (std::size_t i = 0; i < occ.size(); ++i)
    if (occ[i] + 1 > v.dims[i]) v.dims[i] = occ[i] + 1;
  v.amplitudes[std::move(occ)] += amp;
}

inline double measured_tail(const FockVector& v) {
  const double lost = 1.0 - v.norm_squared();
  return lost > 0.0 ? lost : 0.0;
}

}  // namespace detail

/// Truncation order for the squeezed-vacuum series sum_n tanh^n r |n n>:
/// smallest N with the geometric tail (tanh^2 r)^{N+1} <= eps, plus two
/// safety terms. r = 0 needs no terms beyond |0 0>.
inline int boson_cutoff(double r, double eps) {
  require_domain(eps > 0.0 && eps < 1.0, "boson_cutoff: eps must lie in (0, 1)");
  require_domain(r >= 0.0, "boson_cutoff: squeezing parameter must be non-negative");
  if (r == 0.0) return 0;
  const double t = std::tanh(r);
  const int n =
      static_cast<int>(std::ceil(std::log(eps * (1.0 - t * t)) / (2.0 * std::log(t)))) + 2;
  return n > 0 ? n : 0;
}

/// Truncation order for the one-particle series sum_n sqrt(n+1) tanh^n r
/// |n+1, n>. Its tail carries the extra factor (n+1), so the vacuum cutoff
/// is extended until the analytic remainder
///   sum_{k>N} (k+1) x^k (1-x)^2 = x^{N+1} ((N+2) - (N+1) x),  x = tanh^2 r,
/// drops to eps as well.
inline int boson_one_cutoff(double r, double eps) {
  int n = boson_cutoff(r, eps);
  if (r == 0.0) return 0;
  const double x = std::tanh(r) * std::tanh(r);
  auto tail = [x](int big_n) {
    return std::pow(x, big_n + 1) * ((big_n + 2) - (big_n + 1) * x);
  };
  while (tail(n) > eps) ++n;
  return n;
}

/// Accelerated-basis image of the fermion-mode vacuum:
///   cos r_f |0_p 0_a>  -  sin r_f |1_p 1_a>.
/// The arbitrary relative phase is fixed to zero, leaving exactly one
/// negative amplitude. Norm is exactly 1.
inline FockVector fermion_out_vacuum(double r_f) {
  require_domain(r_f >= 0.0 && r_f <= r_f_max,
                 "fermion_out_vacuum: r_f must lie in [0, pi/2]");
  FockVector v;
  v.statistics = Statistics::fermion;
  v.dims = {1, 1};
  detail::add_term(v, {0, 0}, std::cos(r_f));
  detail::add_term(v, {1, 1}, -std::sin(r_f));
  return v;
}

/// Accelerated-basis image of the fermion one-particle state. Pauli blocking
/// forbids producing a pair on top of the occupied level, so the table is
/// exactly {(1,0): 1} for every r_f.
inline FockVector fermion_out_one(double r_f) {
  require_domain(r_f >= 0.0 && r_f <= r_f_max,
                 "fermion_out_one: r_f must lie in [0, pi/2]");
  FockVector v;
  v.statistics = Statistics::fermion;
  v.dims = {1, 1};
  detail::add_term(v, {1, 0}, 1.0);
  return v;
}

/// Accelerated-basis image of the charged-scalar vacuum: the two-mode
/// squeezed vacuum (1/cosh r) sum_n tanh^n r |n_p n_a>, truncated at
/// boson_cutoff(r, eps). Amplitudes keep the exact 1/cosh normalization (no
/// renormalization after truncation); the discarded mass is recorded in
/// truncation_tail and stays <= eps.
inline FockVector scalar_out_vacuum(double r, double eps) {
  require_domain(r >= 0.0 && r <= r_max,
                 "scalar_out_vacuum: r must lie in [0, asinh(1)]");
  const int n_c = boson_cutoff(r, eps);
  const double t = std::tanh(r);
  const double inv_cosh = 1.0 / std::cosh(r);
  FockVector v;
  v.statistics = Statistics::boson;
  v.dims = {1, 1};
  for (int n = 0; n <= n_c; ++n) detail::add_term(v, {n, n}, std::pow(t, n) * inv_cosh);
  v.truncation_tail = detail::measured_tail(v);
  return v;
}

/// Accelerated-basis image of the one-particle scalar state:
///   (1/cosh^2 r) sum_n sqrt(n+1) tanh^n r |(n+1)_p n_a>,
/// truncated at boson_one_cutoff(r, eps) with the tail recorded.
inline FockVector scalar_out_one(double r, double eps) {
  require_domain(r >= 0.0 && r <= r_max, "scalar_out_one: r must lie in [0, asinh(1)]");
  const int n_c = boson_one_cutoff(r, eps);
  const double t = std::tanh(r);
  const double inv_cosh2 = 1.0 / (std::cosh(r) * std::cosh(r));
  FockVector v;
  v.statistics = Statistics::boson;
  v.dims = {1, 1};
  for (int n = 0; n <= n_c; ++n)
    detail::add_term(v, {n + 1, n}, std::sqrt(n + 1.0) * std::pow(t, n) * inv_cosh2);
  v.truncation_tail = detail::measured_tail(v);
  return v;
}

/// Normalization data for states restricted to at most M produced pairs per
/// mode. Both factors are finite and >= 1 for r > 0, approaching the
/// unrestricted 1/cosh normalizations as M grows.
struct RestrictionParams {
  int max_pairs = 1;  ///< M, the pair-production ceiling per mode
  double n1 = 1.0;    ///< vacuum-branch factor  (1 - tanh^{2M+2} r)^{-1/2}
  double n2 = 1.0;    ///< one-particle factor   (1 - (M+1) tanh^{2M} r + M tanh^{2M+2} r)^{-1/2}
};

inline RestrictionParams restriction_params(double r, int max_pairs) {
  require_domain(max_pairs >= 1, "restriction_params: M must be a positive integer");
  require_domain(r >= 0.0 && r <= r_max, "restriction_params: r must lie in [0, asinh(1)]");
  const double x = std::tanh(r) * std::tanh(r);  // tanh^2 r
  const double xm = std::pow(x, max_pairs);
  RestrictionParams p;
  p.max_pairs = max_pairs;
  p.n1 = 1.0 / std::sqrt(1.0 - xm * x);
  p.n2 = 1.0 / std::sqrt(1.0 - (max_pairs + 1) * xm + max_pairs * xm * x);
  return p;
}

/// Vacuum image when at most M pairs can be produced: the squeezed-vacuum
/// series cut at n = M and renormalized by N1, so the norm is exactly 1.
/// Restriction is physics (it changes the state), unlike truncation, which
/// is bookkeeping on an unchanged state.
inline FockVector scalar_restricted_vacuum(double r, int max_pairs) {
  const RestrictionParams p = restriction_params(r, max_pairs);
  const double t = std::tanh(r);
  const double pref = p.n1 / std::cosh(r);
  FockVector v;
  v.statistics = Statistics::boson;
  v.dims = {1, 1};
  for (int n = 0; n <= max_pairs; ++n) detail::add_term(v, {n, n}, std::pow(t, n) * pref);
  return v;
}

/// One-particle image with at most M produced pairs: M terms n = 0..M-1
/// (the seed particle already occupies one quantum) renormalized by N2.
inline FockVector scalar_restricted_one(double r, int max_pairs) {
  const RestrictionParams p = restriction_params(r, max_pairs);
  const double t = std::tanh(r);
  const double pref = p.n2 / (std::cosh(r) * std::cosh(r));
  FockVector v;
  v.statistics = Statistics::boson;
  v.dims = {1, 1};
  for (int n = 0; n < max_pairs; ++n)
    detail::add_term(v, {n + 1, n}, std::sqrt(n + 1.0) * std::pow(t, n) * pref);
  return v;
}

/// How one mode of the entangled pair is observed / expanded.
struct InertialSpec {};  ///< identity mapping |0> -> |0_p 0_a>, |1> -> |1_p 0_a>
struct FermionSpec {
  double r_f = 0.0;
};
struct ScalarSpec {
  double r = 0.0;
  double epsilon = 1e-12;
};
struct ScalarRestrictedSpec {
  double r = 0.0;
  int max_pairs = 1;
};
using ModeSpec = std::variant<InertialSpec, FermionSpec, ScalarSpec, ScalarRestrictedSpec>;

/// Statistics implied by a spec; an inertial mode adapts to its partner.
inline std::optional<Statistics> statistics_of(const ModeSpec& spec) {
  if (std::holds_alternative<FermionSpec>(spec)) return Statistics::fermion;
  if (std::holds_alternative<InertialSpec>(spec)) return std::nullopt;
  return Statistics::boson;
}

namespace detail {

inline FockVector inertial_vacuum(Statistics st) {
  FockVector v;
  v.statistics = st;
  v.dims = {1, 1};
  add_term(v, {0, 0}, 1.0);
  return v;
}

inline FockVector inertial_one(Statistics st) {
  FockVector v;
  v.statistics = st;
  v.dims = {1, 1};
  add_term(v, {1, 0}, 1.0);
  return v;
}

/// (vacuum image, one-particle image) of a single mode under its spec.
inline std::pair<FockVector, FockVector> out_pair(const ModeSpec& spec, Statistics st) {
  if (std::holds_alternative<InertialSpec>(spec))
    return {inertial_vacuum(st), inertial_one(st)};
  if (const auto* f = std::get_if<FermionSpec>(&spec))
    return {fermion_out_vacuum(f->r_f), fermion_out_one(f->r_f)};
  if (const auto* s = std::get_if<ScalarSpec>(&spec))
    return {scalar_out_vacuum(s->r, s->epsilon), scalar_out_one(s->r, s->epsilon)};
  const auto& rs = std::get<ScalarRestrictedSpec>(spec);
  return {scalar_restricted_vacuum(rs.r, rs.max_pairs),
          scalar_restricted_one(rs.r, rs.max_pairs)};
}

}  // namespace detail

/// Four-slot expansion of the maximally entangled two-mode input
///   (1/sqrt(2)) (|0>_s |0>_w + |1>_s |1>_w),
/// with each factor replaced by its accelerated-basis (or inertial) image.
/// Occupation tuples are ordered (s,p),(s,a),(w,p),(w,a). The result's norm
/// is 1 - delta with delta bounded by the combined truncation tails and
/// recorded in truncation_tail.
inline FockVector build_bell_out(const ModeSpec& spec_s, const ModeSpec& spec_omega) {
  const auto st_s = statistics_of(spec_s);
  const auto st_w = statistics_of(spec_omega);
  if (st_s && st_w && *st_s != *st_w)
    throw domain_error("build_bell_out: modes with mixed statistics cannot be entangled here");
  // Two inertial modes have no quanta beyond occupation 1; the fermion tag
  // is the natural fit for that degenerate case.
  const Statistics st = st_s ? *st_s : st_w.value_or(Statistics::fermion);

  const auto [vac_s, one_s] = detail::out_pair(spec_s, st);
  const auto [vac_w, one_w] = detail::out_pair(spec_omega, st);

  FockVector out;
  out.statistics = st;
  out.dims = {1, 1, 1, 1};
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  auto accumulate = [&](const FockVector& fs, const FockVector& fw) {
    for (const auto& [occ_s, amp_s] : fs.amplitudes)
      for (const auto& [occ_w, amp_w] : fw.amplitudes)
        detail::add_term(out, {occ_s[0], occ_s[1], occ_w[0], occ_w[1]},
                         amp_s * amp_w * inv_sqrt2);
  };
  accumulate(vac_s, vac_w);
  accumulate(one_s, one_w);
  // Exact factors (fermion, restricted, inertial) discard nothing: their
  // product is exact too, and the ~1e-16 norm round-off is not lost mass.
  const bool exact = vac_s.truncation_tail == 0.0 && one_s.truncation_tail == 0.0 &&
                     vac_w.truncation_tail == 0.0 && one_w.truncation_tail == 0.0;
  out.truncation_tail = exact ? 0.0 : detail::measured_tail(out);
  return out;
}

}  // namespace pairtangle
