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
#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "pairtangle/bogoliubov.hpp"
#include "pairtangle/entanglement.hpp"
#include "pairtangle/fock.hpp"
#include "pairtangle/packets.hpp"
#include "pairtangle/table.hpp"

namespace pairtangle {

/// Evenly spaced inclusive grid over [lo, hi]; the endpoints are exact.
inline std::vector<double> uniform_grid(double lo, double hi, int points) {
  require_domain(points >= 2, "uniform_grid: need at least two points");
  require_domain(hi > lo, "uniform_grid: upper bound must exceed lower bound");
  std::vector<double> grid(static_cast<std::size_t>(points));
  for (int i = 0; i < points; ++i) {
    grid[static_cast<std::size_t>(i)] =
        lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(points - 1);
  }
  grid.front() = lo;
  grid.back() = hi;
  return grid;
}

namespace detail {

inline void describe_grid(Table& t, const std::string& label, const std::vector<double>& grid) {
  require_domain(!grid.empty(), "curves: empty grid");
  t.add_meta(label + "_min", grid.front());
  t.add_meta(label + "_max", grid.back());
  t.add_meta(label + "_points", static_cast<int>(grid.size()));
}

}  // namespace detail

/// Fermion log-negativity sweep over the squeezing angle r_f, for one mode
/// accelerated (total / vs-particle / vs-antiparticle cuts) and both modes
/// accelerated (per species-pair cuts). Every value comes from the generic
/// partial-transpose pipeline; res_* columns are absolute deviations from
/// the closed forms log2(1 + cos^2 r_f) etc., so they double as a running
/// cross-check of the pipeline.
inline Table fermion_curves(const std::vector<double>& rf_grid) {
  Table t;
  t.name = "fermion-log-negativity";
  t.add_meta("statistics", "fermion");
  t.add_meta("squeezing", "r_f = asin(e^{-pi m / 2a})");
  detail::describe_grid(t, "r_f", rf_grid);
  t.columns = {"r_f",           "ln_total_one",  "ln_sp",         "ln_sa",
               "ln_total_both", "ln_pp",         "ln_pa",         "ln_ap",
               "ln_aa",         "res_total_one", "res_sp",        "res_sa",
               "res_total_both", "res_pp",       "res_pa",        "res_aa"};
  t.rows.assign(rf_grid.size(), {});
  parallel_for(static_cast<int>(rf_grid.size()), [&](int i) {
    const double rf = rf_grid[static_cast<std::size_t>(i)];
    const FockVector one = build_bell_out(InertialSpec{}, FermionSpec{rf});
    const EntanglementReport tot1 = analyze_bipartition(one, whole_mode_bipartition());
    const EntanglementReport sp = analyze_bipartition(one, mode_vs_species(Species::particle));
    const EntanglementReport sa = analyze_bipartition(one, mode_vs_species(Species::antiparticle));
    const FockVector both = build_bell_out(FermionSpec{rf}, FermionSpec{rf});
    const EntanglementReport tot2 = analyze_bipartition(both, whole_mode_bipartition());
    const EntanglementReport pp =
        analyze_bipartition(both, species_vs_species(Species::particle, Species::particle));
    const EntanglementReport pa =
        analyze_bipartition(both, species_vs_species(Species::particle, Species::antiparticle));
    const EntanglementReport ap =
        analyze_bipartition(both, species_vs_species(Species::antiparticle, Species::particle));
    const EntanglementReport aa =
        analyze_bipartition(both, species_vs_species(Species::antiparticle, Species::antiparticle));
    const FermionOneLn c1 = fermion_closed_one(rf);
    const FermionBothLn c2 = fermion_closed_both(rf);
    t.rows[static_cast<std::size_t>(i)] = {rf,
                                           tot1.log_negativity,
                                           sp.log_negativity,
                                           sa.log_negativity,
                                           tot2.log_negativity,
                                           pp.log_negativity,
                                           pa.log_negativity,
                                           ap.log_negativity,
                                           aa.log_negativity,
                                           std::fabs(tot1.log_negativity - c1.total),
                                           std::fabs(sp.log_negativity - c1.sp),
                                           std::fabs(sa.log_negativity - c1.sa),
                                           std::fabs(tot2.log_negativity - c2.total),
                                           std::fabs(pp.log_negativity - c2.pp),
                                           std::fabs(pa.log_negativity - c2.pa),
                                           std::fabs(aa.log_negativity - c2.aa)};
  });
  return t;
}

/// Charged-scalar log-negativity sweep without a pair cap, truncated at
/// amplitude tail epsilon. One-accelerated cuts carry a series cross-check
/// (res_sp) and the exactness check |ln_total - 1| (res_total); the cuts the
/// paper reports as identically zero (sa, pa, ap, aa) carry their propagated
/// eigenvalue bounds, and both states report their measured truncation tail.
inline Table scalar_curves_unrestricted(const std::vector<double>& r_grid, double epsilon) {
  Table t;
  t.name = "scalar-log-negativity-unrestricted";
  t.add_meta("statistics", "boson");
  t.add_meta("squeezing", "r = asinh(e^{-pi m / 2a})");
  t.add_meta("epsilon", epsilon);
  detail::describe_grid(t, "r", r_grid);
  const double r_hi = *std::max_element(r_grid.begin(), r_grid.end());
  t.add_meta("pair_cutoff_at_r_max", boson_cutoff(r_hi, epsilon));
  t.add_meta("one_particle_cutoff_at_r_max", boson_one_cutoff(r_hi, epsilon));
  t.columns = {"r",         "ln_total",  "ln_sp",    "ln_sa",    "ln_pp",   "ln_pa",
               "ln_ap",     "ln_aa",     "res_sp",   "res_total", "bound_total",
               "bound_sa",  "bound_pa",  "bound_ap", "bound_aa", "trunc_one",
               "trunc_both"};
  t.rows.assign(r_grid.size(), {});
  parallel_for(static_cast<int>(r_grid.size()), [&](int i) {
    const double r = r_grid[static_cast<std::size_t>(i)];
    const FockVector one = build_bell_out(InertialSpec{}, ScalarSpec{r, epsilon});
    const EntanglementReport tot = analyze_bipartition(one, whole_mode_bipartition());
    const EntanglementReport sp = analyze_bipartition(one, mode_vs_species(Species::particle));
    const EntanglementReport sa = analyze_bipartition(one, mode_vs_species(Species::antiparticle));
    const FockVector both = build_bell_out(ScalarSpec{r, epsilon}, ScalarSpec{r, epsilon});
    const EntanglementReport pp =
        analyze_bipartition(both, species_vs_species(Species::particle, Species::particle));
    const EntanglementReport pa =
        analyze_bipartition(both, species_vs_species(Species::particle, Species::antiparticle));
    const EntanglementReport ap =
        analyze_bipartition(both, species_vs_species(Species::antiparticle, Species::particle));
    const EntanglementReport aa =
        analyze_bipartition(both, species_vs_species(Species::antiparticle, Species::antiparticle));
    const double series = scalar_ln_sp_unrestricted(r);
    t.rows[static_cast<std::size_t>(i)] = {r,
                                           tot.log_negativity,
                                           sp.log_negativity,
                                           sa.log_negativity,
                                           pp.log_negativity,
                                           pa.log_negativity,
                                           ap.log_negativity,
                                           aa.log_negativity,
                                           std::fabs(sp.log_negativity - series),
                                           std::fabs(tot.log_negativity - 1.0),
                                           tot.ln_bound,
                                           sa.ln_bound,
                                           pa.ln_bound,
                                           ap.ln_bound,
                                           aa.ln_bound,
                                           one.truncation_tail,
                                           both.truncation_tail};
  });
  return t;
}

/// Charged-scalar sweep with the produced pairs capped at each M in
/// max_pairs_values, one mode accelerated. Rows are grouped by M (outer)
/// then r (inner). Closed-form residuals cover both reduced cuts, and
/// res_total checks that the exactly-normalized capped state keeps the full
/// Bell unit of entanglement.
inline Table scalar_curves_restricted(const std::vector<double>& r_grid,
                                      const std::vector<int>& max_pairs_values) {
  require_domain(!max_pairs_values.empty(), "scalar_curves_restricted: no pair caps given");
  Table t;
  t.name = "scalar-log-negativity-restricted";
  t.add_meta("statistics", "boson");
  t.add_meta("squeezing", "r = asinh(e^{-pi m / 2a})");
  detail::describe_grid(t, "r", r_grid);
  {
    std::string caps;
    for (std::size_t k = 0; k < max_pairs_values.size(); ++k) {
      if (k != 0) caps += ", ";
      caps += std::to_string(max_pairs_values[k]);
    }
    t.add_meta("max_pairs_values", caps);
  }
  t.columns = {"max_pairs", "r", "ln_total", "ln_sp", "ln_sa", "res_total", "res_sp", "res_sa"};
  const std::size_t block = r_grid.size();
  t.rows.assign(max_pairs_values.size() * block, {});
  parallel_for(static_cast<int>(t.rows.size()), [&](int idx) {
    const std::size_t u = static_cast<std::size_t>(idx);
    const int max_pairs = max_pairs_values[u / block];
    const double r = r_grid[u % block];
    const FockVector one = build_bell_out(InertialSpec{}, ScalarRestrictedSpec{r, max_pairs});
    const EntanglementReport tot = analyze_bipartition(one, whole_mode_bipartition());
    const EntanglementReport sp = analyze_bipartition(one, mode_vs_species(Species::particle));
    const EntanglementReport sa = analyze_bipartition(one, mode_vs_species(Species::antiparticle));
    const ScalarRestrictedLn closed = scalar_closed_restricted(r, max_pairs);
    t.rows[u] = {static_cast<double>(max_pairs),
                 r,
                 tot.log_negativity,
                 sp.log_negativity,
                 sa.log_negativity,
                 std::fabs(tot.log_negativity - 1.0),
                 std::fabs(sp.log_negativity - closed.sp),
                 std::fabs(sa.log_negativity - closed.sa)};
  });
  return t;
}

/// Charged-scalar sweep with both modes accelerated under a shared pair cap.
/// All four species-pair cuts are reported together with the whole-mode cut;
/// ne_parts_minus_total records how far the four subsystem negativities
/// (not log-negativities) overshoot the total, the quantity that is exactly
/// zero for fermions but not in general here.
inline Table scalar_curves_restricted_both(const std::vector<double>& r_grid, int max_pairs) {
  Table t;
  t.name = "scalar-log-negativity-both-accelerated";
  t.add_meta("statistics", "boson");
  t.add_meta("squeezing", "r = asinh(e^{-pi m / 2a})");
  t.add_meta("max_pairs", max_pairs);
  detail::describe_grid(t, "r", r_grid);
  t.columns = {"r",     "ln_total", "ln_pp",     "ln_pa",   "ln_ap",
               "ln_aa", "res_total", "sym_gap",  "ne_parts_minus_total"};
  t.rows.assign(r_grid.size(), {});
  parallel_for(static_cast<int>(r_grid.size()), [&](int i) {
    const double r = r_grid[static_cast<std::size_t>(i)];
    const FockVector both =
        build_bell_out(ScalarRestrictedSpec{r, max_pairs}, ScalarRestrictedSpec{r, max_pairs});
    const EntanglementReport tot = analyze_bipartition(both, whole_mode_bipartition());
    const EntanglementReport pp =
        analyze_bipartition(both, species_vs_species(Species::particle, Species::particle));
    const EntanglementReport pa =
        analyze_bipartition(both, species_vs_species(Species::particle, Species::antiparticle));
    const EntanglementReport ap =
        analyze_bipartition(both, species_vs_species(Species::antiparticle, Species::particle));
    const EntanglementReport aa =
        analyze_bipartition(both, species_vs_species(Species::antiparticle, Species::antiparticle));
    const double parts =
        pp.negativity + pa.negativity + ap.negativity + aa.negativity;
    t.rows[static_cast<std::size_t>(i)] = {r,
                                           tot.log_negativity,
                                           pp.log_negativity,
                                           pa.log_negativity,
                                           ap.log_negativity,
                                           aa.log_negativity,
                                           std::fabs(tot.log_negativity - 1.0),
                                           std::fabs(pa.log_negativity - ap.log_negativity),
                                           parts - tot.negativity};
  });
  return t;
}

/// Reduced-cut log-negativities at maximal acceleration (r = asinh 1) as a
/// function of the pair cap M = 1..max_pairs, one mode accelerated. Values
/// come from the pipeline; residual columns compare against the closed
/// forms evaluated at the same cap.
inline Table pairs_scan(int max_pairs) {
  require_domain(max_pairs >= 1, "pairs_scan: need at least one pair cap");
  Table t;
  t.name = "pairs-scan";
  t.add_meta("statistics", "boson");
  t.add_meta("r", r_max);
  t.add_meta("max_pairs_range", "1.." + std::to_string(max_pairs));
  t.columns = {"max_pairs", "ln_sp", "ln_sa", "res_sp", "res_sa"};
  t.rows.assign(static_cast<std::size_t>(max_pairs), {});
  parallel_for(max_pairs, [&](int i) {
    const int m = i + 1;
    const FockVector one = build_bell_out(InertialSpec{}, ScalarRestrictedSpec{r_max, m});
    const EntanglementReport sp = analyze_bipartition(one, mode_vs_species(Species::particle));
    const EntanglementReport sa = analyze_bipartition(one, mode_vs_species(Species::antiparticle));
    const ScalarRestrictedLn closed = scalar_closed_restricted(r_max, m);
    t.rows[static_cast<std::size_t>(i)] = {static_cast<double>(m), sp.log_negativity,
                                           sa.log_negativity,
                                           std::fabs(sp.log_negativity - closed.sp),
                                           std::fabs(sa.log_negativity - closed.sa)};
  });
  return t;
}

/// Schmidt number of the symmetric and antisymmetric two-packet states as a
/// function of the dimensionless velocity separation v~. k_plus_numeric is
/// 1/purity from the overlap quadrature; k_plus_closed is the algebraic
/// form, and res_k_plus their absolute difference. The v~ = 0 row of
/// k_minus is the v -> 0 limit (the antisymmetric state itself vanishes
/// there); every other row is computed from the quadrature.
inline Table schmidt_curve(const std::vector<double>& vt_grid) {
  Table t;
  t.name = "schmidt-number";
  t.add_meta("state", "two identical packets, velocities 0 and v, t = 0");
  t.add_meta("k_minus_at_zero", "closed-form limit 2 (antisymmetric state vanishes at v = 0)");
  detail::describe_grid(t, "vtilde", vt_grid);
  t.columns = {"vtilde", "k_plus_closed", "k_plus_numeric", "k_minus", "purity_plus",
               "res_k_plus"};
  t.rows.assign(vt_grid.size(), {});
  parallel_for(static_cast<int>(vt_grid.size()), [&](int i) {
    const double vt = vt_grid[static_cast<std::size_t>(i)];
    require_domain(vt >= 0.0, "schmidt_curve: v~ must be non-negative");
    TwoBodyParams plus;
    plus.v1 = 0.0;
    plus.v2 = vt;  // with m = b = 1, v~ equals the velocity separation
    plus.sign = ExchangeSign::plus;
    const double pur = purity(plus, 0.0);
    const double k_closed = schmidt_number_closed(vt, ExchangeSign::plus);
    double k_minus = 2.0;
    if (vt > 0.0) {
      TwoBodyParams minus = plus;
      minus.sign = ExchangeSign::minus;
      k_minus = 1.0 / purity(minus, 0.0);
    }
    t.rows[static_cast<std::size_t>(i)] = {vt,  k_closed, 1.0 / pur, k_minus, pur,
                                           std::fabs(k_closed - 1.0 / pur)};
  });
  return t;
}

/// The two mean occupation spectra at matched parameters across an
/// acceleration grid: pair production from the vacuum (Boltzmann factor in
/// m/a, equal to sinh^2 r by construction — identity_residual measures the
/// round trip through the squeezing parameter) versus the thermal response
/// of an accelerated detector (Planck factor in omega/a). The
/// spectrum_difference column exhibits that the two laws disagree even at
/// matched parameters.
inline Table spectra_curve(double mass, double omega, const std::vector<double>& accel_grid) {
  Table t;
  t.name = "spectra";
  t.add_meta("mass", mass);
  t.add_meta("omega", omega);
  detail::describe_grid(t, "accel", accel_grid);
  t.columns = {"accel",          "pair_spectrum",  "sinh_sq_r",
               "identity_residual", "unruh_spectrum", "spectrum_difference"};
  t.rows.assign(accel_grid.size(), {});
  parallel_for(static_cast<int>(accel_grid.size()), [&](int i) {
    const double a = accel_grid[static_cast<std::size_t>(i)];
    const SpectrumPair s = spectra(mass, a, omega);
    const double r = r_from_acceleration(mass, a, Statistics::boson);
    const double sinh_sq = std::sinh(r) * std::sinh(r);
    t.rows[static_cast<std::size_t>(i)] = {a,
                                           s.accelerated,
                                           sinh_sq,
                                           std::fabs(sinh_sq - s.accelerated),
                                           s.unruh,
                                           s.accelerated - s.unruh};
  });
  return t;
}

/// |Psi| of the two-packet state sampled on a square grid at fixed time.
/// The box covers every branch center (both velocity assignments under each
/// packet's own acceleration) padded by six envelope widths, so the full
/// support is visible at any time. Rows run x-major over the grid.
inline Table packet_grid(const TwoBodyParams& params, double time, int points_per_axis = 101) {
  require_domain(points_per_axis >= 2, "packet_grid: need at least two points per axis");
  validate(params);
  const TwoBodyEvaluator eval(params, time);
  const double sigma = packet_sigma(params.mass, params.b, time);
  auto center = [&](double v, double a) {
    return params.x0 + v * time + 0.5 * a * time * time;
  };
  const double x1 = center(params.v1, params.a1);
  const double x2 = center(params.v2, params.a1);
  const double y1 = center(params.v2, params.a2);
  const double y2 = center(params.v1, params.a2);
  const double pad = 6.0 * sigma;
  const std::vector<double> xs =
      uniform_grid(std::min(x1, x2) - pad, std::max(x1, x2) + pad, points_per_axis);
  const std::vector<double> ys =
      uniform_grid(std::min(y1, y2) - pad, std::max(y1, y2) + pad, points_per_axis);

  Table t;
  t.name = "two-body-packet";
  t.add_meta("mass", params.mass);
  t.add_meta("b", params.b);
  t.add_meta("x0", params.x0);
  t.add_meta("v1", params.v1);
  t.add_meta("v2", params.v2);
  t.add_meta("a1", params.a1);
  t.add_meta("a2", params.a2);
  t.add_meta("sign", params.sign == ExchangeSign::plus ? "plus" : "minus");
  t.add_meta("t", time);
  t.add_meta("sigma", sigma);
  t.add_meta("x_min", xs.front());
  t.add_meta("x_max", xs.back());
  t.add_meta("y_min", ys.front());
  t.add_meta("y_max", ys.back());
  t.add_meta("points_per_axis", points_per_axis);
  t.columns = {"x", "y", "abs_psi"};
  const std::size_t n = static_cast<std::size_t>(points_per_axis);
  t.rows.assign(n * n, {});
  parallel_for(points_per_axis, [&](int ix) {
    for (std::size_t iy = 0; iy < n; ++iy) {
      const double x = xs[static_cast<std::size_t>(ix)];
      const double y = ys[iy];
      t.rows[static_cast<std::size_t>(ix) * n + iy] = {x, y, std::abs(eval.amplitude(x, y))};
    }
  });
  return t;
}

/// Writes every figure table as `<figure-id>.csv` under out_dir (created if
/// missing) with the default 101-point grids and epsilon = 1e-12. Returns
/// the written paths in a fixed order.
inline std::vector<std::string> write_figures(const std::string& out_dir) {
  namespace fs = std::filesystem;
  fs::create_directories(out_dir);
  const std::vector<double> rf_grid = uniform_grid(0.0, r_f_max, 101);
  const std::vector<double> r_grid = uniform_grid(0.0, r_max, 101);
  const double epsilon = 1e-12;

  TwoBodyParams accelerated;
  accelerated.v1 = -1.0;
  accelerated.v2 = 1.0;
  accelerated.a1 = -0.5;
  accelerated.a2 = 0.5;
  accelerated.sign = ExchangeSign::plus;
  TwoBodyParams free_pair = accelerated;
  free_pair.a1 = 0.0;
  free_pair.a2 = 0.0;

  std::vector<std::pair<std::string, Table>> figures;
  figures.emplace_back("bfacc", fermion_curves(rf_grid));
  figures.emplace_back("enb_1", scalar_curves_unrestricted(r_grid, epsilon));
  figures.emplace_back("encp_1", scalar_curves_restricted(r_grid, {1, 2}));
  figures.emplace_back("nop_tp", pairs_scan(12));
  figures.emplace_back("bsacc_1", scalar_curves_restricted_both(r_grid, 1));
  figures.emplace_back("bsacc_2", scalar_curves_restricted_both(r_grid, 2));
  figures.emplace_back("schno", schmidt_curve(uniform_grid(0.0, 4.0, 101)));
  figures.emplace_back("accwp_0", packet_grid(accelerated, 0.0, 101));
  figures.emplace_back("accwp_2", packet_grid(free_pair, 15.0, 101));

  std::vector<std::string> written;
  written.reserve(figures.size());
  for (auto& [tag, table] : figures) {
    table.metadata.insert(table.metadata.begin(), {"figure", tag});
    const std::string path = (fs::path(out_dir) / (tag + ".csv")).string();
    write_text_file(path, to_csv(table));
    written.push_back(path);
  }
  return written;
}

}  // namespace pairtangle
