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

#include <iostream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "pairtangle/bogoliubov.hpp"
#include "pairtangle/curves.hpp"
#include "pairtangle/entanglement.hpp"
#include "pairtangle/fock.hpp"
#include "pairtangle/packets.hpp"
#include "pairtangle/table.hpp"

namespace pairtangle::cli {

namespace detail {

/// Projects (and optionally renames) a subset of a table's columns.
inline Table select_columns(const Table& src,
                            const std::vector<std::pair<std::string, std::string>>& picks) {
  Table out;
  out.name = src.name;
  out.metadata = src.metadata;
  std::vector<std::size_t> indices;
  indices.reserve(picks.size());
  for (const auto& [from, renamed] : picks) {
    std::size_t found = src.columns.size();
    for (std::size_t c = 0; c < src.columns.size(); ++c) {
      if (src.columns[c] == from) {
        found = c;
        break;
      }
    }
    require_domain(found < src.columns.size(), "select_columns: no column named " + from);
    indices.push_back(found);
    out.columns.push_back(renamed.empty() ? from : renamed);
  }
  out.rows.reserve(src.rows.size());
  for (const auto& row : src.rows) {
    std::vector<double> projected;
    projected.reserve(indices.size());
    for (std::size_t c : indices) projected.push_back(row[c]);
    out.rows.push_back(std::move(projected));
  }
  return out;
}

/// Strict numeric parsing for the dump-state mini-grammar: the whole token
/// must be consumed.
inline double parse_number(const std::string& text, const std::string& what) {
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(text, &used);
  } catch (const std::exception&) {
    throw domain_error(what + ": cannot parse number '" + text + "'");
  }
  require_domain(used == text.size(), what + ": trailing characters in number '" + text + "'");
  return value;
}

inline int parse_integer(const std::string& text, const std::string& what) {
  std::size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(text, &used);
  } catch (const std::exception&) {
    throw domain_error(what + ": cannot parse integer '" + text + "'");
  }
  require_domain(used == text.size(), what + ": trailing characters in integer '" + text + "'");
  return value;
}

/// One mode of the dump-state grammar:
///   inertial
///   fermion:rf=<x>
///   scalar:r=<x>[,eps=<x>]
///   restricted:r=<x>,pairs=<n>
inline ModeSpec parse_single_mode(const std::string& text, const std::string& label) {
  const std::size_t colon = text.find(':');
  const std::string kind = text.substr(0, colon);
  std::map<std::string, std::string> params;
  if (colon != std::string::npos) {
    std::string rest = text.substr(colon + 1);
    std::size_t start = 0;
    while (start <= rest.size()) {
      const std::size_t comma = rest.find(',', start);
      const std::string item =
          rest.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
      const std::size_t eq = item.find('=');
      require_domain(eq != std::string::npos && eq > 0,
                     label + ": expected key=value, got '" + item + "'");
      params[item.substr(0, eq)] = item.substr(eq + 1);
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
  }
  auto take = [&](const char* key) {
    auto it = params.find(key);
    require_domain(it != params.end(),
                   label + ": mode '" + kind + "' needs parameter '" + key + "'");
    std::string value = it->second;
    params.erase(it);
    return value;
  };
  auto finish = [&]() {
    require_domain(params.empty(),
                   label + ": unknown parameter '" +
                       (params.empty() ? std::string() : params.begin()->first) + "' for mode '" +
                       kind + "'");
  };
  if (kind == "inertial") {
    finish();
    return InertialSpec{};
  }
  if (kind == "fermion") {
    const double rf = parse_number(take("rf"), label);
    finish();
    return FermionSpec{rf};
  }
  if (kind == "scalar") {
    const double r = parse_number(take("r"), label);
    double eps = 1e-12;
    if (params.count("eps") != 0) eps = parse_number(take("eps"), label);
    finish();
    return ScalarSpec{r, eps};
  }
  if (kind == "restricted") {
    const double r = parse_number(take("r"), label);
    const int pairs = parse_integer(take("pairs"), label);
    finish();
    return ScalarRestrictedSpec{r, pairs};
  }
  throw domain_error(label + ": unknown mode kind '" + kind +
                     "' (expected inertial, fermion, scalar, or restricted)");
}

/// Full dump-state grammar: semicolon-separated mode assignments, e.g.
///   s=inertial;omega=fermion:rf=0.6
/// Either side may be omitted and defaults to inertial.
inline std::pair<ModeSpec, ModeSpec> parse_state_spec(const std::string& spec) {
  ModeSpec s = InertialSpec{};
  ModeSpec omega = InertialSpec{};
  bool saw_any = false;
  std::size_t start = 0;
  while (start <= spec.size()) {
    const std::size_t semi = spec.find(';', start);
    const std::string item =
        spec.substr(start, semi == std::string::npos ? std::string::npos : semi - start);
    if (!item.empty()) {
      const std::size_t eq = item.find('=');
      require_domain(eq != std::string::npos,
                     "dump-state: expected s=<mode> or omega=<mode>, got '" + item + "'");
      const std::string key = item.substr(0, eq);
      const std::string value = item.substr(eq + 1);
      if (key == "s") {
        s = parse_single_mode(value, "dump-state (s mode)");
      } else if (key == "omega") {
        omega = parse_single_mode(value, "dump-state (omega mode)");
      } else {
        throw domain_error("dump-state: unknown mode label '" + key + "' (expected s or omega)");
      }
      saw_any = true;
    }
    if (semi == std::string::npos) break;
    start = semi + 1;
  }
  require_domain(saw_any, "dump-state: empty --spec");
  return {s, omega};
}

/// Resolves a squeezing parameter from either the direct flag or the
/// (mass, acceleration) pair; the direct value wins when both are present
/// and the conflict is reported on the diagnostic stream.
inline double resolve_squeezing(const std::optional<double>& direct,
                                const std::optional<double>& mass,
                                const std::optional<double>& accel, Statistics stats,
                                const std::string& direct_flag, std::ostream& err) {
  if (direct.has_value()) {
    if (mass.has_value() || accel.has_value()) {
      err << "warning: " << direct_flag << " given directly; ignoring --mass/--accel\n";
    }
    return *direct;
  }
  require_domain(mass.has_value() && accel.has_value(),
                 "expected " + direct_flag + " or both --mass and --accel");
  return r_from_acceleration(*mass, *accel, stats);
}

}  // namespace detail

/// Entry point shared by the binary and the in-process CLI tests.
/// Exit codes: 0 success, 2 flag/validation error, 3 numeric failure.
inline int run(int argc, const char* const* argv, std::ostream& out = std::cout,
               std::ostream& err = std::cerr) {
  CLI::App app{
      "Entanglement of uniformly accelerated particle pairs: Bogoliubov "
      "coefficients, Fock-space log-negativity, packet Schmidt numbers, and "
      "figure-table reproduction."};
  app.name("pairtangle");
  app.require_subcommand(1);

  // Shared output plumbing. Every data subcommand gets --format/--out; the
  // payload goes to stdout unless --out names a file, and diagnostics only
  // ever go to the error stream.
  struct OutputOptions {
    std::string format = "csv";
    std::string path;
  };
  auto add_output_options = [](CLI::App* cmd, OutputOptions& opts) {
    cmd->add_option("--format", opts.format, "output format")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--out", opts.path, "write to this file instead of stdout");
  };
  auto emit_table = [&out, &err](const Table& t, const OutputOptions& opts) {
    const std::string payload =
        opts.format == "json" ? to_json(t).dump(2) + "\n" : to_csv(t);
    if (opts.path.empty()) {
      out << payload;
    } else {
      write_text_file(opts.path, payload);
      err << "wrote " << opts.path << "\n";
    }
  };

  // bogoliubov: mixing coefficients at one (mass, acceleration) point.
  auto* bog = app.add_subcommand(
      "bogoliubov", "mixing coefficients and squeezing parameter from (mass, acceleration)");
  double bog_mass = 1.0;
  double bog_accel = 1.0;
  std::string bog_stats = "scalar";
  OutputOptions bog_out;
  bog->add_option("--mass", bog_mass, "particle mass m > 0")->required();
  bog->add_option("--accel", bog_accel, "classical acceleration a = E/m > 0")->required();
  bog->add_option("--stats", bog_stats, "field statistics")
      ->check(CLI::IsMember({"scalar", "fermion"}));
  add_output_options(bog, bog_out);
  bog->callback([&]() {
    require_domain(bog_mass > 0.0, "bogoliubov: --mass must be positive");
    require_domain(bog_accel > 0.0, "bogoliubov: --accel must be positive");
    const FieldConfig cfg{bog_mass, bog_mass * bog_accel};
    const double mu2 = mu_squared(cfg);
    Table t;
    t.name = "bogoliubov-coefficients";
    t.add_meta("statistics", bog_stats);
    t.columns = {"mass",     "accel",     "mu_squared",        "alpha_mod",
                 "beta_mod", "squeezing", "unitarity_residual"};
    if (bog_stats == "scalar") {
      const BogoliubovScalar c = scalar_coefficients(mu2);
      t.rows.push_back({bog_mass, bog_accel, c.mu2, c.alpha_mod, c.beta_mod, c.r,
                        c.alpha_mod * c.alpha_mod - c.beta_mod * c.beta_mod - 1.0});
    } else {
      const BogoliubovFermion c = fermion_coefficients(mu2);
      t.rows.push_back({bog_mass, bog_accel, c.mu2, c.alpha_mod, c.beta_mod, c.r_f,
                        c.alpha_mod * c.alpha_mod + c.beta_mod * c.beta_mod - 1.0});
    }
    emit_table(t, bog_out);
  });

  // spectrum: the two mean-occupation laws at one matched parameter point.
  auto* spec = app.add_subcommand(
      "spectrum", "pair-production vs accelerated-detector spectra at matched parameters");
  double spec_mass = 1.0;
  double spec_accel = 1.0;
  double spec_omega = 1.0;
  OutputOptions spec_out;
  spec->add_option("--mass", spec_mass, "particle mass m > 0")->required();
  spec->add_option("--accel", spec_accel, "acceleration a > 0")->required();
  spec->add_option("--omega", spec_omega, "detected mode frequency > 0")->required();
  add_output_options(spec, spec_out);
  spec->callback([&]() {
    emit_table(spectra_curve(spec_mass, spec_omega, {spec_accel}), spec_out);
  });

  // schmidt: packet Schmidt numbers, one v~ or a sweep.
  auto* sch = app.add_subcommand(
      "schmidt", "Schmidt number of the symmetric/antisymmetric two-packet state");
  std::optional<double> sch_vtilde;
  std::optional<int> sch_grid;
  OutputOptions sch_out;
  auto* sch_vt_opt =
      sch->add_option("--vtilde", sch_vtilde, "dimensionless velocity separation v~ >= 0");
  auto* sch_grid_opt =
      sch->add_option("--grid", sch_grid, "sweep v~ over [0, 4] with this many points");
  sch_vt_opt->excludes(sch_grid_opt);
  add_output_options(sch, sch_out);
  sch->callback([&]() {
    require_domain(sch_vtilde.has_value() || sch_grid.has_value(),
                   "schmidt: pass --vtilde or --grid");
    const Table t = sch_vtilde.has_value()
                        ? schmidt_curve({*sch_vtilde})
                        : schmidt_curve(uniform_grid(0.0, 4.0, *sch_grid));
    emit_table(t, sch_out);
  });

  // packet: |Psi| of the two-packet state on a square grid.
  auto* pkt = app.add_subcommand("packet", "two-body packet magnitude sampled on a square grid");
  TwoBodyParams pkt_params;
  std::string pkt_sign = "plus";
  double pkt_time = 0.0;
  int pkt_points = 101;
  OutputOptions pkt_out;
  pkt->add_option("--mass", pkt_params.mass, "packet mass m > 0");
  pkt->add_option("--b", pkt_params.b, "squared initial envelope width b > 0");
  pkt->add_option("--x0", pkt_params.x0, "shared initial center");
  pkt->add_option("--v1", pkt_params.v1, "first initial velocity");
  pkt->add_option("--v2", pkt_params.v2, "second initial velocity");
  pkt->add_option("--a1", pkt_params.a1, "acceleration of the x packet");
  pkt->add_option("--a2", pkt_params.a2, "acceleration of the y packet");
  pkt->add_option("--sign", pkt_sign, "exchange symmetry of the superposition")
      ->check(CLI::IsMember({"plus", "minus"}));
  pkt->add_option("--time", pkt_time, "evaluation time");
  pkt->add_option("--grid", pkt_points, "points per axis");
  add_output_options(pkt, pkt_out);
  pkt->callback([&]() {
    pkt_params.sign = pkt_sign == "plus" ? ExchangeSign::plus : ExchangeSign::minus;
    emit_table(packet_grid(pkt_params, pkt_time, pkt_points), pkt_out);
  });

  // fermion-ln: log-negativity of the fermion Bell pair.
  auto* fln = app.add_subcommand(
      "fermion-ln", "fermion log-negativity from the generic pipeline, with closed-form residuals");
  std::optional<double> fln_rf;
  std::optional<double> fln_mass;
  std::optional<double> fln_accel;
  std::optional<int> fln_grid;
  std::string fln_scenario = "one";
  OutputOptions fln_out;
  auto* fln_rf_opt = fln->add_option("--rf", fln_rf, "squeezing angle r_f in [0, pi/2]");
  auto* fln_mass_opt = fln->add_option("--mass", fln_mass, "particle mass m > 0");
  auto* fln_accel_opt = fln->add_option("--accel", fln_accel, "acceleration a > 0");
  auto* fln_grid_opt =
      fln->add_option("--grid", fln_grid, "sweep r_f over [0, pi/2] with this many points");
  fln_grid_opt->excludes(fln_rf_opt)->excludes(fln_mass_opt)->excludes(fln_accel_opt);
  fln->add_option("--scenario", fln_scenario, "which mode(s) accelerate")
      ->check(CLI::IsMember({"one", "both"}));
  add_output_options(fln, fln_out);
  fln->callback([&]() {
    std::vector<double> grid;
    if (fln_grid.has_value()) {
      grid = uniform_grid(0.0, r_f_max, *fln_grid);
    } else {
      grid = {detail::resolve_squeezing(fln_rf, fln_mass, fln_accel, Statistics::fermion, "--rf",
                                        err)};
    }
    const Table full = fermion_curves(grid);
    const Table t =
        fln_scenario == "one"
            ? detail::select_columns(full, {{"r_f", ""},
                                            {"ln_total_one", "ln_total"},
                                            {"ln_sp", ""},
                                            {"ln_sa", ""},
                                            {"res_total_one", "res_total"},
                                            {"res_sp", ""},
                                            {"res_sa", ""}})
            : detail::select_columns(full, {{"r_f", ""},
                                            {"ln_total_both", "ln_total"},
                                            {"ln_pp", ""},
                                            {"ln_pa", ""},
                                            {"ln_ap", ""},
                                            {"ln_aa", ""},
                                            {"res_total_both", "res_total"},
                                            {"res_pp", ""},
                                            {"res_pa", ""},
                                            {"res_aa", ""}});
    emit_table(t, fln_out);
  });

  // scalar-ln: log-negativity of the charged-scalar Bell pair.
  auto* sln = app.add_subcommand(
      "scalar-ln", "charged-scalar log-negativity, unrestricted or with a produced-pair cap");
  std::optional<double> sln_r;
  std::optional<double> sln_mass;
  std::optional<double> sln_accel;
  std::optional<int> sln_grid;
  std::optional<int> sln_pairs;
  double sln_eps = 1e-12;
  std::string sln_scenario = "one";
  OutputOptions sln_out;
  auto* sln_r_opt = sln->add_option("--r", sln_r, "squeezing parameter r in [0, asinh 1]");
  auto* sln_mass_opt = sln->add_option("--mass", sln_mass, "particle mass m > 0");
  auto* sln_accel_opt = sln->add_option("--accel", sln_accel, "acceleration a > 0");
  auto* sln_grid_opt =
      sln->add_option("--grid", sln_grid, "sweep r over [0, asinh 1] with this many points");
  sln_grid_opt->excludes(sln_r_opt)->excludes(sln_mass_opt)->excludes(sln_accel_opt);
  sln->add_option("--pairs", sln_pairs, "cap on produced pairs per mode (omit for unrestricted)");
  sln->add_option("--eps", sln_eps, "truncation tail bound for unrestricted sweeps");
  sln->add_option("--scenario", sln_scenario, "which mode(s) accelerate")
      ->check(CLI::IsMember({"one", "both"}));
  add_output_options(sln, sln_out);
  sln->callback([&]() {
    std::vector<double> grid;
    if (sln_grid.has_value()) {
      grid = uniform_grid(0.0, r_max, *sln_grid);
    } else {
      grid = {detail::resolve_squeezing(sln_r, sln_mass, sln_accel, Statistics::boson, "--r",
                                        err)};
    }
    Table t;
    if (sln_pairs.has_value()) {
      t = sln_scenario == "one" ? scalar_curves_restricted(grid, {*sln_pairs})
                                : scalar_curves_restricted_both(grid, *sln_pairs);
    } else {
      const Table full = scalar_curves_unrestricted(grid, sln_eps);
      t = sln_scenario == "one"
              ? detail::select_columns(full, {{"r", ""},
                                              {"ln_total", ""},
                                              {"ln_sp", ""},
                                              {"ln_sa", ""},
                                              {"res_sp", ""},
                                              {"res_total", ""},
                                              {"bound_total", ""},
                                              {"bound_sa", ""},
                                              {"trunc_one", "truncation_error"}})
              : detail::select_columns(full, {{"r", ""},
                                              {"ln_pp", ""},
                                              {"ln_pa", ""},
                                              {"ln_ap", ""},
                                              {"ln_aa", ""},
                                              {"bound_pa", ""},
                                              {"bound_ap", ""},
                                              {"bound_aa", ""},
                                              {"trunc_both", "truncation_error"}});
    }
    emit_table(t, sln_out);
  });

  // pairs-scan: reduced-cut LN vs the pair cap at maximal acceleration.
  auto* scan = app.add_subcommand(
      "pairs-scan", "log-negativity vs produced-pair cap at maximal acceleration");
  int scan_max = 12;
  OutputOptions scan_out;
  scan->add_option("--max-m", scan_max, "largest pair cap to include");
  add_output_options(scan, scan_out);
  scan->callback([&]() { emit_table(pairs_scan(scan_max), scan_out); });

  // figures: write the whole default figure-table set.
  auto* fig = app.add_subcommand("figures", "write every figure table as <figure-id>.csv");
  std::string fig_mode;
  std::string fig_dir = "figures";
  fig->add_option("mode", fig_mode, "what to produce (only 'all')")
      ->required()
      ->check(CLI::IsMember({"all"}));
  fig->add_option("--out", fig_dir, "output directory")->envname("PAIRTANGLE_OUT_DIR");
  fig->callback([&]() {
    const std::vector<std::string> written = write_figures(fig_dir);
    for (const auto& path : written) err << "wrote " << path << "\n";
  });

  // dump-state: JSON amplitudes of one constructed out-basis state.
  auto* dump = app.add_subcommand(
      "dump-state", "JSON occupation/amplitude dump of a constructed entangled state");
  std::string dump_spec;
  std::string dump_path;
  dump->add_option("--spec", dump_spec,
                   "mode assignment, e.g. s=inertial;omega=fermion:rf=0.6 "
                   "(modes: inertial | fermion:rf= | scalar:r=[,eps=] | restricted:r=,pairs=)")
      ->required();
  dump->add_option("--out", dump_path, "write to this file instead of stdout");
  dump->callback([&]() {
    const auto [s_mode, omega_mode] = detail::parse_state_spec(dump_spec);
    const FockVector state = build_bell_out(s_mode, omega_mode);
    const std::string payload = state_to_json(state).dump(2) + "\n";
    if (dump_path.empty()) {
      out << payload;
    } else {
      write_text_file(dump_path, payload);
      err << "wrote " << dump_path << "\n";
    }
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);  // --help and friends: text to stdout, exit 0
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);  // diagnostic (with usage hint) to the error stream
    return 2;
  } catch (const domain_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const numeric_error& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    // e.g. filesystem errors while creating output directories
    err << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}

inline int run(int argc, char** argv) {
  return run(argc, const_cast<const char* const*>(argv));
}

}  // namespace pairtangle::cli
