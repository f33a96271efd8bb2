// Copyright 2026 The weakprobe Authors
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

// weakprobe command-line front end. Links only the C interface.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cli_output.hpp"
#include "json.hpp"
#include "weakprobe/weakprobe.h"

namespace {

using weakprobe::cli::CliError;
using weakprobe::cli::CsvWriter;
using weakprobe::cli::format_real;
using weakprobe::cli::kExitValidation;
using Json = nlohmann::ordered_json;

struct ProbeDeleter {
  void operator()(wp_probe* p) const { wp_probe_free(p); }
};
struct CurveDeleter {
  void operator()(wp_curve* c) const { wp_curve_free(c); }
};
struct CampaignDeleter {
  void operator()(wp_campaign* c) const { wp_campaign_free(c); }
};
using ProbePtr = std::unique_ptr<wp_probe, ProbeDeleter>;
using CurvePtr = std::unique_ptr<wp_curve, CurveDeleter>;
using CampaignPtr = std::unique_ptr<wp_campaign, CampaignDeleter>;

void check(wp_status status) {
  if (status != WP_OK) throw CliError(static_cast<int>(status), wp_last_error());
}

struct Params {
  std::string command;
  std::string figure;
  double W = 1e-3;
  double nbar = 1.0;
  double m = 1e6;
  double nu = 0.1;
  double phi = 1e-4;
  long long trials = 10000;
  unsigned long long seed = 20150721ULL;
  std::string out;
  double tol = 1e-8;
  std::string policy = "fixed";
  std::string estimator = "linearized";
  int threads = 0;
  int points = 4001;
  double sigmas = 8.0;
  std::string vary;
  std::vector<double> values;
  double hold_mnu2 = 0.0;
  bool mc = false;
};

Json to_json(const Params& p) {
  return Json{{"command", p.command},     {"figure", p.figure},       {"W", p.W},
              {"nbar", p.nbar},           {"m", p.m},                 {"nu", p.nu},
              {"phi", p.phi},             {"trials", p.trials},       {"seed", p.seed},
              {"out", p.out},             {"tol", p.tol},             {"policy", p.policy},
              {"estimator", p.estimator}, {"threads", p.threads},     {"points", p.points},
              {"sigmas", p.sigmas},       {"vary", p.vary},           {"values", p.values},
              {"hold_mnu2", p.hold_mnu2}, {"mc", p.mc}};
}

Params from_json(const Json& j) {
  Params p;
  j.at("command").get_to(p.command);
  j.at("figure").get_to(p.figure);
  j.at("W").get_to(p.W);
  j.at("nbar").get_to(p.nbar);
  j.at("m").get_to(p.m);
  j.at("nu").get_to(p.nu);
  j.at("phi").get_to(p.phi);
  j.at("trials").get_to(p.trials);
  j.at("seed").get_to(p.seed);
  j.at("out").get_to(p.out);
  j.at("tol").get_to(p.tol);
  j.at("policy").get_to(p.policy);
  j.at("estimator").get_to(p.estimator);
  j.at("threads").get_to(p.threads);
  j.at("points").get_to(p.points);
  j.at("sigmas").get_to(p.sigmas);
  j.at("vary").get_to(p.vary);
  j.at("values").get_to(p.values);
  j.at("hold_mnu2").get_to(p.hold_mnu2);
  j.at("mc").get_to(p.mc);
  return p;
}

int64_t repetitions(double m) {
  if (!(m >= 1.0) || m != std::floor(m) || m > 9.0e15) {
    throw CliError(kExitValidation, "repetition count m must be a positive integer");
  }
  return static_cast<int64_t>(m);
}

wp_estimator parse_estimator(const std::string& name) {
  if (name == "linearized") return WP_ESTIMATOR_LINEARIZED;
  if (name == "exact") return WP_ESTIMATOR_EXACT_ARCSIN;
  throw CliError(kExitValidation, "estimator must be 'linearized' or 'exact'");
}

ProbePtr make_probe(double nu, double nbar) {
  wp_probe* raw = nullptr;
  check(wp_probe_new(nu, nbar, &raw));
  return ProbePtr(raw);
}

struct RunContext {
  Params params;
  std::filesystem::path outdir;
  std::vector<std::string> outputs;

  void emit(const std::string& name, const std::string& contents) {
    weakprobe::cli::write_atomically(outdir / name, contents);
    outputs.push_back(name);
  }
};

// ---------------------------------------------------------------------------
// bounds / sweep share one row layout so a one-point sweep equals bounds.csv.

const std::vector<std::string> kBoundsColumns = {
    "W",     "nbar",     "m",     "nu",  "phi",  "weak_scale", "strong_scale",
    "cr",    "qcr",      "zz_exact", "zz_closed", "bcr", "quadrature_abs_error",
    "c1",    "c2",       "mnu2",  "c1_ok", "c2_ok", "integer_fock"};

struct PointResult {
  double W, nbar, nu, phi;
  int64_t m;
  wp_bounds_report report;
  int integer_fock;
};

PointResult evaluate_point(double W, double nbar, int64_t m, double nu, double phi, double tol) {
  ProbePtr probe = make_probe(nu, nbar);
  PointResult r{W, nbar, nu, phi, m, {}, wp_probe_integer_fock(probe.get())};
  check(wp_full_report(probe.get(), W, m, phi, tol, &r.report));
  return r;
}

void append_point(CsvWriter& csv, const PointResult& r) {
  const wp_bounds_report& b = r.report;
  csv.cell(r.W).cell(r.nbar).cell(static_cast<long long>(r.m)).cell(r.nu).cell(r.phi);
  csv.cell(b.weak_scale).cell(b.strong_scale).cell(b.cr).cell(b.qcr).cell(b.zz_exact);
  csv.cell(b.zz_closed).cell(b.bcr).cell(b.quadrature_abs_error);
  csv.cell(b.diagnostics.c1).cell(b.diagnostics.c2).cell(b.diagnostics.mnu2);
  csv.cell(static_cast<long long>(b.diagnostics.c1_ok))
      .cell(static_cast<long long>(b.diagnostics.c2_ok))
      .cell(static_cast<long long>(r.integer_fock));
}

void print_row(const char* name, double value) {
  std::printf("%-22s %.10g\n", name, value);
}

void cmd_bounds(RunContext& ctx) {
  const Params& p = ctx.params;
  const PointResult r = evaluate_point(p.W, p.nbar, repetitions(p.m), p.nu, p.phi, p.tol);
  const wp_bounds_report& b = r.report;
  std::printf("%-22s %s\n", "quantity", "value");
  print_row("weak", b.weak_scale);
  print_row("strong", b.strong_scale);
  print_row("cr", b.cr);
  print_row("qcr", b.qcr);
  print_row("zz_exact", b.zz_exact);
  print_row("zz_closed", b.zz_closed);
  print_row("bcr", b.bcr);
  print_row("quadrature_abs_error", b.quadrature_abs_error);
  print_row("c1 (W nbar/nu^2)", b.diagnostics.c1);
  print_row("c2 (sqrt(m) nbar W/nu)", b.diagnostics.c2);
  print_row("m nu^2", b.diagnostics.mnu2);
  std::printf("%-22s %s\n", "condition1", b.diagnostics.c1_ok ? "satisfied" : "violated");
  std::printf("%-22s %s\n", "condition2", b.diagnostics.c2_ok ? "satisfied" : "violated");
  if (!r.integer_fock) std::printf("warning: Fock index nbar/nu^2 is not an integer\n");

  CsvWriter csv(kBoundsColumns);
  append_point(csv, r);
  csv.end_row();
  ctx.emit("bounds.csv", csv.text());
}

// ---------------------------------------------------------------------------

struct CurvePair {
  CurvePtr exact;
  CurvePtr gauss;
};

CurvePair build_curves(const wp_probe* probe, double phi, int64_t m, int points, double sigmas,
                       wp_estimator inversion) {
  wp_grid_spec spec;
  wp_grid_spec_default(&spec);
  spec.points = points;
  spec.half_width_sigmas = sigmas;
  spec.inversion = inversion;
  wp_curve* exact = nullptr;
  wp_curve* gauss = nullptr;
  check(wp_posterior_curve_new(probe, phi, m, WP_POSTERIOR_EXACT_BINOMIAL, &spec, &exact));
  CurvePair pair{CurvePtr(exact), nullptr};
  check(wp_posterior_curve_new(probe, phi, m, WP_POSTERIOR_GAUSSIAN_APPROX, &spec, &gauss));
  pair.gauss.reset(gauss);
  return pair;
}

std::string curve_csv(const CurvePair& curves) {
  CsvWriter csv({"phi_hat", "density_exact", "density_gauss"});
  const size_t n = wp_curve_size(curves.exact.get());
  const double* grid = wp_curve_grid(curves.exact.get());
  const double* exact = wp_curve_density(curves.exact.get());
  const double* gauss = wp_curve_density(curves.gauss.get());
  for (size_t i = 0; i < n; ++i) {
    csv.cell(grid[i]).cell(exact[i]).cell(gauss[i]);
    csv.end_row();
  }
  return csv.text();
}

void cmd_posterior(RunContext& ctx) {
  const Params& p = ctx.params;
  const int64_t m = repetitions(p.m);
  ProbePtr probe = make_probe(p.nu, p.nbar);
  const CurvePair curves =
      build_curves(probe.get(), p.phi, m, p.points, p.sigmas, parse_estimator(p.estimator));
  double mean_exact = 0, var_exact = 0, mean_gauss = 0, var_gauss = 0, gap = 0;
  check(wp_curve_moments(curves.exact.get(), &mean_exact, &var_exact));
  check(wp_curve_moments(curves.gauss.get(), &mean_gauss, &var_gauss));
  check(wp_curve_max_relative_gap(curves.exact.get(), curves.gauss.get(), 0.01, &gap));
  ctx.emit("posterior.csv", curve_csv(curves));
  ctx.emit("posterior_summary.csv",
           weakprobe::cli::key_value_csv({{"mean_exact", mean_exact},
                                          {"std_exact", std::sqrt(var_exact)},
                                          {"mean_gauss", mean_gauss},
                                          {"std_gauss", std::sqrt(var_gauss)},
                                          {"max_rel_gap", gap},
                                          {"normalization_exact",
                                           wp_curve_normalization(curves.exact.get())}}));
  print_row("mean_exact", mean_exact);
  print_row("std_exact", std::sqrt(var_exact));
  print_row("mean_gauss", mean_gauss);
  print_row("std_gauss", std::sqrt(var_gauss));
  print_row("max_rel_gap", gap);
}

// ---------------------------------------------------------------------------

wp_campaign_config campaign_config(const Params& p, double nu, double nbar, double W, int64_t m) {
  wp_campaign_config cfg;
  wp_campaign_config_default(&cfg);
  cfg.nu = nu;
  cfg.nbar = nbar;
  cfg.prior_width = W;
  cfg.m = m;
  if (p.trials < 1) throw CliError(kExitValidation, "trials must be at least 1");
  cfg.trials = p.trials;
  if (p.policy == "fixed") {
    cfg.phi_policy = WP_PHI_FIXED;
  } else if (p.policy == "prior") {
    cfg.phi_policy = WP_PHI_FROM_PRIOR;
  } else {
    throw CliError(kExitValidation, "policy must be 'fixed' or 'prior'");
  }
  cfg.phi = p.phi;
  cfg.estimator = parse_estimator(p.estimator);
  cfg.master_seed = p.seed;
  cfg.threads = p.threads;
  return cfg;
}

CampaignPtr run_campaign(const wp_campaign_config& cfg) {
  wp_campaign* raw = nullptr;
  check(wp_campaign_run(&cfg, &raw));
  return CampaignPtr(raw);
}

void cmd_simulate(RunContext& ctx) {
  const Params& p = ctx.params;
  const CampaignPtr campaign =
      run_campaign(campaign_config(p, p.nu, p.nbar, p.W, repetitions(p.m)));
  const int64_t n = wp_campaign_record_count(campaign.get());
  const wp_trial_record* records = wp_campaign_records(campaign.get());
  CsvWriter csv({"index", "phi_true", "k", "phi_hat", "error", "clamped"});
  for (int64_t i = 0; i < n; ++i) {
    const wp_trial_record& r = records[i];
    csv.cell(static_cast<long long>(r.index)).cell(r.phi_true).cell(static_cast<long long>(r.k));
    csv.cell(r.phi_hat).cell(r.error).cell(static_cast<long long>(r.clamped));
    csv.end_row();
  }
  ctx.emit("records.csv", csv.text());

  wp_campaign_summary s;
  check(wp_campaign_summary_get(campaign.get(), &s));
  const std::vector<std::pair<std::string, double>> rows = {
      {"trials", static_cast<double>(s.trials)},
      {"mse", s.mse},
      {"mse_stderr", s.mse_stderr},
      {"bias", s.bias},
      {"bias_stderr", s.bias_stderr},
      {"rmse", s.rmse},
      {"rmse_stderr", s.rmse_stderr},
      {"clamp_fraction", s.clamp_fraction},
      {"clamp_warning", static_cast<double>(s.clamp_warning)},
      {"weak_scale", s.ref_weak},
      {"strong_scale", s.ref_strong},
      {"W", s.ref_prior_width},
      {"cr", s.ref_cr},
      {"zz_closed", s.ref_zz_closed},
      {"rmse_over_weak", s.rmse_over_weak},
      {"rmse_over_strong", s.rmse_over_strong},
      {"rmse_over_W", s.rmse_over_prior_width},
      {"rmse_over_cr", s.rmse_over_cr},
      {"rmse_over_zz_closed", s.rmse_over_zz_closed}};
  ctx.emit("summary.csv", weakprobe::cli::key_value_csv(rows));
  for (const auto& [key, value] : rows) print_row(key.c_str(), value);
  if (s.clamp_warning) std::printf("warning: more than 1%% of estimates were clamped\n");
}

// ---------------------------------------------------------------------------

void cmd_sweep(RunContext& ctx) {
  const Params& p = ctx.params;
  if (p.values.empty()) throw CliError(kExitValidation, "sweep needs at least one value");
  if (p.vary != "m" && p.vary != "nu" && p.vary != "nbar" && p.vary != "W") {
    throw CliError(kExitValidation, "sweep variable must be one of m, nu, nbar, W");
  }
  if (p.hold_mnu2 > 0.0 && p.vary != "nu") {
    throw CliError(kExitValidation, "--hold-mnu2 only applies when sweeping nu");
  }
  std::vector<std::string> columns = kBoundsColumns;
  if (p.mc) {
    for (const char* c : {"mc_rmse", "mc_rmse_stderr", "mc_bias", "mc_bias_stderr",
                          "rmse_over_strong", "rmse_over_weak"}) {
      columns.emplace_back(c);
    }
  }
  CsvWriter csv(columns);
  for (double value : p.values) {
    double W = p.W, nbar = p.nbar, nu = p.nu, m = p.m;
    if (p.vary == "m") m = value;
    if (p.vary == "nu") nu = value;
    if (p.vary == "nbar") nbar = value;
    if (p.vary == "W") W = value;
    if (p.hold_mnu2 > 0.0) m = std::round(p.hold_mnu2 / (nu * nu));
    const int64_t reps = repetitions(m);
    const PointResult r = evaluate_point(W, nbar, reps, nu, p.phi, p.tol);
    append_point(csv, r);
    if (p.mc) {
      const CampaignPtr campaign = run_campaign(campaign_config(p, nu, nbar, W, reps));
      wp_campaign_summary s;
      check(wp_campaign_summary_get(campaign.get(), &s));
      csv.cell(s.rmse).cell(s.rmse_stderr).cell(s.bias).cell(s.bias_stderr);
      csv.cell(s.rmse_over_strong).cell(s.rmse_over_weak);
    }
    csv.end_row();
  }
  ctx.emit("sweep.csv", csv.text());
  std::printf("sweep over %s: %zu points written to %s\n", p.vary.c_str(), p.values.size(),
              (ctx.outdir / "sweep.csv").string().c_str());
}

// ---------------------------------------------------------------------------

struct FigureSpec {
  double W, nbar, m, nu, phi, gap_threshold;
};

FigureSpec figure_spec(const std::string& figure) {
  if (figure == "fig1") return {1e-3, 1.0, 1e6, 0.1, 1e-4, 0.02};
  if (figure == "fig2") return {1e-3, 1.0, 1.6e4, 0.03, 1e-4, 0.05};
  throw CliError(kExitValidation, "figure must be fig1 or fig2");
}

void cmd_reproduce(RunContext& ctx) {
  Params& p = ctx.params;
  const FigureSpec fig = figure_spec(p.figure);
  p.W = fig.W;
  p.nbar = fig.nbar;
  p.m = fig.m;
  p.nu = fig.nu;
  p.phi = fig.phi;
  const int64_t m = repetitions(p.m);
  ProbePtr probe = make_probe(p.nu, p.nbar);
  const CurvePair curves = build_curves(probe.get(), p.phi, m, p.points, p.sigmas,
                                        parse_estimator(p.estimator));
  double mean_exact = 0, var_exact = 0, mean_gauss = 0, var_gauss = 0, gap = 0;
  check(wp_curve_moments(curves.exact.get(), &mean_exact, &var_exact));
  check(wp_curve_moments(curves.gauss.get(), &mean_gauss, &var_gauss));
  check(wp_curve_max_relative_gap(curves.exact.get(), curves.gauss.get(), 0.01, &gap));
  wp_bounds_report b;
  check(wp_full_report(probe.get(), p.W, m, p.phi, p.tol, &b));

  const double spread = std::sqrt(var_gauss);
  const std::vector<std::pair<std::string, double>> rows = {
      {"W", p.W},
      {"nbar", p.nbar},
      {"m", p.m},
      {"nu", p.nu},
      {"phi", p.phi},
      {"posterior_std", spread},
      {"posterior_mean", mean_gauss},
      {"posterior_std_exact", std::sqrt(var_exact)},
      {"posterior_mean_exact", mean_exact},
      {"marker_phi", p.phi},
      {"marker_W", p.W},
      {"weak_scale", b.weak_scale},
      {"strong_scale", b.strong_scale},
      {"ratio_weak", spread / b.weak_scale},
      {"ratio_W", spread / p.W},
      {"ratio_strong", spread / b.strong_scale},
      {"max_rel_gap", gap},
      {"gap_threshold", fig.gap_threshold},
      {"gap_within_threshold", gap < fig.gap_threshold ? 1.0 : 0.0},
      {"cr", b.cr},
      {"qcr", b.qcr},
      {"bcr", b.bcr},
      {"zz_exact", b.zz_exact},
      {"zz_closed", b.zz_closed},
      {"c1", b.diagnostics.c1},
      {"c2", b.diagnostics.c2},
      {"mnu2", b.diagnostics.mnu2}};
  ctx.emit(p.figure + "_curve.csv", curve_csv(curves));
  ctx.emit(p.figure + "_summary.csv", weakprobe::cli::key_value_csv(rows));
  for (const auto& [key, value] : rows) print_row(key.c_str(), value);
}

// ---------------------------------------------------------------------------

int dispatch(Params params) {
  const auto start = std::chrono::steady_clock::now();
  RunContext ctx{params, weakprobe::cli::resolve_output_dir(params.out), {}};
  if (params.command == "bounds") {
    cmd_bounds(ctx);
  } else if (params.command == "posterior") {
    cmd_posterior(ctx);
  } else if (params.command == "simulate") {
    cmd_simulate(ctx);
  } else if (params.command == "sweep") {
    cmd_sweep(ctx);
  } else if (params.command == "reproduce") {
    cmd_reproduce(ctx);
  } else {
    throw CliError(kExitValidation, "unknown command '" + params.command + "'");
  }
  const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
  const std::string stem = params.command == "reproduce" ? ctx.params.figure : params.command;
  const std::string manifest_name = stem + "_manifest.json";
  ctx.outputs.push_back(manifest_name);
  const Json manifest{{"command", params.command},
                      {"parameters", to_json(ctx.params)},
                      {"master_seed", ctx.params.seed},
                      {"version", wp_version()},
                      {"outputs", ctx.outputs},
                      {"wall_clock_seconds", elapsed.count()}};
  weakprobe::cli::write_atomically(ctx.outdir / manifest_name, manifest.dump(2) + "\n");
  return 0;
}

Params replay_params(const std::string& manifest_path, const std::string& out_override) {
  std::ifstream in(manifest_path);
  if (!in) throw CliError(weakprobe::cli::kExitIo, "cannot read manifest " + manifest_path);
  try {
    const Json manifest = Json::parse(in);
    Params p = from_json(manifest.at("parameters"));
    if (!out_override.empty()) p.out = out_override;
    return p;
  } catch (const Json::exception& e) {
    throw CliError(kExitValidation, std::string("malformed manifest: ") + e.what());
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Phase-estimation bounds and Monte Carlo workbench for unbalanced-cat probes"};
  app.set_version_flag("--version", std::string(wp_version()));
  app.set_config("--config", "", "key = value file; command-line flags take precedence");
  app.require_subcommand(1);

  Params params;
  app.add_option("--W", params.W, "prior window width (radians)");
  app.add_option("--nbar", params.nbar, "mean photon number per probe");
  app.add_option("--m", params.m, "repetitions per experiment");
  app.add_option("--nu", params.nu, "probe amplitude in (0,1)");
  app.add_option("--phi", params.phi, "true phase (radians)");
  app.add_option("--trials", params.trials, "Monte Carlo trials");
  app.add_option("--seed", params.seed, "master seed");
  app.add_option("--out", params.out, "output directory (default $WEAKPROBE_OUT_DIR or .)");
  app.add_option("--tol", params.tol, "Ziv-Zakai quadrature relative tolerance");
  app.add_option("--policy", params.policy, "phase policy: fixed | prior");
  app.add_option("--estimator", params.estimator, "estimator: linearized | exact");
  app.add_option("--threads", params.threads, "worker threads (0 = all cores)");
  app.add_option("--points", params.points, "posterior grid points");
  app.add_option("--sigmas", params.sigmas, "posterior grid half-width in sigmas");

  auto* bounds = app.add_subcommand("bounds", "all precision bounds and condition diagnostics");
  auto* posterior = app.add_subcommand("posterior", "exact and Gaussian estimator posteriors");
  auto* simulate = app.add_subcommand("simulate", "Monte Carlo estimation campaign");
  auto* sweep = app.add_subcommand("sweep", "bounds (and optional MC) over a parameter grid");
  sweep->add_option("--vary", params.vary, "swept parameter: m | nu | nbar | W")->required();
  sweep->add_option("--values", params.values, "comma-separated values")
      ->delimiter(',')
      ->required();
  sweep->add_option("--hold-mnu2", params.hold_mnu2, "set m = round(X / nu^2) at each nu");
  sweep->add_flag("--mc", params.mc, "add Monte Carlo rmse columns");
  auto* reproduce = app.add_subcommand("reproduce", "regenerate a figure's curves and ratios");
  reproduce->add_option("figure", params.figure, "fig1 | fig2")->required();
  std::string manifest_path;
  std::string replay_out;
  auto* replay = app.add_subcommand("replay", "re-run the command recorded in a manifest");
  replay->add_option("manifest", manifest_path, "manifest JSON")->required();
  for (auto* sub : {bounds, posterior, simulate, sweep, reproduce, replay}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  }

  try {
    if (replay->parsed()) return dispatch(replay_params(manifest_path, params.out));
    for (auto* sub : {bounds, posterior, simulate, sweep, reproduce}) {
      if (sub->parsed()) params.command = sub->get_name();
    }
    if (reproduce->parsed() && app.get_option("--sigmas")->count() == 0) params.sigmas = 6.0;
    return dispatch(params);
  } catch (const CliError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.exit_code();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return WP_ERR_INTERNAL;
  }
}
