/*
 * Copyright 2026 The bayeserr Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// Command-line front end. Talks to the library only through the C interface.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "bayeserr/bayeserr.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitData = 2;

struct ScoresDeleter {
  void operator()(bayeserr_scores* s) const { bayeserr_scores_free(s); }
};
struct ProfileDeleter {
  void operator()(bayeserr_profile* p) const { bayeserr_profile_free(p); }
};
struct StringDeleter {
  void operator()(char* s) const { bayeserr_string_free(s); }
};
using ScoresPtr = std::unique_ptr<bayeserr_scores, ScoresDeleter>;
using ProfilePtr = std::unique_ptr<bayeserr_profile, ProfileDeleter>;
using StringPtr = std::unique_ptr<char, StringDeleter>;

// Carries the exit status out of a failing library call.
struct Failure {
  int exit_code;
};

void check(bayeserr_status status) {
  if (status == BAYESERR_OK) return;
  std::cerr << "bayeserr: " << bayeserr_last_error() << '\n';
  throw Failure{status == BAYESERR_ERR_INVALID_ARGUMENT ? kExitUsage : kExitData};
}

std::string number(double v) {
  if (v != v) return "nan";
  if (v == 1.0 / 0.0) return "inf";
  if (v == -1.0 / 0.0) return "-inf";
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.9g", v);
  return buf;
}

void write_text(const std::string& path, const char* text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  out << text;
  if (!out) {
    std::cerr << "bayeserr: cannot write `" << path << "`\n";
    throw Failure{kExitData};
  }
}

struct InputOptions {
  std::string combined;
  std::string tar;
  std::string non;
  bool calibrated = false;

  void attach(CLI::App* cmd) {
    auto* file = cmd->add_option("scores", combined, "Score file with `label score` lines");
    auto* tar_opt = cmd->add_option("--tar", tar, "File of target scores, one per line");
    auto* non_opt = cmd->add_option("--non", non, "File of non-target scores, one per line");
    tar_opt->needs(non_opt)->excludes(file);
    non_opt->needs(tar_opt)->excludes(file);
    cmd->add_flag("--calibrated", calibrated, "Scores are natural-log likelihood ratios");
  }

  ScoresPtr load() const {
    bayeserr_scores* raw = nullptr;
    if (!tar.empty()) {
      check(bayeserr_scores_parse_files(tar.c_str(), non.c_str(), calibrated, &raw));
    } else if (!combined.empty()) {
      check(bayeserr_scores_parse_file(combined.c_str(), calibrated, &raw));
    } else {
      std::cerr << "bayeserr: give a score file or --tar and --non\n";
      throw Failure{kExitUsage};
    }
    return ScoresPtr(raw);
  }
};

struct CostOptions {
  double prior = 0.5;
  double cmiss = 1.0;
  double cfa = 1.0;

  void attach(CLI::App* cmd, bool with_prior) {
    if (with_prior)
      cmd->add_option("--prior", prior, "Target prior P(H1)")
          ->check(CLI::Range(0.0, 1.0))
          ->capture_default_str();
    cmd->add_option("--cmiss", cmiss, "Cost of a miss")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_option("--cfa", cfa, "Cost of a false accept")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
  }
};

int run_eer(const InputOptions& in) {
  const auto scores = in.load();
  double eer = 0.0;
  check(bayeserr_rocch_eer(scores.get(), &eer));
  std::cout << number(eer) << '\n';
  return kExitOk;
}

int run_rocdet(const InputOptions& in, const std::string& roc_path,
               const std::string& det_path) {
  const auto scores = in.load();
  char* raw = nullptr;
  if (!roc_path.empty() || det_path.empty()) {
    check(bayeserr_roc_csv(scores.get(), &raw));
    StringPtr roc(raw);
    write_text(roc_path, roc.get());
  }
  if (!det_path.empty()) {
    check(bayeserr_det_csv(scores.get(), &raw));
    StringPtr det(raw);
    write_text(det_path, det.get());
  }
  return kExitOk;
}

struct GridOptions {
  double lo = -7.0;
  double hi = 7.0;
  std::size_t n = 201;
};

int run_bep(const InputOptions& in, const CostOptions& costs, const GridOptions& grid,
            const std::string& out_path, const std::string& svg_path, bool normalize) {
  const auto scores = in.load();
  bayeserr_profile* raw_profile = nullptr;
  check(bayeserr_profile_compute(scores.get(), grid.lo, grid.hi, grid.n, costs.cmiss,
                                 costs.cfa, &raw_profile));
  ProfilePtr profile(raw_profile);
  if (normalize) check(bayeserr_profile_normalize(profile.get()));

  char* raw = nullptr;
  check(bayeserr_profile_csv(profile.get(), &raw));
  StringPtr csv(raw);
  write_text(out_path, csv.get());
  if (!svg_path.empty()) {
    check(bayeserr_profile_svg(profile.get(), &raw));
    StringPtr svg(raw);
    write_text(svg_path, svg.get());
  }
  return kExitOk;
}

int run_dcf(const InputOptions& in, const CostOptions& costs) {
  const auto scores = in.load();
  bayeserr_risk min{};
  check(bayeserr_min_risk(scores.get(), costs.prior, costs.cmiss, costs.cfa, &min));
  if (bayeserr_scores_calibrated(scores.get())) {
    bayeserr_risk act{};
    check(bayeserr_actual_risk(scores.get(), costs.prior, costs.cmiss, costs.cfa, &act));
    std::cout << "actual_risk " << number(act.risk) << '\n';
  } else {
    std::cout << "actual_risk n/a\n";
  }
  std::cout << "min_risk " << number(min.risk) << '\n';
  std::cout << "min_risk_threshold " << number(min.threshold) << '\n';
  return kExitOk;
}

int run_threshold(const std::string& cal_path, const std::string& test_path,
                  const CostOptions& costs, bool min_dcf, std::optional<double> fa_rate,
                  const std::string& out_path) {
  if (min_dcf == fa_rate.has_value()) {
    std::cerr << "bayeserr: choose exactly one of --min-dcf and --fix-fa-rate\n";
    return kExitUsage;
  }
  bayeserr_scores* raw = nullptr;
  check(bayeserr_scores_parse_file(cal_path.c_str(), 0, &raw));
  ScoresPtr cal(raw);
  bayeserr_threshold_report report{};
  if (min_dcf)
    check(bayeserr_min_dcf_threshold(cal.get(), costs.prior, costs.cmiss, costs.cfa, &report));
  else
    check(bayeserr_fixed_fa_threshold(cal.get(), *fa_rate, &report));
  if (!test_path.empty()) {
    check(bayeserr_scores_parse_file(test_path.c_str(), 0, &raw));
    ScoresPtr test(raw);
    check(bayeserr_apply_threshold(test.get(), costs.prior, costs.cmiss, costs.cfa, &report));
  }
  char* text = nullptr;
  check(bayeserr_threshold_report_csv(&report, &text));
  StringPtr csv(text);
  write_text(out_path, csv.get());
  return kExitOk;
}

struct SimulateOptions {
  double eer = 0.05;
  std::size_t ntar = 10000;
  std::size_t nnon = 10000;
  std::uint64_t seed = 1;
  double shift = 0.0;
  double scale = 1.0;
  std::string out;
};

int run_simulate(const SimulateOptions& opt) {
  bayeserr_scores* raw = nullptr;
  char* json = nullptr;
  check(bayeserr_simulate(opt.eer, opt.ntar, opt.nnon, opt.seed, opt.scale, opt.shift, &raw,
                          &json));
  ScoresPtr scores(raw);
  StringPtr sidecar(json);
  check(bayeserr_scores_write_file(scores.get(), opt.out.c_str()));
  write_text(opt.out + ".json", sidecar.get());
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bayes error-rate evaluation of binary detector scores"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(bayeserr_version()));

  InputOptions eer_in;
  auto* eer_cmd = app.add_subcommand("eer", "Print the ROC-convex-hull equal-error-rate");
  eer_in.attach(eer_cmd);

  InputOptions rocdet_in;
  std::string roc_path, det_path;
  auto* rocdet_cmd = app.add_subcommand("rocdet", "Write ROC and DET points as CSV");
  rocdet_in.attach(rocdet_cmd);
  rocdet_cmd->add_option("--roc", roc_path, "ROC CSV output (stdout when neither is given)");
  rocdet_cmd->add_option("--det", det_path, "DET CSV output (probit coordinates)");

  InputOptions bep_in;
  CostOptions bep_costs;
  GridOptions grid;
  std::string bep_out, svg_path;
  bool normalize = false;
  auto* bep_cmd = app.add_subcommand("bep", "Bayes error/risk profile over a prior sweep");
  bep_in.attach(bep_cmd);
  bep_costs.attach(bep_cmd, false);
  bep_cmd->add_option("--grid-lo", grid.lo, "Lowest logit prior")->capture_default_str();
  bep_cmd->add_option("--grid-hi", grid.hi, "Highest logit prior")->capture_default_str();
  bep_cmd->add_option("--grid-n", grid.n, "Number of grid points")
      ->check(CLI::Range(std::size_t{1}, std::size_t{1000000}))
      ->capture_default_str();
  bep_cmd->add_option("-o,--out", bep_out, "Profile CSV output (default stdout)");
  bep_cmd->add_option("--svg", svg_path, "Also write a chart as SVG");
  bep_cmd->add_flag("--normalize", normalize,
                    "Divide risks by the prior bound min(Cmiss*prior, Cfa*(1-prior))");

  InputOptions dcf_in;
  CostOptions dcf_costs;
  auto* dcf_cmd = app.add_subcommand("dcf", "Actual and minimum risk at one operating point");
  dcf_in.attach(dcf_cmd);
  dcf_costs.attach(dcf_cmd, true);

  std::string cal_path, test_path, threshold_out;
  CostOptions th_costs;
  bool min_dcf = false;
  std::optional<double> fa_rate;
  auto* th_cmd = app.add_subcommand(
      "threshold", "Pick a raw-score threshold on a calibration file, apply it to a test file");
  th_cmd->add_option("cal", cal_path, "Calibration score file")->required();
  th_cmd->add_option("test", test_path, "Test score file");
  th_costs.attach(th_cmd, true);
  th_cmd->add_flag("--min-dcf", min_dcf, "Threshold minimizing the calibration-set cost");
  th_cmd->add_option("--fix-fa-rate", fa_rate, "Threshold fixing the calibration-set FA rate")
      ->check(CLI::Range(0.0, 1.0));
  th_cmd->add_option("-o,--out", threshold_out, "CSV output (default stdout)");

  SimulateOptions sim;
  auto* sim_cmd = app.add_subcommand("simulate", "Write synthetic calibrated Gaussian scores");
  sim_cmd->add_option("--eer", sim.eer, "Analytic EER of the model")
      ->check(CLI::Range(0.0, 0.5))
      ->capture_default_str();
  sim_cmd->add_option("--ntar", sim.ntar, "Number of target trials")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  sim_cmd->add_option("--nnon", sim.nnon, "Number of non-target trials")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  sim_cmd->add_option("--seed", sim.seed, "Random seed")->capture_default_str();
  sim_cmd->add_option("--shift", sim.shift, "Add this offset to every score")
      ->capture_default_str();
  sim_cmd->add_option("--scale", sim.scale, "Multiply every score by this (> 0)")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  sim_cmd->add_option("-o,--out", sim.out, "Score file to write (sidecar gets .json)")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*eer_cmd) return run_eer(eer_in);
    if (*rocdet_cmd) return run_rocdet(rocdet_in, roc_path, det_path);
    if (*bep_cmd) return run_bep(bep_in, bep_costs, grid, bep_out, svg_path, normalize);
    if (*dcf_cmd) return run_dcf(dcf_in, dcf_costs);
    if (*th_cmd)
      return run_threshold(cal_path, test_path, th_costs, min_dcf, fa_rate, threshold_out);
    if (*sim_cmd) return run_simulate(sim);
  } catch (const Failure& f) {
    return f.exit_code;
  }
  return kExitUsage;
}
