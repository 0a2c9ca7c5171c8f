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

// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// nonzero if any fails.

#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "bayeserr/bayes_decisions.hpp"
#include "bayeserr/direct_thresholding.hpp"
#include "bayeserr/error_curves.hpp"
#include "bayeserr/score_store.hpp"
#include "bayeserr/synthetic.hpp"
#include "oracles.hpp"

using namespace bayeserr;
namespace fs = std::filesystem;

namespace {

// Pinned tolerances and sizes.
constexpr double kMinRiskRuntimeS = 5.0;
constexpr double kHullEerTol = 1e-12;
constexpr double kEerMaxTol = 1e-6;
constexpr double kEerMaxExceedTol = 1e-12;
constexpr double kExactBoundTol = 1e-12;
constexpr double kGaussEer = 0.05;
constexpr std::size_t kGaussN = 100000;
constexpr std::uint64_t kGaussSeed = 20260415;
constexpr double kGaussRuntimeS = 2.0;
constexpr double kInvarianceTol = 1e-12;
constexpr double kEqualRiskTol = 1e-9;
constexpr double kFixedFaRate = 0.01;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

int failures = 0;

void report(const char* name, bool ok, const std::string& detail) {
  std::printf("%s  %-34s %s\n", ok ? "PASS" : "FAIL", name, detail.c_str());
  if (!ok) ++failures;
}

std::string fmt(const char* f, double a) {
  char buf[128];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

std::string fmt(const char* f, double a, double b) {
  char buf[160];
  std::snprintf(buf, sizeof buf, f, a, b);
  return buf;
}

std::string fmt(const char* f, double a, double b, double c) {
  char buf[192];
  std::snprintf(buf, sizeof buf, f, a, b, c);
  return buf;
}

double uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

void min_risk_oracle() {
  std::mt19937_64 rng(101);
  std::size_t mismatches = 0;
  const auto t0 = Clock::now();
  for (int i = 0; i < 200; ++i) {
    const auto set = oracle::random_set(rng, 2, 50);
    const OperatingPoint op(uniform(rng, 0.001, 0.999), uniform(rng, 0.1, 10.0),
                            uniform(rng, 0.1, 10.0));
    const auto got = min_risk(set, op);
    const auto want = oracle::brute_min_risk(set, op.prior(), op.cmiss(), op.cfa());
    if (got.risk != want.risk) ++mismatches;
  }
  const double secs = seconds_since(t0);
  report("min_risk oracle equivalence", mismatches == 0 && secs < kMinRiskRuntimeS,
         fmt("mismatches=%g/200 runtime=%.3fs", static_cast<double>(mismatches), secs));
}

void counting_oracle() {
  std::mt19937_64 rng(202);
  std::size_t mismatches = 0;
  for (int i = 0; i < 200; ++i) {
    const auto set = oracle::random_set(rng, 1, 50);
    std::vector<double> thresholds{-oracle::kInf, oracle::kInf};
    for (double s : set.targets()) thresholds.push_back(s);
    for (double s : set.nontargets()) thresholds.push_back(s);
    for (int k = 0; k < 20; ++k) thresholds.push_back(uniform(rng, -8.0, 8.0));
    std::shuffle(thresholds.begin(), thresholds.end(), rng);
    const auto got = empirical_error_rates(set, thresholds);
    for (std::size_t k = 0; k < thresholds.size(); ++k) {
      const auto want = oracle::naive_rates(set, thresholds[k]);
      if (got.pmiss[k] != want.pmiss || got.pfa[k] != want.pfa) ++mismatches;
    }
  }
  report("joint-sort counting", mismatches == 0,
         fmt("mismatching thresholds=%g", static_cast<double>(mismatches)));
}

void pav_oracle() {
  std::size_t cases = 0, mismatches = 0;
  for (std::size_t n = 2; n <= 8; ++n)
    for (std::uint32_t labels = 1; labels + 1 < (1u << n); ++labels)
      for (std::uint32_t ties = 0; ties < (1u << (n - 1)); ++ties) {
        std::vector<std::vector<int>> groups(1);
        std::vector<double> tar, non;
        for (std::size_t i = 0; i < n; ++i) {
          const int label = (labels >> i) & 1u;
          groups.back().push_back(label);
          (label ? tar : non).push_back(static_cast<double>(groups.size()));
          if (i + 1 < n && (ties & (1u << i))) groups.emplace_back();
        }
        const auto map = pav_calibrate(ScoreSet(tar, non, false));
        std::vector<double> fit;
        for (std::size_t g = 0; g < groups.size(); ++g)
          for (std::size_t j = 0; j < groups[g].size(); ++j)
            fit.push_back(map.posterior_of(static_cast<double>(g + 1)));
        ++cases;
        if (fit != oracle::brute_isotonic(groups)) ++mismatches;
      }

  std::mt19937_64 rng(303);
  double worst = 0.0;
  for (int i = 0; i < 300; ++i) {
    const auto set = oracle::random_set(rng, 1, 15);
    worst = std::max(worst, std::abs(rocch(set).eer - oracle::brute_hull_eer(set)));
  }
  report("PAV and hull EER oracles", mismatches == 0 && worst <= kHullEerTol,
         fmt("pav mismatches=%g/%g max|eer-brute|=%.3g", static_cast<double>(mismatches),
             static_cast<double>(cases), worst));
}

void eer_maximum() {
  std::mt19937_64 rng(404);
  const PriorGrid grid;
  double worst_gap = 0.0, worst_exceed = -oracle::kInf, worst_kink = 0.0;
  for (int i = 0; i < 20; ++i) {
    const auto set = oracle::random_set(rng, 5, 50);
    const auto profile = bayes_error_profile(set, grid, 1.0, 1.0);
    const double peak = *std::max_element(profile.min_risk.begin(), profile.min_risk.end());
    worst_gap = std::max(worst_gap, std::abs(peak - profile.eer));
    worst_exceed = std::max(worst_exceed, peak - profile.eer);
    // Off the grid: min_risk at the prior where the EER hull segment is optimal.
    const double kink = sigmoid(-equal_risk_point(rocch(set), 1.0, 1.0).theta_star);
    worst_kink = std::max(worst_kink, std::abs(min_risk(set, OperatingPoint(kink)).risk - profile.eer));
  }
  report("EER maximum over default grid", worst_gap <= kEerMaxTol && worst_exceed <= kEerMaxExceedTol,
         fmt("max|max_grid min_risk - eer|=%.3g max(excess)=%.3g", worst_gap, worst_exceed) +
             fmt(" (at hull prior: %.3g)", worst_kink));
}

void exact_trapezium() {
  std::mt19937_64 rng(505);
  const PriorGrid grid;
  double worst_bound = -oracle::kInf, worst_gap = 0.0;
  for (int i = 0; i < 50; ++i) {
    const auto raw = oracle::random_set(rng, 1, 60);
    const double eer = rocch(raw).eer;
    const auto recal = pav_recalibrate(raw);
    const auto profile = bayes_error_profile(recal, grid, 1.0, 1.0);
    for (std::size_t k = 0; k < profile.prior.size(); ++k) {
      const double p = profile.prior[k];
      const double bound = std::min({p, 1.0 - p, eer});
      worst_bound = std::max(worst_bound, profile.actual_risk[k] - bound);
      worst_gap = std::max(worst_gap, std::abs(profile.actual_risk[k] - profile.min_risk[k]));
    }
  }
  report("trapezium bound, exact form",
         worst_bound <= kExactBoundTol && worst_gap <= kExactBoundTol,
         fmt("max(actual-bound)=%.3g max|actual-min|=%.3g", worst_bound, worst_gap));
}

// 3-sigma binomial allowance for the actual risk at prior p.
std::vector<double> three_sigma(const ScoreSet& set, const std::vector<double>& priors) {
  std::vector<double> thresholds;
  for (double p : priors) thresholds.push_back(OperatingPoint(p).bayes_threshold_log());
  const auto rates = empirical_error_rates(set, thresholds);
  const double n1 = static_cast<double>(set.num_targets());
  const double n0 = static_cast<double>(set.num_nontargets());
  std::vector<double> out;
  for (std::size_t k = 0; k < priors.size(); ++k) {
    const double p = priors[k], pm = rates.pmiss[k], pf = rates.pfa[k];
    const double var = p * p * pm * (1.0 - pm) / n1 + (1.0 - p) * (1.0 - p) * pf * (1.0 - pf) / n0;
    out.push_back(3.0 * std::sqrt(var));
  }
  return out;
}

void statistical_trapezium_and_failure() {
  const auto t0 = Clock::now();
  const auto model = model_from_eer(kGaussEer);
  const auto set = sample_scores(model, kGaussN, kGaussN, kGaussSeed);
  const auto profile = bayes_error_profile(set, PriorGrid{}, 1.0, 1.0);
  const double secs = seconds_since(t0);
  const double eer_tol = 3.0 * std::sqrt(kGaussEer * (1.0 - kGaussEer) / kGaussN);
  const auto sigma3 = three_sigma(set, profile.prior);
  std::size_t violations = 0;
  for (std::size_t k = 0; k < profile.prior.size(); ++k)
    if (profile.actual_risk[k] > profile.bound[k] + sigma3[k]) ++violations;
  report("trapezium bound, statistical form",
         std::abs(profile.eer - kGaussEer) <= eer_tol && violations == 0 && secs < kGaussRuntimeS,
         fmt("eer=%.6f (|err|<=%.6f) violations=%g", profile.eer, eer_tol,
             static_cast<double>(violations)) +
             fmt(" runtime=%.3fs", secs));

  const auto shifted = miscalibrate(set, 1.0, 3.0 * std::sqrt(model.variance()));
  const auto shifted_profile = bayes_error_profile(shifted, PriorGrid{}, 1.0, 1.0);
  const auto shifted_sigma3 = three_sigma(shifted, shifted_profile.prior);
  std::size_t exceed = 0;
  double worst_min = 0.0;
  for (std::size_t k = 0; k < shifted_profile.prior.size(); ++k) {
    if (shifted_profile.actual_risk[k] > shifted_profile.bound[k] + shifted_sigma3[k]) ++exceed;
    worst_min = std::max(worst_min, std::abs(shifted_profile.min_risk[k] - profile.min_risk[k]));
  }
  report("calibration failure under shift", exceed >= 1 && worst_min <= kInvarianceTol,
         fmt("priors above bound+3sigma=%g max|dmin_risk|=%.3g", static_cast<double>(exceed),
             worst_min));
}

bool same(const RiskAtThreshold& a, const RiskAtThreshold& b) {
  return a.risk == b.risk && a.threshold == b.threshold && a.pmiss == b.pmiss && a.pfa == b.pfa;
}

void cost_reduction() {
  std::mt19937_64 rng(606);
  std::size_t bit_mismatches = 0;
  double worst_rstar = 0.0;
  for (int i = 0; i < 50; ++i) {
    const auto raw = oracle::random_set(rng, 2, 50);
    const ScoreSet set({raw.targets().begin(), raw.targets().end()},
                       {raw.nontargets().begin(), raw.nontargets().end()}, true);
    const double p = uniform(rng, 0.001, 0.999);
    const OperatingPoint op(p, 1.0, 1.0);
    if (!same(actual_risk(set, op), actual_error_rate(set, p))) ++bit_mismatches;
    if (!same(min_risk(set, op), min_error_rate(set, p))) ++bit_mismatches;
    if (op.effective_prior() != p) ++bit_mismatches;
    const auto hull = rocch(set);
    if (trapezium_bound(op, hull) != std::min({p, 1.0 - p, hull.eer})) ++bit_mismatches;
    worst_rstar = std::max(worst_rstar, std::abs(equal_risk_point(hull, 1.0, 1.0).r_star - hull.eer));
  }
  report("unit-cost reduction", bit_mismatches == 0 && worst_rstar <= kEqualRiskTol,
         fmt("bit mismatches=%g max|R*-eer|=%.3g", static_cast<double>(bit_mismatches),
             worst_rstar));
}

void threshold_transfer() {
  const auto model = model_from_eer(kGaussEer);
  std::size_t tight = 0, moved = 0;
  std::string rates;
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const auto pool = sample_scores(model, 4000, 4000, 900 + seed);
    std::vector<double> tar(pool.targets().begin(), pool.targets().end());
    std::vector<double> non(pool.nontargets().begin(), pool.nontargets().end());
    std::mt19937_64 rng(seed);
    std::shuffle(tar.begin(), tar.end(), rng);
    std::shuffle(non.begin(), non.end(), rng);
    const std::size_t ht = tar.size() / 2, hn = non.size() / 2;
    const ScoreSet cal({tar.begin(), tar.begin() + ht}, {non.begin(), non.begin() + hn}, false);
    const ScoreSet test({tar.begin() + ht, tar.end()}, {non.begin() + hn, non.end()}, false);

    const auto rep = fixed_fa_report(cal, kFixedFaRate);
    // Rank-tight: the next lower non-target score would admit too many.
    double below = -oracle::kInf;
    for (double s : cal.nontargets())
      if (s < rep.threshold) below = std::max(below, s);
    const double looser = oracle::naive_rates(cal, below).pfa;
    if (rep.cal_pfa <= kFixedFaRate && looser > kFixedFaRate) ++tight;

    const double test_fa = oracle::naive_rates(test, rep.threshold).pfa;
    if (test_fa != kFixedFaRate) ++moved;
    rates += fmt(" %.4f", test_fa);
  }
  report("fixed-FA threshold transfer", tight == 10 && moved >= 8,
         fmt("rank-tight=%g/10 test FA != 0.01 in %g/10;", static_cast<double>(tight),
             static_cast<double>(moved)) +
             rates);
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

int run(const std::string& args) {
  const std::string cmd = std::string("\"") + BAYESERR_CLI_PATH + "\" " + args + " >/dev/null 2>&1";
  const int raw = std::system(cmd.c_str());
  return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
}

void cli_determinism() {
  const fs::path dir = fs::temp_directory_path() / "bayeserr_acceptance";
  fs::remove_all(dir);
  fs::create_directories(dir);
  std::vector<std::string> csv, svg;
  bool ok = true;
  for (int pass = 0; pass < 2; ++pass) {
    const auto sub = dir / std::to_string(pass);
    fs::create_directories(sub);
    const auto scores = (sub / "scores.txt").string();
    ok &= run("simulate --eer 0.05 --ntar 2000 --nnon 3000 --seed 7 --shift 1.5 -o " + scores) == 0;
    ok &= run("bep --calibrated " + scores + " -o " + (sub / "bep.csv").string() + " --svg " +
              (sub / "bep.svg").string()) == 0;
    csv.push_back(slurp(sub / "bep.csv"));
    svg.push_back(slurp(sub / "bep.svg"));
  }
  ok = ok && !csv[0].empty() && !svg[0].empty() && csv[0] == csv[1] && svg[0] == svg[1];
  report("CLI determinism", ok,
         fmt("csv bytes=%g svg bytes=%g", static_cast<double>(csv[0].size()),
             static_cast<double>(svg[0].size())));
  fs::remove_all(dir);
}

}  // namespace

int main() {
  min_risk_oracle();
  counting_oracle();
  pav_oracle();
  eer_maximum();
  exact_trapezium();
  statistical_trapezium_and_failure();
  cost_reduction();
  threshold_transfer();
  cli_determinism();
  std::printf("%d failed\n", failures);
  return failures == 0 ? 0 : 1;
}
