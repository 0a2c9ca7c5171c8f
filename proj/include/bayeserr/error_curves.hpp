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

#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "bayeserr/score_store.hpp"

namespace bayeserr {

// Tie rule used throughout the library: a trial is accepted when its score is
// >= the threshold. Hence Pmiss(t) = #{target < t} / N1 and
// Pfa(t) = #{non-target >= t} / N2.

struct ErrorRates {
  std::vector<double> pmiss;
  std::vector<double> pfa;
};

/// Miss and false-accept rates at each query threshold, in query order.
/// One joint sort of scores and thresholds; the results are the same doubles
/// that per-threshold counting would produce. Throws InvalidArgument on a NaN
/// threshold.
ErrorRates empirical_error_rates(const ScoreSet& set,
                                 std::span<const double> thresholds);

/// Step-function ROC. `thresholds` runs from -inf to +inf through the
/// distinct finite scores; the -inf entry accepts everything and the +inf
/// entry rejects everything.
struct StepRoc {
  std::vector<double> thresholds;
  std::vector<double> pmiss;
  std::vector<double> pfa;
};

StepRoc roc_points(const ScoreSet& set);

/// One PAV block: a run of ascending scores sharing a pooled posterior.
struct CalibrationBlock {
  double score_lo = 0.0;
  double score_hi = 0.0;
  std::size_t num_targets = 0;
  std::size_t num_nontargets = 0;

  std::size_t size() const noexcept { return num_targets + num_nontargets; }
  double posterior() const noexcept {
    return static_cast<double>(num_targets) / static_cast<double>(size());
  }
};

/// Non-parametric monotone calibration obtained by pool-adjacent-violators.
///
/// Equal scores always share a block, and adjacent blocks with equal pooled
/// posteriors are merged, so the block list is the minimal one and every
/// block boundary is a vertex of the ROC convex hull.
class CalibrationMap {
 public:
  CalibrationMap(std::vector<CalibrationBlock> blocks, std::size_t num_targets,
                 std::size_t num_nontargets);

  std::span<const CalibrationBlock> blocks() const noexcept { return blocks_; }
  double empirical_prior() const noexcept;

  /// Log-likelihood-ratio of a block: logit(posterior) - logit(prior).
  /// Pure blocks give -inf / +inf.
  double block_llr(std::size_t block) const;

  /// Posterior for an arbitrary score. Scores between two blocks take the
  /// lower block's value; scores below the first block take the first.
  double posterior_of(double score) const;
  double llr_of(double score) const;

 private:
  std::size_t block_index(double score) const;

  std::vector<CalibrationBlock> blocks_;
  std::size_t num_targets_;
  std::size_t num_nontargets_;
};

CalibrationMap pav_calibrate(const ScoreSet& set);

/// Replaces every score by its PAV log-LLR, trained on the set itself.
ScoreSet pav_recalibrate(const ScoreSet& set);

struct RocPoint {
  double pfa = 0.0;
  double pmiss = 0.0;
};

/// ROC convex hull. Vertices run from (pfa, pmiss) = (1, 0) to (0, 1); each
/// step lowers pfa, raises pmiss, or both. `block_llrs[k]` is the PAV log-LLR
/// of the block traversed between vertices k and k+1, i.e. minus the log of
/// the magnitude of that segment's slope.
struct Rocch {
  std::vector<RocPoint> vertices;
  std::vector<double> block_llrs;
  double eer = 0.0;
};

Rocch rocch(const ScoreSet& set);
Rocch rocch(const CalibrationMap& map);

struct DetPoint {
  double probit_pfa = 0.0;
  double probit_pmiss = 0.0;
  /// Set when either rate was 0 or 1 and the coordinate was pinned to the
  /// plot boundary.
  bool clamped = false;
};

/// Rates outside [kDetMinRate, 1 - kDetMinRate] are pinned to that range.
inline constexpr double kDetMinRate = 1e-6;

double probit(double p);
double normal_cdf(double x);

std::vector<DetPoint> det_points(const ScoreSet& set);

}  // namespace bayeserr
