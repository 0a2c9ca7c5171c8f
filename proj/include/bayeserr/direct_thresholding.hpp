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

#include <optional>
#include <span>

#include "bayeserr/bayes_decisions.hpp"
#include "bayeserr/score_store.hpp"

namespace bayeserr {

struct TestOutcome {
  double pmiss = 0.0;
  double pfa = 0.0;
  double risk = 0.0;
};

/// A raw-score threshold chosen on a calibration set, optionally evaluated on
/// an independent test set.
struct ThresholdReport {
  double threshold = 0.0;
  double cal_pmiss = 0.0;
  double cal_pfa = 0.0;
  std::optional<TestOutcome> test;
};

/// Threshold minimizing the empirical detection cost on `cal`. Ties go to
/// the smallest threshold; an open optimal interval is reported by its
/// midpoint.
ThresholdReport min_dcf_threshold(const ScoreSet& cal, const OperatingPoint& op);

/// Smallest score threshold whose empirical false-accept rate (scores >=
/// threshold) does not exceed `target_rate`. Rate 0 yields the next double
/// above the largest score. Throws InvalidArgument for an empty sequence or a
/// rate outside [0, 1].
double fixed_fa_threshold(std::span<const double> nontarget_scores,
                          double target_rate);

/// Report for a fixed-FA threshold with calibration-set rates filled in.
ThresholdReport fixed_fa_report(const ScoreSet& cal, double target_rate);

/// Evaluates `threshold` on the test set. Returns `report` with `test` set.
ThresholdReport apply_threshold(const ScoreSet& test, ThresholdReport report,
                                const OperatingPoint& op);

/// Convenience for a bare threshold.
TestOutcome apply_threshold(const ScoreSet& test, double threshold,
                            const OperatingPoint& op);

}  // namespace bayeserr
