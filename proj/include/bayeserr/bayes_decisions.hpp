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
#include <optional>
#include <vector>

#include "bayeserr/error_curves.hpp"
#include "bayeserr/score_store.hpp"

namespace bayeserr {

/// Prior P(H1) plus miss/false-accept costs, with the Bayes threshold they
/// imply. All thresholds are natural-log likelihood ratios.
class OperatingPoint {
 public:
  /// Throws InvalidArgument unless 0 < prior < 1 and both costs are positive
  /// and finite.
  OperatingPoint(double prior, double cmiss = 1.0, double cfa = 1.0);

  double prior() const noexcept { return prior_; }
  double cmiss() const noexcept { return cmiss_; }
  double cfa() const noexcept { return cfa_; }

  /// prior * Cmiss / (prior * Cmiss + (1 - prior) * Cfa)
  double effective_prior() const noexcept { return effective_prior_; }

  /// log(Cfa (1 - prior) / (Cmiss prior))
  double bayes_threshold_log() const noexcept { return threshold_log_; }

  bool unit_costs() const noexcept { return cmiss_ == 1.0 && cfa_ == 1.0; }

 private:
  double prior_;
  double cmiss_;
  double cfa_;
  double effective_prior_;
  double threshold_log_;
};

/// The weighted-risk formula shared by every risk computation here:
/// prior * cmiss * pmiss + (1 - prior) * cfa * pfa.
double weighted_risk(double prior, double cmiss, double cfa, double pmiss,
                     double pfa) noexcept;

enum class Decision { kAccept, kReject };

/// Accept iff llr >= the Bayes threshold. Throws InvalidArgument for NaN.
Decision bayes_decision(double llr, const OperatingPoint& op);

struct RiskAtThreshold {
  double risk = 0.0;
  /// Score threshold the rates were measured at (log-LR domain for actual
  /// risk, raw-score domain for minimum risk).
  double threshold = 0.0;
  double pmiss = 0.0;
  double pfa = 0.0;
};

/// Risk of Bayes decisions made on the set's log-LLRs. `truth_prior`, when
/// given, weights the two error types while the threshold still comes from
/// `op` (prior miscalibration analysis). Throws NotCalibrated for raw scores.
RiskAtThreshold actual_risk(const ScoreSet& set, const OperatingPoint& op,
                            std::optional<double> truth_prior = std::nullopt);

/// Lowest risk over every score threshold. The reported threshold is the
/// smallest representative of the optimal interval: -inf for accept-all,
/// +inf for reject-all, otherwise the midpoint between the two neighbouring
/// distinct scores.
RiskAtThreshold min_risk(const ScoreSet& set, const OperatingPoint& op);

/// Unit-cost counterparts. These evaluate prior * pmiss + (1 - prior) * pfa
/// directly rather than through the cost path.
RiskAtThreshold actual_error_rate(const ScoreSet& set, double prior);
RiskAtThreshold min_error_rate(const ScoreSet& set, double prior);

struct EqualRiskPoint {
  /// PAV log-LR of the hull segment holding the crossing.
  double theta_star = 0.0;
  double r_star = 0.0;
  double pmiss = 0.0;
  double pfa = 0.0;
};

/// Point on the ROC convex hull where Cmiss * pmiss = Cfa * pfa.
EqualRiskPoint equal_risk_point(const Rocch& hull, double cmiss, double cfa);
EqualRiskPoint equal_risk_point(const ScoreSet& set, double cmiss, double cfa);

/// min(prior, 1 - prior, eer) for unit costs, otherwise
/// min(Cmiss prior, Cfa (1 - prior), R*). Non-unit costs need `equal_risk`.
double trapezium_bound(const OperatingPoint& op, const Rocch& hull,
                       const std::optional<EqualRiskPoint>& equal_risk = std::nullopt);

/// Logit-uniform prior grid.
struct PriorGrid {
  double logit_lo = -7.0;
  double logit_hi = 7.0;
  std::size_t size = 201;

  std::vector<double> logits() const;
};

double sigmoid(double logit) noexcept;
double logit(double p) noexcept;

struct BayesErrorProfile {
  std::vector<double> logit_prior;
  std::vector<double> prior;
  /// Empty for uncalibrated scores.
  std::vector<double> actual_risk;
  std::vector<double> min_risk;
  std::vector<double> bound;
  double cmiss = 1.0;
  double cfa = 1.0;
  double eer = 0.0;
  /// Grid prior where min_risk peaks (first one on ties).
  double pi_star = 0.5;

  bool has_actual() const noexcept { return !actual_risk.empty(); }
};

/// Actual risk, minimum risk and trapezium bound at every grid prior.
/// Throws InvalidArgument for an empty grid or bad costs.
BayesErrorProfile bayes_error_profile(const ScoreSet& set,
                                      const PriorGrid& grid = {},
                                      double cmiss = 1.0, double cfa = 1.0);

}  // namespace bayeserr
