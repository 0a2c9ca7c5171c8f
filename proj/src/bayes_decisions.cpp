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

#include "bayeserr/bayes_decisions.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <string>

#include "bayeserr/error.hpp"
#include "threshold_sweep.hpp"

namespace bayeserr {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void check_costs(double cmiss, double cfa) {
  if (!(cmiss > 0.0) || !std::isfinite(cmiss))
    throw InvalidArgument("Cmiss must be positive and finite");
  if (!(cfa > 0.0) || !std::isfinite(cfa))
    throw InvalidArgument("Cfa must be positive and finite");
}

void check_prior(double prior, const char* what) {
  if (!(prior > 0.0 && prior < 1.0))
    throw InvalidArgument(std::string(what) + " must lie strictly between 0 and 1");
}

RiskAtThreshold actual_at(const ScoreSet& set, double threshold, double weight,
                          double cmiss, double cfa) {
  if (!set.calibrated())
    throw NotCalibrated("actual risk needs log-likelihood-ratio scores");
  const double thresholds[] = {threshold};
  const auto rates = empirical_error_rates(set, thresholds);
  RiskAtThreshold out;
  out.threshold = threshold;
  out.pmiss = rates.pmiss[0];
  out.pfa = rates.pfa[0];
  out.risk = weighted_risk(weight, cmiss, cfa, out.pmiss, out.pfa);
  return out;
}

}  // namespace

OperatingPoint::OperatingPoint(double prior, double cmiss, double cfa)
    : prior_(prior), cmiss_(cmiss), cfa_(cfa) {
  check_prior(prior, "prior");
  check_costs(cmiss, cfa);
  const double miss_weight = prior * cmiss;
  const double fa_weight = (1.0 - prior) * cfa;
  effective_prior_ = miss_weight / (miss_weight + fa_weight);
  threshold_log_ =
      std::log(cfa) - std::log(cmiss) + std::log1p(-prior) - std::log(prior);
}

double weighted_risk(double prior, double cmiss, double cfa, double pmiss,
                     double pfa) noexcept {
  return prior * cmiss * pmiss + (1.0 - prior) * cfa * pfa;
}

Decision bayes_decision(double llr, const OperatingPoint& op) {
  if (std::isnan(llr)) throw InvalidArgument("NaN log-likelihood-ratio");
  return llr >= op.bayes_threshold_log() ? Decision::kAccept : Decision::kReject;
}

RiskAtThreshold actual_risk(const ScoreSet& set, const OperatingPoint& op,
                            std::optional<double> truth_prior) {
  double weight = op.prior();
  if (truth_prior) {
    if (!(*truth_prior >= 0.0 && *truth_prior <= 1.0))
      throw InvalidArgument("truth prior must lie in [0, 1]");
    weight = *truth_prior;
  }
  return actual_at(set, op.bayes_threshold_log(), weight, op.cmiss(), op.cfa());
}

RiskAtThreshold min_risk(const ScoreSet& set, const OperatingPoint& op) {
  const detail::ThresholdSweep sweep(set);
  return sweep.minimize(op.prior(), op.cmiss(), op.cfa());
}

RiskAtThreshold actual_error_rate(const ScoreSet& set, double prior) {
  check_prior(prior, "prior");
  if (!set.calibrated())
    throw NotCalibrated("actual error-rate needs log-likelihood-ratio scores");
  const double thresholds[] = {std::log1p(-prior) - std::log(prior)};
  const auto rates = empirical_error_rates(set, thresholds);
  RiskAtThreshold out;
  out.threshold = thresholds[0];
  out.pmiss = rates.pmiss[0];
  out.pfa = rates.pfa[0];
  out.risk = prior * out.pmiss + (1.0 - prior) * out.pfa;
  return out;
}

RiskAtThreshold min_error_rate(const ScoreSet& set, double prior) {
  check_prior(prior, "prior");
  const detail::ThresholdSweep sweep(set);
  RiskAtThreshold best;
  best.risk = kInf;
  std::size_t best_index = 0;
  for (std::size_t i = 0; i < sweep.num_candidates(); ++i) {
    const double pmiss = sweep.pmiss(i);
    const double pfa = sweep.pfa(i);
    const double risk = prior * pmiss + (1.0 - prior) * pfa;
    if (risk < best.risk) {
      best = {risk, 0.0, pmiss, pfa};
      best_index = i;
    }
  }
  best.threshold = sweep.representative(best_index);
  return best;
}

EqualRiskPoint equal_risk_point(const Rocch& hull, double cmiss, double cfa) {
  check_costs(cmiss, cfa);
  const auto& v = hull.vertices;
  auto gap = [&](const RocPoint& p) { return cmiss * p.pmiss - cfa * p.pfa; };

  std::size_t k = 0;
  while (k + 1 < v.size() && gap(v[k]) < 0.0) ++k;

  EqualRiskPoint out;
  if (gap(v[k]) == 0.0 || k == 0) {
    out.pmiss = v[k].pmiss;
    out.pfa = v[k].pfa;
    // At a vertex any log-LR between the neighbouring blocks is optimal.
    if (k > 0 && std::isfinite(hull.block_llrs[k - 1]))
      out.theta_star = hull.block_llrs[k - 1];
    else if (k < hull.block_llrs.size() && std::isfinite(hull.block_llrs[k]))
      out.theta_star = hull.block_llrs[k];
  } else {
    const RocPoint a = v[k - 1];
    const RocPoint b = v[k];
    auto at = [&](double t) {
      return RocPoint{a.pfa + t * (b.pfa - a.pfa), a.pmiss + t * (b.pmiss - a.pmiss)};
    };
    double lo = 0.0, hi = 1.0;
    for (int iter = 0; iter < 200 && hi - lo > 0.0; ++iter) {
      const double mid = 0.5 * (lo + hi);
      if (mid <= lo || mid >= hi) break;
      (gap(at(mid)) < 0.0 ? lo : hi) = mid;
    }
    const RocPoint p = at(0.5 * (lo + hi));
    out.pmiss = p.pmiss;
    out.pfa = p.pfa;
    out.theta_star = hull.block_llrs[k - 1];
  }
  out.r_star = 0.5 * (cmiss * out.pmiss + cfa * out.pfa);
  return out;
}

EqualRiskPoint equal_risk_point(const ScoreSet& set, double cmiss, double cfa) {
  return equal_risk_point(rocch(set), cmiss, cfa);
}

double trapezium_bound(const OperatingPoint& op, const Rocch& hull,
                       const std::optional<EqualRiskPoint>& equal_risk) {
  const double p = op.prior();
  if (op.unit_costs()) return std::min({p, 1.0 - p, hull.eer});
  if (!equal_risk)
    throw InvalidArgument("trapezium bound with non-unit costs needs the equal risk R*");
  return std::min({op.cmiss() * p, op.cfa() * (1.0 - p), equal_risk->r_star});
}

std::vector<double> PriorGrid::logits() const {
  if (size == 0) throw InvalidArgument("prior grid is empty");
  if (!std::isfinite(logit_lo) || !std::isfinite(logit_hi) || logit_lo > logit_hi)
    throw InvalidArgument("prior grid bounds must be finite with lo <= hi");
  std::vector<double> out(size);
  if (size == 1) {
    out[0] = logit_lo;
    return out;
  }
  const double span = logit_hi - logit_lo;
  const double steps = static_cast<double>(size - 1);
  for (std::size_t i = 0; i < size; ++i)
    out[i] = logit_lo + span * static_cast<double>(i) / steps;
  return out;
}

double sigmoid(double x) noexcept { return 1.0 / (1.0 + std::exp(-x)); }

double logit(double p) noexcept { return std::log(p) - std::log1p(-p); }

BayesErrorProfile bayes_error_profile(const ScoreSet& set, const PriorGrid& grid,
                                      double cmiss, double cfa) {
  check_costs(cmiss, cfa);
  BayesErrorProfile profile;
  profile.cmiss = cmiss;
  profile.cfa = cfa;
  profile.logit_prior = grid.logits();

  std::vector<OperatingPoint> ops;
  ops.reserve(profile.logit_prior.size());
  for (double l : profile.logit_prior) {
    const double p = sigmoid(l);
    check_prior(p, "grid prior");
    profile.prior.push_back(p);
    ops.emplace_back(p, cmiss, cfa);
  }

  if (set.calibrated()) {
    std::vector<double> thresholds;
    thresholds.reserve(ops.size());
    for (const auto& op : ops) thresholds.push_back(op.bayes_threshold_log());
    const auto rates = empirical_error_rates(set, thresholds);
    profile.actual_risk.reserve(ops.size());
    for (std::size_t i = 0; i < ops.size(); ++i)
      profile.actual_risk.push_back(
          weighted_risk(ops[i].prior(), cmiss, cfa, rates.pmiss[i], rates.pfa[i]));
  }

  const detail::ThresholdSweep sweep(set);
  const Rocch hull = rocch(set);
  profile.eer = hull.eer;
  std::optional<EqualRiskPoint> equal_risk;
  if (!(cmiss == 1.0 && cfa == 1.0)) equal_risk = equal_risk_point(hull, cmiss, cfa);

  double peak = -kInf;
  for (const auto& op : ops) {
    const double m = sweep.minimize(op.prior(), cmiss, cfa).risk;
    profile.min_risk.push_back(m);
    profile.bound.push_back(trapezium_bound(op, hull, equal_risk));
    if (m > peak) {
      peak = m;
      profile.pi_star = op.prior();
    }
  }
  return profile;
}

}  // namespace bayeserr
