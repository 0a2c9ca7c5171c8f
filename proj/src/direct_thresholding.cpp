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

#include "bayeserr/direct_thresholding.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "bayeserr/error.hpp"
#include "bayeserr/error_curves.hpp"

namespace bayeserr {

ThresholdReport min_dcf_threshold(const ScoreSet& cal, const OperatingPoint& op) {
  const auto best = min_risk(cal, op);
  ThresholdReport report;
  report.threshold = best.threshold;
  report.cal_pmiss = best.pmiss;
  report.cal_pfa = best.pfa;
  return report;
}

double fixed_fa_threshold(std::span<const double> nontarget_scores,
                          double target_rate) {
  if (nontarget_scores.empty())
    throw InvalidArgument("fixed-FA threshold needs non-target scores");
  if (!(target_rate >= 0.0 && target_rate <= 1.0))
    throw InvalidArgument("target false-accept rate must lie in [0, 1]");

  std::vector<double> sorted(nontarget_scores.begin(), nontarget_scores.end());
  std::sort(sorted.begin(), sorted.end());
  const std::size_t n = sorted.size();
  const double dn = static_cast<double>(n);

  // Largest count k of accepted non-targets with k / n <= target_rate.
  auto allowed = static_cast<std::size_t>(std::floor(target_rate * dn));
  allowed = std::min(allowed, n);
  while (allowed < n && static_cast<double>(allowed + 1) / dn <= target_rate) ++allowed;
  while (allowed > 0 && static_cast<double>(allowed) / dn > target_rate) --allowed;

  if (allowed == n) return sorted.front();
  // Cut at sorted[n - allowed]; ties with the score below it would let too
  // many through, so move up to the next distinct value.
  std::size_t cut = n - allowed;
  while (cut < n && sorted[cut] == sorted[cut - 1]) ++cut;
  if (cut == n)
    return std::nextafter(sorted.back(), std::numeric_limits<double>::infinity());
  return sorted[cut];
}

ThresholdReport fixed_fa_report(const ScoreSet& cal, double target_rate) {
  ThresholdReport report;
  report.threshold = fixed_fa_threshold(cal.nontargets(), target_rate);
  const double thresholds[] = {report.threshold};
  const auto rates = empirical_error_rates(cal, thresholds);
  report.cal_pmiss = rates.pmiss[0];
  report.cal_pfa = rates.pfa[0];
  return report;
}

TestOutcome apply_threshold(const ScoreSet& test, double threshold,
                            const OperatingPoint& op) {
  const double thresholds[] = {threshold};
  const auto rates = empirical_error_rates(test, thresholds);
  TestOutcome out;
  out.pmiss = rates.pmiss[0];
  out.pfa = rates.pfa[0];
  out.risk = weighted_risk(op.prior(), op.cmiss(), op.cfa(), out.pmiss, out.pfa);
  return out;
}

ThresholdReport apply_threshold(const ScoreSet& test, ThresholdReport report,
                                const OperatingPoint& op) {
  report.test = apply_threshold(test, report.threshold, op);
  return report;
}

}  // namespace bayeserr
