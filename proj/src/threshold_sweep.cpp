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

#include "threshold_sweep.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace bayeserr::detail {

ThresholdSweep::ThresholdSweep(const ScoreSet& set)
    : n_tar_(set.num_targets()), n_non_(set.num_nontargets()) {
  std::vector<double> tar(set.targets().begin(), set.targets().end());
  std::vector<double> non(set.nontargets().begin(), set.nontargets().end());
  std::sort(tar.begin(), tar.end());
  std::sort(non.begin(), non.end());

  distinct_.reserve(tar.size() + non.size());
  std::merge(tar.begin(), tar.end(), non.begin(), non.end(),
             std::back_inserter(distinct_));
  distinct_.erase(std::unique(distinct_.begin(), distinct_.end()), distinct_.end());

  tar_below_.reserve(distinct_.size() + 1);
  non_below_.reserve(distinct_.size() + 1);
  std::size_t t = 0, n = 0;
  for (double value : distinct_) {
    while (t < tar.size() && tar[t] < value) ++t;
    while (n < non.size() && non[n] < value) ++n;
    tar_below_.push_back(t);
    non_below_.push_back(n);
  }
  tar_below_.push_back(n_tar_);
  non_below_.push_back(n_non_);
}

double ThresholdSweep::representative(std::size_t i) const noexcept {
  constexpr double kInf = std::numeric_limits<double>::infinity();
  if (i == 0) return -kInf;
  if (i == distinct_.size()) return kInf;
  const double lo = distinct_[i - 1];
  const double hi = distinct_[i];
  if (!std::isfinite(lo) || !std::isfinite(hi)) return hi;
  const double mid = 0.5 * lo + 0.5 * hi;
  // Adjacent doubles: the midpoint can round onto the lower score.
  return mid > lo ? mid : hi;
}

RiskAtThreshold ThresholdSweep::minimize(double prior, double cmiss,
                                         double cfa) const {
  RiskAtThreshold best;
  best.risk = std::numeric_limits<double>::infinity();
  std::size_t best_index = 0;
  for (std::size_t i = 0; i < num_candidates(); ++i) {
    const double pm = pmiss(i);
    const double pf = pfa(i);
    const double risk = weighted_risk(prior, cmiss, cfa, pm, pf);
    if (risk < best.risk) {
      best.risk = risk;
      best.pmiss = pm;
      best.pfa = pf;
      best_index = i;
    }
  }
  best.threshold = representative(best_index);
  return best;
}

}  // namespace bayeserr::detail
