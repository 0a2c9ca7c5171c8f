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
#include <cstdint>
#include <vector>

#include "bayeserr/bayes_decisions.hpp"
#include "bayeserr/score_store.hpp"

namespace bayeserr::detail {

// Every distinct operating point of a score threshold. Candidate i < D
// accepts scores >= distinct[i]; candidate D rejects everything.
class ThresholdSweep {
 public:
  explicit ThresholdSweep(const ScoreSet& set);

  std::size_t num_candidates() const noexcept { return distinct_.size() + 1; }

  double pmiss(std::size_t i) const noexcept {
    return static_cast<double>(tar_below_[i]) / static_cast<double>(n_tar_);
  }
  double pfa(std::size_t i) const noexcept {
    return static_cast<double>(n_non_ - non_below_[i]) /
           static_cast<double>(n_non_);
  }

  /// Smallest convenient threshold that realizes candidate i.
  double representative(std::size_t i) const noexcept;

  /// First candidate with the lowest weighted risk.
  RiskAtThreshold minimize(double prior, double cmiss, double cfa) const;

 private:
  std::vector<double> distinct_;
  // Trials strictly below the candidate threshold; index D holds the totals.
  std::vector<std::uint64_t> tar_below_;
  std::vector<std::uint64_t> non_below_;
  std::uint64_t n_tar_;
  std::uint64_t n_non_;
};

}  // namespace bayeserr::detail
