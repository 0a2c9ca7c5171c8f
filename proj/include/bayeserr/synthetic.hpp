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
#include <string_view>

#include "bayeserr/score_store.hpp"

namespace bayeserr {

/// Target scores ~ N(+v/2, v), non-target scores ~ N(-v/2, v). With the mean
/// separation equal to the variance, log p(s|H1) - log p(s|H2) = s, so the
/// scores are perfectly calibrated log-LLRs.
class GaussianLlrModel {
 public:
  /// Throws InvalidArgument unless variance is positive and finite.
  explicit GaussianLlrModel(double variance);

  double variance() const noexcept { return variance_; }
  double target_mean() const noexcept { return 0.5 * variance_; }
  double nontarget_mean() const noexcept { return -0.5 * variance_; }

  /// Phi(-sqrt(v) / 2).
  double analytic_eer() const;

  double log_density_target(double score) const noexcept;
  double log_density_nontarget(double score) const noexcept;

 private:
  double variance_;
};

/// Model whose analytic EER is `target_eer`; throws unless 0 < eer < 0.5.
GaussianLlrModel model_from_eer(double target_eer);

/// Log-LLR of a score under the model. The construction makes this the
/// identity; the log densities above expose it for checking.
double analytic_llr(const GaussianLlrModel& model, double score);

/// Identifier of the sampling algorithm, recorded next to simulated data.
/// Each class draws from its own mt19937_64 stream seeded with
/// splitmix64(seed ^ stream tag); uniforms take the top 53 bits; normals use
/// the Box-Muller transform, both outputs consumed in order.
inline constexpr std::string_view kSamplerId = "mt19937_64+splitmix64-streams+box-muller/v1";

/// Deterministic in (model, counts, seed). Result is flagged calibrated.
/// Throws InvalidArgument for a zero count.
ScoreSet sample_scores(const GaussianLlrModel& model, std::size_t n_target,
                       std::size_t n_nontarget, std::uint64_t seed);

/// Maps every score to scale * s + offset, keeping labels and the calibrated
/// flag. Throws InvalidArgument unless scale > 0 and both are finite.
ScoreSet miscalibrate(const ScoreSet& set, double scale, double offset);

}  // namespace bayeserr
