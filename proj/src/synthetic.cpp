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

#include "bayeserr/synthetic.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "bayeserr/error.hpp"
#include "bayeserr/error_curves.hpp"

namespace bayeserr {

namespace {

constexpr std::uint64_t kTargetStream = 0x7461726765740001ULL;
constexpr std::uint64_t kNonTargetStream = 0x6e6f6e7461720002ULL;

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

class NormalStream {
 public:
  NormalStream(std::uint64_t seed, std::uint64_t tag) : engine_(splitmix64(seed ^ tag)) {}

  double next() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    // u1 in (0, 1] keeps the log finite.
    const double u1 = 1.0 - uniform();
    const double u2 = uniform();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    spare_ = radius * std::sin(angle);
    has_spare_ = true;
    return radius * std::cos(angle);
  }

 private:
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

std::vector<double> draw(std::size_t n, double mean, double sd, std::uint64_t seed,
                         std::uint64_t tag) {
  NormalStream stream(seed, tag);
  std::vector<double> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(mean + sd * stream.next());
  return out;
}

double log_normal_density(double x, double mean, double variance) {
  const double d = x - mean;
  return -0.5 * std::log(2.0 * std::numbers::pi * variance) - d * d / (2.0 * variance);
}

}  // namespace

GaussianLlrModel::GaussianLlrModel(double variance) : variance_(variance) {
  if (!(variance > 0.0) || !std::isfinite(variance))
    throw InvalidArgument("model variance must be positive and finite");
}

double GaussianLlrModel::analytic_eer() const {
  return normal_cdf(-0.5 * std::sqrt(variance_));
}

double GaussianLlrModel::log_density_target(double score) const noexcept {
  return log_normal_density(score, target_mean(), variance_);
}

double GaussianLlrModel::log_density_nontarget(double score) const noexcept {
  return log_normal_density(score, nontarget_mean(), variance_);
}

GaussianLlrModel model_from_eer(double target_eer) {
  if (!(target_eer > 0.0 && target_eer < 0.5))
    throw InvalidArgument("target EER must lie strictly between 0 and 0.5");
  const double root_v = -2.0 * probit(target_eer);
  return GaussianLlrModel(root_v * root_v);
}

double analytic_llr(const GaussianLlrModel&, double score) { return score; }

ScoreSet sample_scores(const GaussianLlrModel& model, std::size_t n_target,
                       std::size_t n_nontarget, std::uint64_t seed) {
  if (n_target == 0 || n_nontarget == 0)
    throw InvalidArgument("sample counts must be at least 1");
  const double sd = std::sqrt(model.variance());
  return ScoreSet(draw(n_target, model.target_mean(), sd, seed, kTargetStream),
                  draw(n_nontarget, model.nontarget_mean(), sd, seed, kNonTargetStream),
                  true);
}

ScoreSet miscalibrate(const ScoreSet& set, double scale, double offset) {
  if (!(scale > 0.0) || !std::isfinite(scale))
    throw InvalidArgument("miscalibration scale must be positive and finite");
  if (!std::isfinite(offset)) throw InvalidArgument("miscalibration offset must be finite");
  auto map = [&](std::span<const double> scores) {
    std::vector<double> out;
    out.reserve(scores.size());
    for (double s : scores) out.push_back(scale * s + offset);
    return out;
  };
  return ScoreSet(map(set.targets()), map(set.nontargets()), set.calibrated());
}

}  // namespace bayeserr
