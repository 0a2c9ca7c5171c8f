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

#include <doctest.h>

#include <cmath>
#include <random>

#include "bayeserr/bayes_decisions.hpp"
#include "bayeserr/error.hpp"
#include "bayeserr/error_curves.hpp"
#include "bayeserr/synthetic.hpp"

using namespace bayeserr;

TEST_CASE("model_from_eer") {
  // Reference values from scipy.stats.norm.ppf.
  const auto m = model_from_eer(0.1);
  CHECK(std::sqrt(m.variance()) == doctest::Approx(2.5631031310892007).epsilon(1e-12));
  CHECK(m.variance() == doctest::Approx(6.569497660599264).epsilon(1e-12));
  CHECK(m.target_mean() == doctest::Approx(3.284748830299632).epsilon(1e-12));
  CHECK(m.nontarget_mean() == -m.target_mean());

  const auto m5 = model_from_eer(0.05);
  CHECK(m5.variance() == doctest::Approx(10.822173816381651).epsilon(1e-12));
  CHECK(m5.target_mean() == doctest::Approx(5.411086908190826).epsilon(1e-12));

  for (double eer : {1e-6, 0.001, 0.05, 0.1, 0.25, 0.4999})
    CHECK(std::abs(model_from_eer(eer).analytic_eer() - eer) <= 1e-12);

  CHECK_THROWS_AS(model_from_eer(0.5), InvalidArgument);
  CHECK_THROWS_AS(model_from_eer(0.0), InvalidArgument);
  CHECK_THROWS_AS(model_from_eer(-0.1), InvalidArgument);
  CHECK_THROWS_AS(GaussianLlrModel(0.0), InvalidArgument);
}

TEST_CASE("the model's scores are their own log-likelihood-ratios") {
  const GaussianLlrModel m(6.5695);
  CHECK(analytic_llr(m, 1.7) == 1.7);
  CHECK(analytic_llr(m, 0.0) == 0.0);
  CHECK(std::abs(m.log_density_target(2.5) - m.log_density_nontarget(2.5) - 2.5) <= 1e-12);

  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> var(0.05, 40.0), score(-20.0, 20.0);
  for (int i = 0; i < 1000; ++i) {
    const GaussianLlrModel model(var(rng));
    const double s = score(rng);
    const double diff = model.log_density_target(s) - model.log_density_nontarget(s);
    CHECK(std::abs(diff - s) <= 1e-12 * std::max(1.0, s * s / model.variance()));
  }
}

TEST_CASE("sample_scores is deterministic and sized") {
  const auto m = model_from_eer(0.1);
  const auto a = sample_scores(m, 3, 5, 42);
  const auto b = sample_scores(m, 3, 5, 42);
  CHECK(a.num_targets() == 3);
  CHECK(a.num_nontargets() == 5);
  CHECK(a.calibrated());
  CHECK(std::equal(a.targets().begin(), a.targets().end(), b.targets().begin()));
  CHECK(std::equal(a.nontargets().begin(), a.nontargets().end(), b.nontargets().begin()));
  const auto c = sample_scores(m, 3, 5, 43);
  CHECK(c.targets()[0] != a.targets()[0]);
  CHECK_THROWS_AS(sample_scores(m, 0, 5, 1), InvalidArgument);
  CHECK_THROWS_AS(sample_scores(m, 5, 0, 1), InvalidArgument);
}

TEST_CASE("sampler output matches an independent reimplementation") {
  // Python reference: mt19937_64 seeded with splitmix64(seed ^ tag), top 53
  // bits as uniforms, Box-Muller with both outputs.
  const auto set = sample_scores(model_from_eer(0.1), 3, 3, 42);
  const double tar[] = {0.8074320853026862, 0.6459227302498642, 5.011754554483501};
  const double non[] = {-1.9360300817444906, 0.6145725973636678, -3.2786989465487304};
  for (int i = 0; i < 3; ++i) {
    CHECK(set.targets()[i] == doctest::Approx(tar[i]).epsilon(1e-12));
    CHECK(set.nontargets()[i] == doctest::Approx(non[i]).epsilon(1e-12));
  }
}

TEST_CASE("large-sample moments") {
  const auto m = model_from_eer(0.1);
  const auto set = sample_scores(m, 1000000, 1, 2024);
  double sum = 0;
  for (double s : set.targets()) sum += s;
  const double mean = sum / 1e6;
  CHECK(std::abs(mean - m.target_mean()) <= 4.0 * std::sqrt(m.variance() / 1e6));
}

TEST_CASE("sample ROCCH-EER matches the analytic EER") {
  const auto m = model_from_eer(0.1);
  const auto set = sample_scores(m, 100000, 100000, 7);
  const double e = m.analytic_eer();
  CHECK(std::abs(rocch(set).eer - e) <= 3.0 * std::sqrt(e * (1 - e) / 1e5));
}

TEST_CASE("miscalibrate") {
  const auto m = model_from_eer(0.1);
  const auto set = sample_scores(m, 100000, 100000, 9);
  const auto same = miscalibrate(set, 1.0, 0.0);
  CHECK(std::equal(same.targets().begin(), same.targets().end(), set.targets().begin()));
  CHECK(same.calibrated());

  const auto shifted = miscalibrate(set, 1.0, 3.0);
  for (double p : {0.01, 0.3, 0.5, 0.9}) {
    const OperatingPoint op(p);
    CHECK(min_risk(shifted, op).risk == min_risk(set, op).risk);
  }
  const OperatingPoint even(0.5);
  CHECK(actual_risk(shifted, even).risk > actual_risk(set, even).risk);

  CHECK_THROWS_AS(miscalibrate(set, 0.0, 1.0), InvalidArgument);
  CHECK_THROWS_AS(miscalibrate(set, -1.0, 1.0), InvalidArgument);
}
