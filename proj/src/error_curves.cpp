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

#include "bayeserr/error_curves.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <utility>

#include <boost/math/distributions/normal.hpp>

#include "bayeserr/error.hpp"

namespace bayeserr {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

enum class Tag : std::uint8_t { kThreshold = 0, kTarget = 1, kNonTarget = 2 };

struct SortItem {
  double value;
  Tag tag;
  std::size_t index;
};

struct LabelledScore {
  double score;
  bool target;
};

std::vector<LabelledScore> sorted_trials(const ScoreSet& set) {
  std::vector<LabelledScore> trials;
  trials.reserve(set.num_targets() + set.num_nontargets());
  for (double s : set.targets()) trials.push_back({s, true});
  for (double s : set.nontargets()) trials.push_back({s, false});
  std::sort(trials.begin(), trials.end(),
            [](const LabelledScore& a, const LabelledScore& b) {
              return a.score < b.score;
            });
  return trials;
}

// a/b >= c/d for counts, without rounding.
bool ratio_ge(std::uint64_t a, std::uint64_t b, std::uint64_t c, std::uint64_t d) {
  return a * d >= c * b;
}

}  // namespace

ErrorRates empirical_error_rates(const ScoreSet& set,
                                 std::span<const double> thresholds) {
  ErrorRates rates;
  if (thresholds.empty()) return rates;

  std::vector<SortItem> items;
  items.reserve(thresholds.size() + set.num_targets() + set.num_nontargets());
  for (std::size_t i = 0; i < thresholds.size(); ++i) {
    if (std::isnan(thresholds[i])) throw InvalidArgument("NaN threshold");
    items.push_back({thresholds[i], Tag::kThreshold, i});
  }
  for (double s : set.targets()) items.push_back({s, Tag::kTarget, 0});
  for (double s : set.nontargets()) items.push_back({s, Tag::kNonTarget, 0});

  // Thresholds sort ahead of equal scores, so a score equal to the threshold
  // is not counted as below it (accepted).
  std::sort(items.begin(), items.end(), [](const SortItem& a, const SortItem& b) {
    if (a.value != b.value) return a.value < b.value;
    return a.tag < b.tag;
  });

  const std::size_t n_tar = set.num_targets();
  const std::size_t n_non = set.num_nontargets();
  rates.pmiss.assign(thresholds.size(), 0.0);
  rates.pfa.assign(thresholds.size(), 0.0);
  std::size_t tar_below = 0, non_below = 0;
  for (const auto& item : items) {
    switch (item.tag) {
      case Tag::kTarget:
        ++tar_below;
        break;
      case Tag::kNonTarget:
        ++non_below;
        break;
      case Tag::kThreshold:
        rates.pmiss[item.index] =
            static_cast<double>(tar_below) / static_cast<double>(n_tar);
        rates.pfa[item.index] = static_cast<double>(n_non - non_below) /
                                static_cast<double>(n_non);
        break;
    }
  }
  return rates;
}

StepRoc roc_points(const ScoreSet& set) {
  std::vector<double> distinct;
  distinct.reserve(set.num_targets() + set.num_nontargets());
  for (double s : set.targets())
    if (std::isfinite(s)) distinct.push_back(s);
  for (double s : set.nontargets())
    if (std::isfinite(s)) distinct.push_back(s);
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());

  StepRoc roc;
  roc.thresholds.reserve(distinct.size() + 2);
  roc.thresholds.push_back(-kInf);
  roc.thresholds.insert(roc.thresholds.end(), distinct.begin(), distinct.end());
  roc.thresholds.push_back(kInf);

  auto rates = empirical_error_rates(set, roc.thresholds);
  roc.pmiss = std::move(rates.pmiss);
  roc.pfa = std::move(rates.pfa);
  // Sentinels are accept-all and reject-all even when infinite scores exist.
  roc.pmiss.front() = 0.0;
  roc.pfa.front() = 1.0;
  roc.pmiss.back() = 1.0;
  roc.pfa.back() = 0.0;
  return roc;
}

CalibrationMap::CalibrationMap(std::vector<CalibrationBlock> blocks,
                               std::size_t num_targets,
                               std::size_t num_nontargets)
    : blocks_(std::move(blocks)),
      num_targets_(num_targets),
      num_nontargets_(num_nontargets) {
  if (blocks_.empty() || num_targets_ == 0 || num_nontargets_ == 0)
    throw InvalidArgument("calibration map needs trials of both classes");
}

double CalibrationMap::empirical_prior() const noexcept {
  return static_cast<double>(num_targets_) /
         static_cast<double>(num_targets_ + num_nontargets_);
}

double CalibrationMap::block_llr(std::size_t block) const {
  const auto& b = blocks_.at(block);
  if (b.num_targets == 0) return -kInf;
  if (b.num_nontargets == 0) return kInf;
  const double block_odds = static_cast<double>(b.num_targets) /
                            static_cast<double>(b.num_nontargets);
  const double prior_odds = static_cast<double>(num_targets_) /
                            static_cast<double>(num_nontargets_);
  return std::log(block_odds) - std::log(prior_odds);
}

std::size_t CalibrationMap::block_index(double score) const {
  auto it = std::upper_bound(
      blocks_.begin(), blocks_.end(), score,
      [](double s, const CalibrationBlock& b) { return s < b.score_lo; });
  if (it == blocks_.begin()) return 0;
  return static_cast<std::size_t>(std::distance(blocks_.begin(), it)) - 1;
}

double CalibrationMap::posterior_of(double score) const {
  return blocks_[block_index(score)].posterior();
}

double CalibrationMap::llr_of(double score) const {
  return block_llr(block_index(score));
}

CalibrationMap pav_calibrate(const ScoreSet& set) {
  const auto trials = sorted_trials(set);

  std::vector<CalibrationBlock> blocks;
  std::size_t i = 0;
  while (i < trials.size()) {
    // Tied scores enter as one block.
    CalibrationBlock cur{trials[i].score, trials[i].score, 0, 0};
    while (i < trials.size() && trials[i].score == cur.score_lo) {
      (trials[i].target ? cur.num_targets : cur.num_nontargets) += 1;
      ++i;
    }
    // Pool while the previous block's posterior is not strictly below ours.
    while (!blocks.empty() &&
           ratio_ge(blocks.back().num_targets, blocks.back().size(),
                    cur.num_targets, cur.size())) {
      const auto& prev = blocks.back();
      cur.score_lo = prev.score_lo;
      cur.num_targets += prev.num_targets;
      cur.num_nontargets += prev.num_nontargets;
      blocks.pop_back();
    }
    blocks.push_back(cur);
  }
  return CalibrationMap(std::move(blocks), set.num_targets(),
                        set.num_nontargets());
}

ScoreSet pav_recalibrate(const ScoreSet& set) {
  const auto map = pav_calibrate(set);
  auto transform = [&](std::span<const double> scores) {
    std::vector<double> out;
    out.reserve(scores.size());
    for (double s : scores) out.push_back(map.llr_of(s));
    return out;
  };
  return ScoreSet(transform(set.targets()), transform(set.nontargets()), true);
}

Rocch rocch(const CalibrationMap& map) {
  const auto blocks = map.blocks();
  std::uint64_t n_tar = 0, n_non = 0;
  for (const auto& b : blocks) {
    n_tar += b.num_targets;
    n_non += b.num_nontargets;
  }

  // Vertex k accepts blocks k..B-1: misses are targets in blocks < k,
  // false accepts are non-targets in blocks >= k.
  std::vector<std::uint64_t> misses(blocks.size() + 1, 0);
  std::vector<std::uint64_t> false_accepts(blocks.size() + 1, 0);
  false_accepts[0] = n_non;
  for (std::size_t k = 0; k < blocks.size(); ++k) {
    misses[k + 1] = misses[k] + blocks[k].num_targets;
    false_accepts[k + 1] = false_accepts[k] - blocks[k].num_nontargets;
  }

  Rocch hull;
  hull.vertices.reserve(blocks.size() + 1);
  for (std::size_t k = 0; k <= blocks.size(); ++k) {
    hull.vertices.push_back(
        {static_cast<double>(false_accepts[k]) / static_cast<double>(n_non),
         static_cast<double>(misses[k]) / static_cast<double>(n_tar)});
  }
  hull.block_llrs.reserve(blocks.size());
  for (std::size_t k = 0; k < blocks.size(); ++k)
    hull.block_llrs.push_back(map.block_llr(k));

  // First vertex with pmiss >= pfa; the crossing is at it or on the segment
  // leading to it. Intersection with pmiss = pfa in integer arithmetic so the
  // result is a single correctly rounded division.
  std::size_t k = 0;
  while (!ratio_ge(misses[k], n_tar, false_accepts[k], n_non)) ++k;
  if (misses[k] * n_non == false_accepts[k] * n_tar) {
    hull.eer = hull.vertices[k].pmiss;
  } else {
    const auto a0 = static_cast<std::int64_t>(misses[k - 1]);
    const auto a1 = static_cast<std::int64_t>(misses[k]);
    const auto b0 = static_cast<std::int64_t>(false_accepts[k - 1]);
    const auto b1 = static_cast<std::int64_t>(false_accepts[k]);
    const auto nt = static_cast<std::int64_t>(n_tar);
    const auto nn = static_cast<std::int64_t>(n_non);
    const std::int64_t num = a0 * b1 - b0 * a1;
    const std::int64_t den = (a0 - a1) * nn + (b1 - b0) * nt;
    hull.eer = static_cast<double>(num) / static_cast<double>(den);
  }
  return hull;
}

Rocch rocch(const ScoreSet& set) { return rocch(pav_calibrate(set)); }

double probit(double p) {
  if (p <= 0.0) return -kInf;
  if (p >= 1.0) return kInf;
  return boost::math::quantile(boost::math::normal_distribution<double>(), p);
}

double normal_cdf(double x) {
  if (std::isinf(x)) return x > 0 ? 1.0 : 0.0;
  return boost::math::cdf(boost::math::normal_distribution<double>(), x);
}

std::vector<DetPoint> det_points(const ScoreSet& set) {
  const auto roc = roc_points(set);
  std::vector<DetPoint> points;
  points.reserve(roc.pfa.size());
  for (std::size_t i = 0; i < roc.pfa.size(); ++i) {
    DetPoint pt;
    auto pin = [&](double p) {
      if (p < kDetMinRate) {
        pt.clamped = true;
        return kDetMinRate;
      }
      if (p > 1.0 - kDetMinRate) {
        pt.clamped = true;
        return 1.0 - kDetMinRate;
      }
      return p;
    };
    pt.probit_pfa = probit(pin(roc.pfa[i]));
    pt.probit_pmiss = probit(pin(roc.pmiss[i]));
    points.push_back(pt);
  }
  return points;
}

}  // namespace bayeserr
