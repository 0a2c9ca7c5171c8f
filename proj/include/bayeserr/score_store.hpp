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
#include <iosfwd>
#include <span>
#include <vector>

namespace bayeserr {

enum class TrialLabel { kTarget, kNonTarget };

/// Target (H1) and non-target (H2) scores of one evaluation.
///
/// When `calibrated()` is set, scores are natural-log likelihood ratios.
/// Both classes are non-empty and no score is NaN. Ingestion additionally
/// rejects infinities, but derived sets (PAV log-LLRs) may carry +/-inf.
/// Duplicates are kept: each trial is an impulse in the empirical
/// distribution.
class ScoreSet {
 public:
  ScoreSet(std::vector<double> targets, std::vector<double> nontargets,
           bool calibrated);

  std::span<const double> targets() const noexcept { return targets_; }
  std::span<const double> nontargets() const noexcept { return nontargets_; }
  bool calibrated() const noexcept { return calibrated_; }

  std::size_t num_targets() const noexcept { return targets_.size(); }
  std::size_t num_nontargets() const noexcept { return nontargets_.size(); }

 private:
  std::vector<double> targets_;
  std::vector<double> nontargets_;
  bool calibrated_;
};

struct ClassSummary {
  std::size_t count = 0;
  double min = 0.0;
  double max = 0.0;
  double mean = 0.0;
};

struct ScoreSummary {
  ClassSummary target;
  ClassSummary nontarget;
  /// N1 / (N1 + N2).
  double empirical_prior = 0.0;
};

/// Reads `label score` lines. Labels are `tar`/`non` in any case, or `1`/`0`.
/// Blank lines and lines whose first non-blank character is `#` are skipped.
/// Throws ParseError naming the offending line.
ScoreSet parse_score_file(std::istream& in, bool calibrated);

/// Reads one bare score per line (same comment/blank rules). Used for the
/// separate target/non-target file convenience.
std::vector<double> parse_score_list(std::istream& in);

/// Writes the `label score` format with round-trip precision.
void write_score_file(std::ostream& out, const ScoreSet& set);

ScoreSummary summarize(const ScoreSet& set);

}  // namespace bayeserr
