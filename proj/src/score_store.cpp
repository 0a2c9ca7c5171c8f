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

#include "bayeserr/score_store.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include "bayeserr/error.hpp"

namespace bayeserr {

namespace {

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
    if (pos == line.size()) break;
    std::size_t end = pos;
    while (end < line.size() && line[end] != ' ' && line[end] != '\t') ++end;
    fields.push_back(line.substr(pos, end - pos));
    pos = end;
  }
  return fields;
}

bool is_skippable(const std::vector<std::string_view>& fields) {
  return fields.empty() || fields.front().front() == '#';
}

std::optional<double> parse_decimal(std::string_view text) {
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  if (text.empty() || text.front() == '+') return std::nullopt;
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(),
                                   value, std::chars_format::general);
  if (ec != std::errc() || ptr != text.data() + text.size()) return std::nullopt;
  if (!std::isfinite(value)) return std::nullopt;
  return value;
}

std::optional<TrialLabel> parse_label(std::string_view text) {
  std::string lower(text);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "tar" || lower == "1") return TrialLabel::kTarget;
  if (lower == "non" || lower == "0") return TrialLabel::kNonTarget;
  return std::nullopt;
}

// Trailing CR from files written on Windows.
std::string_view chomp(const std::string& line) {
  std::string_view view(line);
  if (!view.empty() && view.back() == '\r') view.remove_suffix(1);
  return view;
}

ClassSummary summarize_class(std::span<const double> scores) {
  ClassSummary s;
  s.count = scores.size();
  auto [lo, hi] = std::minmax_element(scores.begin(), scores.end());
  s.min = *lo;
  s.max = *hi;
  double sum = 0.0;
  for (double x : scores) sum += x;
  s.mean = sum / static_cast<double>(scores.size());
  return s;
}

}  // namespace

ScoreSet::ScoreSet(std::vector<double> targets, std::vector<double> nontargets,
                   bool calibrated)
    : targets_(std::move(targets)),
      nontargets_(std::move(nontargets)),
      calibrated_(calibrated) {
  if (targets_.empty()) throw InvalidArgument("score set has no target trials");
  if (nontargets_.empty())
    throw InvalidArgument("score set has no non-target trials");
  auto has_nan = [](const std::vector<double>& v) {
    return std::any_of(v.begin(), v.end(), [](double x) { return std::isnan(x); });
  };
  if (has_nan(targets_) || has_nan(nontargets_))
    throw InvalidArgument("score set contains NaN");
}

ScoreSet parse_score_file(std::istream& in, bool calibrated) {
  std::vector<double> targets, nontargets;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto fields = split_fields(chomp(line));
    if (is_skippable(fields)) continue;
    if (fields.size() != 2)
      throw ParseError(line_no, "expected 2 fields `label score`, got " +
                                    std::to_string(fields.size()));
    auto label = parse_label(fields[0]);
    if (!label)
      throw ParseError(line_no, "unknown label `" + std::string(fields[0]) +
                                    "` (expected tar/non/1/0)");
    auto score = parse_decimal(fields[1]);
    if (!score)
      throw ParseError(line_no, "unparsable or non-finite score `" +
                                    std::string(fields[1]) + "`");
    (*label == TrialLabel::kTarget ? targets : nontargets).push_back(*score);
  }
  if (targets.empty()) throw ParseError(0, "no target trials in input");
  if (nontargets.empty()) throw ParseError(0, "no non-target trials in input");
  return ScoreSet(std::move(targets), std::move(nontargets), calibrated);
}

std::vector<double> parse_score_list(std::istream& in) {
  std::vector<double> scores;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto fields = split_fields(chomp(line));
    if (is_skippable(fields)) continue;
    if (fields.size() != 1)
      throw ParseError(line_no, "expected a single score, got " +
                                    std::to_string(fields.size()) + " fields");
    auto score = parse_decimal(fields[0]);
    if (!score)
      throw ParseError(line_no, "unparsable or non-finite score `" +
                                    std::string(fields[0]) + "`");
    scores.push_back(*score);
  }
  if (scores.empty()) throw ParseError(0, "no scores in input");
  return scores;
}

void write_score_file(std::ostream& out, const ScoreSet& set) {
  char buf[64];
  auto emit = [&](const char* label, double score) {
    auto res = std::to_chars(buf, buf + sizeof(buf), score);
    out << label << ' ' << std::string_view(buf, res.ptr - buf) << '\n';
  };
  for (double s : set.targets()) emit("tar", s);
  for (double s : set.nontargets()) emit("non", s);
}

ScoreSummary summarize(const ScoreSet& set) {
  ScoreSummary summary;
  summary.target = summarize_class(set.targets());
  summary.nontarget = summarize_class(set.nontargets());
  const double n1 = static_cast<double>(set.num_targets());
  const double n2 = static_cast<double>(set.num_nontargets());
  summary.empirical_prior = n1 / (n1 + n2);
  return summary;
}

}  // namespace bayeserr
