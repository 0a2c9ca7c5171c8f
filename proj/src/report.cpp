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

#include "bayeserr/report.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <string_view>
#include <vector>

#include "bayeserr/error.hpp"

namespace bayeserr {

namespace {

std::vector<std::string_view> split_csv(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    if (comma == std::string_view::npos) {
      fields.push_back(line.substr(start));
      return fields;
    }
    fields.push_back(line.substr(start, comma - start));
    start = comma + 1;
  }
}

double parse_field(std::string_view text, std::size_t line_no) {
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size())
    throw ParseError(line_no, "bad number `" + std::string(text) + "`");
  return value;
}

std::string fixed2(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

// Plot geometry.
constexpr double kWidth = 640.0;
constexpr double kHeight = 420.0;
constexpr double kLeft = 70.0;
constexpr double kRight = 20.0;
constexpr double kTop = 20.0;
constexpr double kBottom = 50.0;

}  // namespace

std::string format_number(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.9g", value);
  return buf;
}

void write_roc_csv(std::ostream& out, const StepRoc& roc) {
  out << "threshold,pmiss,pfa\n";
  for (std::size_t i = 0; i < roc.thresholds.size(); ++i)
    out << format_number(roc.thresholds[i]) << ',' << format_number(roc.pmiss[i])
        << ',' << format_number(roc.pfa[i]) << '\n';
}

void write_det_csv(std::ostream& out, const std::vector<DetPoint>& points) {
  out << "probit_pfa,probit_pmiss\n";
  for (const auto& p : points)
    out << format_number(p.probit_pfa) << ',' << format_number(p.probit_pmiss) << '\n';
}

void write_profile_csv(std::ostream& out, const BayesErrorProfile& profile) {
  out << "logit_prior,prior,actual_risk,min_risk,bound\n";
  for (std::size_t i = 0; i < profile.logit_prior.size(); ++i) {
    out << format_number(profile.logit_prior[i]) << ','
        << format_number(profile.prior[i]) << ',';
    if (profile.has_actual()) out << format_number(profile.actual_risk[i]);
    out << ',' << format_number(profile.min_risk[i]) << ','
        << format_number(profile.bound[i]) << '\n';
  }
}

BayesErrorProfile read_profile_csv(std::istream& in) {
  BayesErrorProfile profile;
  std::string line;
  std::size_t line_no = 0;
  bool any_actual = false, any_missing_actual = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line_no == 1) {
      if (line != "logit_prior,prior,actual_risk,min_risk,bound")
        throw ParseError(1, "unexpected profile CSV header");
      continue;
    }
    if (line.empty()) continue;
    const auto fields = split_csv(line);
    if (fields.size() != 5) throw ParseError(line_no, "expected 5 columns");
    profile.logit_prior.push_back(parse_field(fields[0], line_no));
    profile.prior.push_back(parse_field(fields[1], line_no));
    if (fields[2].empty()) {
      any_missing_actual = true;
    } else {
      any_actual = true;
      profile.actual_risk.push_back(parse_field(fields[2], line_no));
    }
    profile.min_risk.push_back(parse_field(fields[3], line_no));
    profile.bound.push_back(parse_field(fields[4], line_no));
  }
  if (line_no == 0) throw ParseError(0, "empty profile CSV");
  if (any_actual && any_missing_actual)
    throw ParseError(0, "actual_risk column is only partly filled");
  return profile;
}

void write_threshold_report_csv(std::ostream& out, const ThresholdReport& report,
                                bool header) {
  if (header) out << "threshold,cal_pmiss,cal_pfa,test_pmiss,test_pfa,test_risk\n";
  out << format_number(report.threshold) << ',' << format_number(report.cal_pmiss)
      << ',' << format_number(report.cal_pfa) << ',';
  if (report.test) {
    out << format_number(report.test->pmiss) << ',' << format_number(report.test->pfa)
        << ',' << format_number(report.test->risk);
  } else {
    out << ",,";
  }
  out << '\n';
}

std::string render_bep_svg(const BayesErrorProfile& profile) {
  const auto& xs = profile.logit_prior;
  if (xs.size() < 2) throw InvalidArgument("chart needs at least two grid points");

  struct Series {
    const std::vector<double>* values;
    const char* label;
    const char* colour;
    const char* dash;
  };
  const Series all_series[] = {
      {&profile.bound, "trapezium bound", "#000000", "6,4"},
      {&profile.min_risk, "minimum risk", "#1f5fbf", ""},
      {&profile.actual_risk, "actual risk", "#c0392b", ""},
  };

  const double floor_exp = std::log10(kSvgRiskFloor);
  double top = 0.0;
  std::size_t clamped = 0;
  for (const auto& s : all_series)
    for (double v : *s.values) {
      if (v > 0.0 && std::isfinite(v)) top = std::max(top, std::ceil(std::log10(v)));
      if (!(v >= kSvgRiskFloor)) ++clamped;
    }

  const double x_lo = xs.front();
  const double x_hi = xs.back() > x_lo ? xs.back() : x_lo + 1.0;
  const double plot_w = kWidth - kLeft - kRight;
  const double plot_h = kHeight - kTop - kBottom;
  auto px = [&](double x) { return kLeft + (x - x_lo) / (x_hi - x_lo) * plot_w; };
  auto py = [&](double v) {
    const double e = (v >= kSvgRiskFloor && std::isfinite(v)) ? std::log10(v)
                     : std::isinf(v) && v > 0           ? top
                                                         : floor_exp;
    return kTop + (top - std::min(e, top)) / (top - floor_exp) * plot_h;
  };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth
      << "\" height=\"" << kHeight << "\" viewBox=\"0 0 " << kWidth << ' ' << kHeight
      << "\" font-family=\"sans-serif\" font-size=\"11\">\n";
  svg << "<rect x=\"0\" y=\"0\" width=\"" << kWidth << "\" height=\"" << kHeight
      << "\" fill=\"#ffffff\"/>\n";

  // Decade grid on y, integer logits on x.
  for (int e = static_cast<int>(floor_exp); e <= static_cast<int>(top); ++e) {
    const double y = py(std::pow(10.0, e));
    svg << "<line x1=\"" << fixed2(kLeft) << "\" y1=\"" << fixed2(y) << "\" x2=\""
        << fixed2(kLeft + plot_w) << "\" y2=\"" << fixed2(y)
        << "\" stroke=\"#dddddd\"/>\n";
    svg << "<text x=\"" << fixed2(kLeft - 6) << "\" y=\"" << fixed2(y + 4)
        << "\" text-anchor=\"end\">1e" << e << "</text>\n";
  }
  const int tick_step = (x_hi - x_lo) > 10.0 ? 2 : 1;
  for (int t = static_cast<int>(std::ceil(x_lo)); t <= static_cast<int>(std::floor(x_hi)); ++t) {
    if (t % tick_step != 0) continue;
    const double x = px(t);
    svg << "<line x1=\"" << fixed2(x) << "\" y1=\"" << fixed2(kTop) << "\" x2=\""
        << fixed2(x) << "\" y2=\"" << fixed2(kTop + plot_h) << "\" stroke=\"#eeeeee\"/>\n";
    svg << "<text x=\"" << fixed2(x) << "\" y=\"" << fixed2(kTop + plot_h + 16)
        << "\" text-anchor=\"middle\">" << t << "</text>\n";
  }
  svg << "<rect x=\"" << fixed2(kLeft) << "\" y=\"" << fixed2(kTop) << "\" width=\""
      << fixed2(plot_w) << "\" height=\"" << fixed2(plot_h)
      << "\" fill=\"none\" stroke=\"#000000\"/>\n";
  svg << "<text x=\"" << fixed2(kLeft + plot_w / 2) << "\" y=\"" << fixed2(kHeight - 12)
      << "\" text-anchor=\"middle\">logit prior</text>\n";
  svg << "<text x=\"16\" y=\"" << fixed2(kTop + plot_h / 2)
      << "\" text-anchor=\"middle\" transform=\"rotate(-90 16 " << fixed2(kTop + plot_h / 2)
      << ")\">risk (log scale)</text>\n";

  int legend_row = 0;
  for (const auto& s : all_series) {
    if (s.values->empty()) continue;
    if (s.values->size() != xs.size())
      throw InvalidArgument(std::string(s.label) + " length does not match the grid");
    svg << "<polyline fill=\"none\" stroke=\"" << s.colour << "\" stroke-width=\"1.5\"";
    if (*s.dash) svg << " stroke-dasharray=\"" << s.dash << "\"";
    svg << " points=\"";
    for (std::size_t i = 0; i < xs.size(); ++i) {
      if (i) svg << ' ';
      svg << fixed2(px(xs[i])) << ',' << fixed2(py((*s.values)[i]));
    }
    svg << "\"/>\n";

    const double ly = kTop + 14 + 14 * legend_row++;
    svg << "<line x1=\"" << fixed2(kLeft + 10) << "\" y1=\"" << fixed2(ly - 4) << "\" x2=\""
        << fixed2(kLeft + 34) << "\" y2=\"" << fixed2(ly - 4) << "\" stroke=\"" << s.colour
        << "\" stroke-width=\"1.5\"";
    if (*s.dash) svg << " stroke-dasharray=\"" << s.dash << "\"";
    svg << "/>\n<text x=\"" << fixed2(kLeft + 40) << "\" y=\"" << fixed2(ly) << "\">"
        << s.label << "</text>\n";
  }
  const double ly = kTop + 14 + 14 * legend_row;
  svg << "<text x=\"" << fixed2(kLeft + 10) << "\" y=\"" << fixed2(ly) << "\">values below "
      << format_number(kSvgRiskFloor) << " drawn at " << format_number(kSvgRiskFloor) << " ("
      << clamped << " clamped)</text>\n";
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace bayeserr
