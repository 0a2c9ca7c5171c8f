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

#include <iosfwd>
#include <string>

#include "bayeserr/bayes_decisions.hpp"
#include "bayeserr/direct_thresholding.hpp"
#include "bayeserr/error_curves.hpp"

namespace bayeserr {

// Text outputs. Every number is printed with 9 significant digits so outputs
// diff cleanly across builds.

std::string format_number(double value);

/// `threshold,pmiss,pfa`
void write_roc_csv(std::ostream& out, const StepRoc& roc);

/// `probit_pfa,probit_pmiss`
void write_det_csv(std::ostream& out, const std::vector<DetPoint>& points);

/// `logit_prior,prior,actual_risk,min_risk,bound`; actual_risk is left empty
/// when the profile has none.
void write_profile_csv(std::ostream& out, const BayesErrorProfile& profile);

/// Inverse of write_profile_csv for the per-prior columns. Summary scalars
/// (eer, pi_star, costs) are not stored in the CSV and come back defaulted.
/// Throws ParseError.
BayesErrorProfile read_profile_csv(std::istream& in);

/// `threshold,cal_pmiss,cal_pfa,test_pmiss,test_pfa,test_risk`, test columns
/// empty until the threshold has been applied.
void write_threshold_report_csv(std::ostream& out, const ThresholdReport& report,
                                bool header = true);

/// Risk-versus-prior chart: logit prior on x, log10 risk on y, floored at
/// kSvgRiskFloor. Draws whichever of actual/min/bound are non-empty.
/// Output is a pure function of the profile. Throws InvalidArgument for
/// fewer than two grid points.
inline constexpr double kSvgRiskFloor = 1e-6;
std::string render_bep_svg(const BayesErrorProfile& profile);

}  // namespace bayeserr
