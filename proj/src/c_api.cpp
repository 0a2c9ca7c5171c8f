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

#include "bayeserr/bayeserr.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <new>
#include <sstream>
#include <string>
#include <utility>

#include <json.hpp>

#include "bayeserr/bayes_decisions.hpp"
#include "bayeserr/direct_thresholding.hpp"
#include "bayeserr/error.hpp"
#include "bayeserr/error_curves.hpp"
#include "bayeserr/report.hpp"
#include "bayeserr/score_store.hpp"
#include "bayeserr/synthetic.hpp"

struct bayeserr_scores {
  bayeserr::ScoreSet set;
};

struct bayeserr_profile {
  bayeserr::BayesErrorProfile profile;
};

namespace {

thread_local std::string g_last_error;
thread_local std::size_t g_last_line = 0;

class IoError : public bayeserr::Error {
 public:
  using Error::Error;
};

bayeserr_status fail(bayeserr_status status, const char* what, std::size_t line = 0) {
  g_last_error = what;
  g_last_line = line;
  return status;
}

template <class Fn>
bayeserr_status guarded(Fn&& fn) {
  try {
    fn();
    return BAYESERR_OK;
  } catch (const bayeserr::ParseError& e) {
    return fail(BAYESERR_ERR_PARSE, e.what(), e.line());
  } catch (const bayeserr::InvalidArgument& e) {
    return fail(BAYESERR_ERR_INVALID_ARGUMENT, e.what());
  } catch (const bayeserr::NotCalibrated& e) {
    return fail(BAYESERR_ERR_NOT_CALIBRATED, e.what());
  } catch (const IoError& e) {
    return fail(BAYESERR_ERR_IO, e.what());
  } catch (const std::bad_alloc&) {
    return fail(BAYESERR_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(BAYESERR_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(BAYESERR_ERR_INTERNAL, "unknown error");
  }
}

template <class T>
void require(const T* ptr, const char* name) {
  if (!ptr) throw bayeserr::InvalidArgument(std::string(name) + " is null");
}

char* to_c_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

std::ifstream open_input(const char* path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError(std::string("cannot open `") + path + "`");
  return in;
}

bayeserr_scores* wrap(bayeserr::ScoreSet set) {
  return new bayeserr_scores{std::move(set)};
}

void fill_risk(const bayeserr::RiskAtThreshold& r, bayeserr_risk* out) {
  out->risk = r.risk;
  out->threshold = r.threshold;
  out->pmiss = r.pmiss;
  out->pfa = r.pfa;
}

bayeserr::ThresholdReport to_report(const bayeserr_threshold_report& c) {
  bayeserr::ThresholdReport r;
  r.threshold = c.threshold;
  r.cal_pmiss = c.cal_pmiss;
  r.cal_pfa = c.cal_pfa;
  if (c.has_test) r.test = bayeserr::TestOutcome{c.test_pmiss, c.test_pfa, c.test_risk};
  return r;
}

void from_report(const bayeserr::ThresholdReport& r, bayeserr_threshold_report* out) {
  *out = bayeserr_threshold_report{};
  out->threshold = r.threshold;
  out->cal_pmiss = r.cal_pmiss;
  out->cal_pfa = r.cal_pfa;
  if (r.test) {
    out->has_test = 1;
    out->test_pmiss = r.test->pmiss;
    out->test_pfa = r.test->pfa;
    out->test_risk = r.test->risk;
  }
}

}  // namespace

extern "C" {

const char* bayeserr_version(void) { return "1.0.0"; }

const char* bayeserr_last_error(void) { return g_last_error.c_str(); }

size_t bayeserr_last_error_line(void) { return g_last_line; }

void bayeserr_string_free(char* s) { std::free(s); }

bayeserr_status bayeserr_scores_parse_text(const char* text, size_t len, int calibrated,
                                           bayeserr_scores** out) {
  return guarded([&] {
    require(text, "text");
    require(out, "out");
    std::istringstream in(std::string(text, len));
    *out = wrap(bayeserr::parse_score_file(in, calibrated != 0));
  });
}

bayeserr_status bayeserr_scores_parse_file(const char* path, int calibrated,
                                           bayeserr_scores** out) {
  return guarded([&] {
    require(path, "path");
    require(out, "out");
    auto in = open_input(path);
    *out = wrap(bayeserr::parse_score_file(in, calibrated != 0));
  });
}

bayeserr_status bayeserr_scores_parse_files(const char* target_path,
                                            const char* nontarget_path, int calibrated,
                                            bayeserr_scores** out) {
  return guarded([&] {
    require(target_path, "target_path");
    require(nontarget_path, "nontarget_path");
    require(out, "out");
    auto tar_in = open_input(target_path);
    auto targets = bayeserr::parse_score_list(tar_in);
    auto non_in = open_input(nontarget_path);
    auto nontargets = bayeserr::parse_score_list(non_in);
    *out = wrap(bayeserr::ScoreSet(std::move(targets), std::move(nontargets),
                                   calibrated != 0));
  });
}

bayeserr_status bayeserr_scores_from_arrays(const double* targets, size_t n_targets,
                                            const double* nontargets, size_t n_nontargets,
                                            int calibrated, bayeserr_scores** out) {
  return guarded([&] {
    require(out, "out");
    if (n_targets) require(targets, "targets");
    if (n_nontargets) require(nontargets, "nontargets");
    std::vector<double> tar(targets, targets + n_targets);
    std::vector<double> non(nontargets, nontargets + n_nontargets);
    *out = wrap(bayeserr::ScoreSet(std::move(tar), std::move(non), calibrated != 0));
  });
}

void bayeserr_scores_free(bayeserr_scores* scores) { delete scores; }

bayeserr_status bayeserr_scores_counts(const bayeserr_scores* scores, size_t* n_targets,
                                       size_t* n_nontargets) {
  return guarded([&] {
    require(scores, "scores");
    if (n_targets) *n_targets = scores->set.num_targets();
    if (n_nontargets) *n_nontargets = scores->set.num_nontargets();
  });
}

int bayeserr_scores_calibrated(const bayeserr_scores* scores) {
  return scores && scores->set.calibrated() ? 1 : 0;
}

bayeserr_status bayeserr_scores_data(const bayeserr_scores* scores, const double** targets,
                                     const double** nontargets) {
  return guarded([&] {
    require(scores, "scores");
    if (targets) *targets = scores->set.targets().data();
    if (nontargets) *nontargets = scores->set.nontargets().data();
  });
}

bayeserr_status bayeserr_scores_write_file(const bayeserr_scores* scores, const char* path) {
  return guarded([&] {
    require(scores, "scores");
    require(path, "path");
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError(std::string("cannot write `") + path + "`");
    bayeserr::write_score_file(out, scores->set);
    if (!out) throw IoError(std::string("write failed for `") + path + "`");
  });
}

bayeserr_status bayeserr_scores_miscalibrate(const bayeserr_scores* scores, double scale,
                                             double offset, bayeserr_scores** out) {
  return guarded([&] {
    require(scores, "scores");
    require(out, "out");
    *out = wrap(bayeserr::miscalibrate(scores->set, scale, offset));
  });
}

bayeserr_status bayeserr_scores_pav_recalibrate(const bayeserr_scores* scores,
                                                bayeserr_scores** out) {
  return guarded([&] {
    require(scores, "scores");
    require(out, "out");
    *out = wrap(bayeserr::pav_recalibrate(scores->set));
  });
}

bayeserr_status bayeserr_rocch_eer(const bayeserr_scores* scores, double* eer) {
  return guarded([&] {
    require(scores, "scores");
    require(eer, "eer");
    *eer = bayeserr::rocch(scores->set).eer;
  });
}

bayeserr_status bayeserr_roc_csv(const bayeserr_scores* scores, char** out) {
  return guarded([&] {
    require(scores, "scores");
    require(out, "out");
    std::ostringstream csv;
    bayeserr::write_roc_csv(csv, bayeserr::roc_points(scores->set));
    *out = to_c_string(csv.str());
  });
}

bayeserr_status bayeserr_det_csv(const bayeserr_scores* scores, char** out) {
  return guarded([&] {
    require(scores, "scores");
    require(out, "out");
    std::ostringstream csv;
    bayeserr::write_det_csv(csv, bayeserr::det_points(scores->set));
    *out = to_c_string(csv.str());
  });
}

bayeserr_status bayeserr_actual_risk(const bayeserr_scores* scores, double prior,
                                     double cmiss, double cfa, bayeserr_risk* out) {
  return guarded([&] {
    require(scores, "scores");
    require(out, "out");
    fill_risk(bayeserr::actual_risk(scores->set, bayeserr::OperatingPoint(prior, cmiss, cfa)),
              out);
  });
}

bayeserr_status bayeserr_min_risk(const bayeserr_scores* scores, double prior, double cmiss,
                                  double cfa, bayeserr_risk* out) {
  return guarded([&] {
    require(scores, "scores");
    require(out, "out");
    fill_risk(bayeserr::min_risk(scores->set, bayeserr::OperatingPoint(prior, cmiss, cfa)),
              out);
  });
}

bayeserr_status bayeserr_equal_risk(const bayeserr_scores* scores, double cmiss, double cfa,
                                    double* theta_star, double* r_star) {
  return guarded([&] {
    require(scores, "scores");
    const auto point = bayeserr::equal_risk_point(scores->set, cmiss, cfa);
    if (theta_star) *theta_star = point.theta_star;
    if (r_star) *r_star = point.r_star;
  });
}

bayeserr_status bayeserr_profile_compute(const bayeserr_scores* scores, double logit_lo,
                                         double logit_hi, size_t grid_size, double cmiss,
                                         double cfa, bayeserr_profile** out) {
  return guarded([&] {
    require(scores, "scores");
    require(out, "out");
    const bayeserr::PriorGrid grid{logit_lo, logit_hi, grid_size};
    *out = new bayeserr_profile{bayeserr::bayes_error_profile(scores->set, grid, cmiss, cfa)};
  });
}

void bayeserr_profile_free(bayeserr_profile* profile) { delete profile; }

bayeserr_status bayeserr_profile_summary(const bayeserr_profile* profile, double* eer,
                                         double* pi_star) {
  return guarded([&] {
    require(profile, "profile");
    if (eer) *eer = profile->profile.eer;
    if (pi_star) *pi_star = profile->profile.pi_star;
  });
}

bayeserr_status bayeserr_profile_normalize(bayeserr_profile* profile) {
  return guarded([&] {
    require(profile, "profile");
    auto& p = profile->profile;
    for (std::size_t i = 0; i < p.prior.size(); ++i) {
      const double prior_bound = std::min(p.cmiss * p.prior[i], p.cfa * (1.0 - p.prior[i]));
      if (p.has_actual()) p.actual_risk[i] /= prior_bound;
      p.min_risk[i] /= prior_bound;
      p.bound[i] /= prior_bound;
    }
  });
}

bayeserr_status bayeserr_profile_csv(const bayeserr_profile* profile, char** out) {
  return guarded([&] {
    require(profile, "profile");
    require(out, "out");
    std::ostringstream csv;
    bayeserr::write_profile_csv(csv, profile->profile);
    *out = to_c_string(csv.str());
  });
}

bayeserr_status bayeserr_profile_svg(const bayeserr_profile* profile, char** out) {
  return guarded([&] {
    require(profile, "profile");
    require(out, "out");
    *out = to_c_string(bayeserr::render_bep_svg(profile->profile));
  });
}

bayeserr_status bayeserr_min_dcf_threshold(const bayeserr_scores* cal, double prior,
                                           double cmiss, double cfa,
                                           bayeserr_threshold_report* out) {
  return guarded([&] {
    require(cal, "cal");
    require(out, "out");
    from_report(
        bayeserr::min_dcf_threshold(cal->set, bayeserr::OperatingPoint(prior, cmiss, cfa)),
        out);
  });
}

bayeserr_status bayeserr_fixed_fa_threshold(const bayeserr_scores* cal, double target_rate,
                                            bayeserr_threshold_report* out) {
  return guarded([&] {
    require(cal, "cal");
    require(out, "out");
    from_report(bayeserr::fixed_fa_report(cal->set, target_rate), out);
  });
}

bayeserr_status bayeserr_apply_threshold(const bayeserr_scores* test, double prior,
                                         double cmiss, double cfa,
                                         bayeserr_threshold_report* report) {
  return guarded([&] {
    require(test, "test");
    require(report, "report");
    from_report(bayeserr::apply_threshold(test->set, to_report(*report),
                                          bayeserr::OperatingPoint(prior, cmiss, cfa)),
                report);
  });
}

bayeserr_status bayeserr_threshold_report_csv(const bayeserr_threshold_report* report,
                                              char** out) {
  return guarded([&] {
    require(report, "report");
    require(out, "out");
    std::ostringstream csv;
    bayeserr::write_threshold_report_csv(csv, to_report(*report));
    *out = to_c_string(csv.str());
  });
}

bayeserr_status bayeserr_simulate(double target_eer, size_t n_targets, size_t n_nontargets,
                                  uint64_t seed, double scale, double shift,
                                  bayeserr_scores** out, char** sidecar_json) {
  return guarded([&] {
    require(out, "out");
    const auto model = bayeserr::model_from_eer(target_eer);
    auto set = bayeserr::sample_scores(model, n_targets, n_nontargets, seed);
    if (scale != 1.0 || shift != 0.0) set = bayeserr::miscalibrate(set, scale, shift);

    std::string json_text;
    if (sidecar_json) {
      nlohmann::ordered_json meta;
      meta["generator"] = "gaussian-llr";
      meta["sampler"] = std::string(bayeserr::kSamplerId);
      meta["seed"] = seed;
      meta["target_eer"] = target_eer;
      meta["analytic_eer"] = model.analytic_eer();
      meta["variance"] = model.variance();
      meta["target_mean"] = model.target_mean();
      meta["nontarget_mean"] = model.nontarget_mean();
      meta["n_target"] = n_targets;
      meta["n_nontarget"] = n_nontargets;
      meta["scale"] = scale;
      meta["shift"] = shift;
      json_text = meta.dump(2) + "\n";
    }
    auto* handle = wrap(std::move(set));
    if (sidecar_json) {
      try {
        *sidecar_json = to_c_string(json_text);
      } catch (...) {
        delete handle;
        throw;
      }
    }
    *out = handle;
  });
}

}  // extern "C"
