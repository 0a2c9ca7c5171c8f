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

/* C interface to the bayeserr evaluation library.
 *
 * Objects are opaque handles released with the matching *_free function.
 * Every call returns a bayeserr_status; on failure a description is available
 * from bayeserr_last_error() on the same thread until the next failing call.
 * Strings returned through `char** out` are owned by the caller and released
 * with bayeserr_string_free(). Thresholds on calibrated scores are natural-log
 * likelihood ratios. */

#ifndef BAYESERR_BAYESERR_H
#define BAYESERR_BAYESERR_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(BAYESERR_BUILDING_LIBRARY)
#    define BAYESERR_API __declspec(dllexport)
#  else
#    define BAYESERR_API __declspec(dllimport)
#  endif
#else
#  define BAYESERR_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
  BAYESERR_OK = 0,
  BAYESERR_ERR_INVALID_ARGUMENT = 1, /* bad prior, cost, rate, null pointer */
  BAYESERR_ERR_PARSE = 2,            /* malformed score data */
  BAYESERR_ERR_IO = 3,               /* file could not be opened or written */
  BAYESERR_ERR_NOT_CALIBRATED = 4,   /* operation needs log-LLR scores */
  BAYESERR_ERR_INTERNAL = 99
} bayeserr_status;

typedef struct bayeserr_scores bayeserr_scores;
typedef struct bayeserr_profile bayeserr_profile;

typedef struct {
  double risk;
  double threshold;
  double pmiss;
  double pfa;
} bayeserr_risk;

typedef struct {
  double threshold;
  double cal_pmiss;
  double cal_pfa;
  int has_test;
  double test_pmiss;
  double test_pfa;
  double test_risk;
} bayeserr_threshold_report;

BAYESERR_API const char* bayeserr_version(void);
BAYESERR_API const char* bayeserr_last_error(void);
/* 1-based line of the last parse failure, 0 if not line-specific. */
BAYESERR_API size_t bayeserr_last_error_line(void);
BAYESERR_API void bayeserr_string_free(char* s);

/* ---- score sets ---- */

BAYESERR_API bayeserr_status bayeserr_scores_parse_text(const char* text, size_t len,
                                                        int calibrated,
                                                        bayeserr_scores** out);
BAYESERR_API bayeserr_status bayeserr_scores_parse_file(const char* path, int calibrated,
                                                        bayeserr_scores** out);
/* One bare score per line in each file. */
BAYESERR_API bayeserr_status bayeserr_scores_parse_files(const char* target_path,
                                                         const char* nontarget_path,
                                                         int calibrated,
                                                         bayeserr_scores** out);
BAYESERR_API bayeserr_status bayeserr_scores_from_arrays(const double* targets, size_t n_targets,
                                                         const double* nontargets,
                                                         size_t n_nontargets, int calibrated,
                                                         bayeserr_scores** out);
BAYESERR_API void bayeserr_scores_free(bayeserr_scores* scores);

BAYESERR_API bayeserr_status bayeserr_scores_counts(const bayeserr_scores* scores,
                                                    size_t* n_targets, size_t* n_nontargets);
BAYESERR_API int bayeserr_scores_calibrated(const bayeserr_scores* scores);
/* Borrowed views, valid while the handle lives. */
BAYESERR_API bayeserr_status bayeserr_scores_data(const bayeserr_scores* scores,
                                                  const double** targets,
                                                  const double** nontargets);
BAYESERR_API bayeserr_status bayeserr_scores_write_file(const bayeserr_scores* scores,
                                                        const char* path);
BAYESERR_API bayeserr_status bayeserr_scores_miscalibrate(const bayeserr_scores* scores,
                                                          double scale, double offset,
                                                          bayeserr_scores** out);
BAYESERR_API bayeserr_status bayeserr_scores_pav_recalibrate(const bayeserr_scores* scores,
                                                             bayeserr_scores** out);

/* ---- curves ---- */

BAYESERR_API bayeserr_status bayeserr_rocch_eer(const bayeserr_scores* scores, double* eer);
BAYESERR_API bayeserr_status bayeserr_roc_csv(const bayeserr_scores* scores, char** out);
BAYESERR_API bayeserr_status bayeserr_det_csv(const bayeserr_scores* scores, char** out);

/* ---- Bayes decisions ---- */

BAYESERR_API bayeserr_status bayeserr_actual_risk(const bayeserr_scores* scores, double prior,
                                                  double cmiss, double cfa,
                                                  bayeserr_risk* out);
BAYESERR_API bayeserr_status bayeserr_min_risk(const bayeserr_scores* scores, double prior,
                                               double cmiss, double cfa, bayeserr_risk* out);
BAYESERR_API bayeserr_status bayeserr_equal_risk(const bayeserr_scores* scores, double cmiss,
                                                 double cfa, double* theta_star,
                                                 double* r_star);

BAYESERR_API bayeserr_status bayeserr_profile_compute(const bayeserr_scores* scores,
                                                      double logit_lo, double logit_hi,
                                                      size_t grid_size, double cmiss,
                                                      double cfa, bayeserr_profile** out);
BAYESERR_API void bayeserr_profile_free(bayeserr_profile* profile);
BAYESERR_API bayeserr_status bayeserr_profile_summary(const bayeserr_profile* profile,
                                                      double* eer, double* pi_star);
/* Divides every risk column by min(Cmiss * prior, Cfa * (1 - prior)). */
BAYESERR_API bayeserr_status bayeserr_profile_normalize(bayeserr_profile* profile);
BAYESERR_API bayeserr_status bayeserr_profile_csv(const bayeserr_profile* profile, char** out);
BAYESERR_API bayeserr_status bayeserr_profile_svg(const bayeserr_profile* profile, char** out);

/* ---- direct thresholding ---- */

BAYESERR_API bayeserr_status bayeserr_min_dcf_threshold(const bayeserr_scores* cal,
                                                        double prior, double cmiss,
                                                        double cfa,
                                                        bayeserr_threshold_report* out);
BAYESERR_API bayeserr_status bayeserr_fixed_fa_threshold(const bayeserr_scores* cal,
                                                         double target_rate,
                                                         bayeserr_threshold_report* out);
BAYESERR_API bayeserr_status bayeserr_apply_threshold(const bayeserr_scores* test,
                                                      double prior, double cmiss, double cfa,
                                                      bayeserr_threshold_report* report);
BAYESERR_API bayeserr_status bayeserr_threshold_report_csv(
    const bayeserr_threshold_report* report, char** out);

/* ---- synthetic scores ---- */

/* Perfectly calibrated Gaussian log-LLRs with analytic EER `target_eer`,
 * then s -> scale * s + shift. The JSON sidecar records the model, seed and
 * sampler algorithm. `sidecar_json` may be NULL. */
BAYESERR_API bayeserr_status bayeserr_simulate(double target_eer, size_t n_targets,
                                               size_t n_nontargets, uint64_t seed,
                                               double scale, double shift,
                                               bayeserr_scores** out, char** sidecar_json);

#ifdef __cplusplus
}
#endif

#endif /* BAYESERR_BAYESERR_H */
