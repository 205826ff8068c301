/* SPDX-License-Identifier: Apache-2.0
 *
 * C interface to the beamforming experiment harness. Opaque handles,
 * integer status codes; bf_last_error() holds a thread-local message for
 * the most recent failing call.
 */
#ifndef BEAMFORM_CAPI_H
#define BEAMFORM_CAPI_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define BF_API __declspec(dllexport)
#else
#define BF_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum bf_status {
    BF_OK = 0,
    BF_ERR_CONFIG = 2,       /* invalid or unreadable configuration */
    BF_ERR_SOLVER_ABORT = 3, /* too many trials hit the solver-failure policy */
    BF_ERR_IO = 4,
    BF_ERR_INVALID = 5       /* bad handle or argument */
} bf_status;

typedef struct bf_experiment bf_experiment;
typedef struct bf_results bf_results;

BF_API const char* bf_version(void);

/* Message for the most recent failing call on this thread; empty on success. */
BF_API const char* bf_last_error(void);

/* Load + validate a config file. On success *out owns the experiment. */
BF_API bf_status bf_experiment_load(const char* path, bf_experiment** out);
BF_API bf_status bf_experiment_parse(const char* text, bf_experiment** out);
BF_API void bf_experiment_free(bf_experiment* exp);

BF_API bf_status bf_experiment_set_seed(bf_experiment* exp, uint64_t seed);
BF_API bf_status bf_experiment_set_trials(bf_experiment* exp, int trials);

/* Run the Monte-Carlo experiment. Returns BF_ERR_SOLVER_ABORT if the
 * excluded-trial threshold was exceeded (results are still produced). */
BF_API bf_status bf_experiment_run(const bf_experiment* exp, bf_results** out);
BF_API void bf_results_free(bf_results* res);

BF_API int bf_results_row_count(const bf_results* res);

/* Experiment kind string shared by all rows ("sinr-vs-snr", ...). */
BF_API const char* bf_results_experiment(const bf_results* res);
BF_API long bf_results_excluded_trials(const bf_results* res);

/* Fill out one row; strings are valid until bf_results_free. */
BF_API bf_status bf_results_row(const bf_results* res, int index,
                                const char** algorithm, double* x_value,
                                double* sinr_db_mean, double* sinr_db_std,
                                int* trials);

BF_API bf_status bf_results_write_csv(const bf_results* res, const char* path);
BF_API bf_status bf_results_write_plot(const bf_results* res, const char* csv_path,
                                       const char* out_path);

#ifdef __cplusplus
}
#endif

#endif
