// SPDX-License-Identifier: Apache-2.0
#include "beamform/capi.h"

#include <string>

#include "beamform/harness.hpp"

using namespace beamform;

struct bf_experiment {
    ExperimentConfig config;
};

struct bf_results {
    ExperimentResult result;
};

namespace {

thread_local std::string g_last_error;

bf_status fail(bf_status code, const std::string& msg) {
    g_last_error = msg;
    return code;
}

bf_status ok() {
    g_last_error.clear();
    return BF_OK;
}

} // namespace

extern "C" {

const char* bf_version(void) { return "0.1.0"; }

const char* bf_last_error(void) { return g_last_error.c_str(); }

bf_status bf_experiment_load(const char* path, bf_experiment** out) {
    if (!path || !out) return fail(BF_ERR_INVALID, "null argument");
    try {
        auto* exp = new bf_experiment{load_config_file(path)};
        *out = exp;
        return ok();
    } catch (const std::exception& e) {
        return fail(BF_ERR_CONFIG, e.what());
    }
}

bf_status bf_experiment_parse(const char* text, bf_experiment** out) {
    if (!text || !out) return fail(BF_ERR_INVALID, "null argument");
    try {
        auto* exp = new bf_experiment{parse_config(text)};
        *out = exp;
        return ok();
    } catch (const std::exception& e) {
        return fail(BF_ERR_CONFIG, e.what());
    }
}

void bf_experiment_free(bf_experiment* exp) { delete exp; }

bf_status bf_experiment_set_seed(bf_experiment* exp, uint64_t seed) {
    if (!exp) return fail(BF_ERR_INVALID, "null experiment");
    exp->config.seed = seed;
    return ok();
}

bf_status bf_experiment_set_trials(bf_experiment* exp, int trials) {
    if (!exp) return fail(BF_ERR_INVALID, "null experiment");
    if (trials < 1) return fail(BF_ERR_CONFIG, "trials must be positive");
    exp->config.trials = trials;
    return ok();
}

bf_status bf_experiment_run(const bf_experiment* exp, bf_results** out) {
    if (!exp || !out) return fail(BF_ERR_INVALID, "null argument");
    try {
        auto* res = new bf_results{run_experiment(exp->config)};
        *out = res;
        if (res->result.abort_threshold_exceeded)
            return fail(BF_ERR_SOLVER_ABORT, "solver-abort threshold exceeded");
        return ok();
    } catch (const std::exception& e) {
        return fail(BF_ERR_CONFIG, e.what());
    }
}

void bf_results_free(bf_results* res) { delete res; }

int bf_results_row_count(const bf_results* res) {
    return res ? static_cast<int>(res->result.rows.size()) : 0;
}

const char* bf_results_experiment(const bf_results* res) {
    if (!res || res->result.rows.empty()) return "";
    return res->result.rows.front().experiment.c_str();
}

long bf_results_excluded_trials(const bf_results* res) {
    return res ? res->result.excluded_trials : 0;
}

bf_status bf_results_row(const bf_results* res, int index, const char** algorithm,
                         double* x_value, double* sinr_db_mean, double* sinr_db_std,
                         int* trials) {
    if (!res || index < 0 || index >= bf_results_row_count(res))
        return fail(BF_ERR_INVALID, "bad results row index");
    const ResultRow& row = res->result.rows[static_cast<std::size_t>(index)];
    if (algorithm) *algorithm = row.algorithm.c_str();
    if (x_value) *x_value = row.x_value;
    if (sinr_db_mean) *sinr_db_mean = row.sinr_db_mean;
    if (sinr_db_std) *sinr_db_std = row.sinr_db_std;
    if (trials) *trials = row.trials;
    return ok();
}

bf_status bf_results_write_csv(const bf_results* res, const char* path) {
    if (!res || !path) return fail(BF_ERR_INVALID, "null argument");
    try {
        emit_csv(res->result.rows, path);
        return ok();
    } catch (const std::exception& e) {
        return fail(BF_ERR_IO, e.what());
    }
}

bf_status bf_results_write_plot(const bf_results* res, const char* csv_path,
                                const char* out_path) {
    if (!res || !csv_path || !out_path) return fail(BF_ERR_INVALID, "null argument");
    try {
        emit_plot_script(res->result.rows, csv_path, out_path);
        return ok();
    } catch (const std::exception& e) {
        return fail(BF_ERR_IO, e.what());
    }
}

} // extern "C"
