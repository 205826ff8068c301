// SPDX-License-Identifier: Apache-2.0
//
// beamform run --config <path> [--out <csv>] [--seed <u64>] [--trials <n>]
//              [--plot <path>]
// beamform validate --config <path>
//
// Exit codes: 0 success, 2 config error, 3 solver-abort threshold exceeded.
#include <cstdio>

#include <CLI11.hpp>

#include "beamform/capi.h"

namespace {

int report(bf_status status) {
    if (status == BF_OK) return 0;
    std::fprintf(stderr, "error: %s\n", bf_last_error());
    switch (status) {
        case BF_ERR_SOLVER_ABORT: return 3;
        case BF_ERR_CONFIG:
        case BF_ERR_INVALID: return 2;
        default: return 2;
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Robust adaptive beamforming experiment harness"};
    app.require_subcommand(1);

    std::string config_path, out_csv, plot_path;
    std::uint64_t seed = 0;
    int trials = 0;
    bool have_seed = false, have_trials = false;

    auto* run = app.add_subcommand("run", "run a Monte-Carlo experiment");
    run->add_option("--config", config_path, "config file")->required();
    run->add_option("--out", out_csv, "output CSV path");
    run->add_option("--seed", seed, "override the RNG seed")
        ->each([&](const std::string&) { have_seed = true; });
    run->add_option("--trials", trials, "override the trial count")
        ->each([&](const std::string&) { have_trials = true; });
    run->add_option("--plot", plot_path, "write a plot script here");

    auto* validate = app.add_subcommand("validate", "check a config file");
    validate->add_option("--config", config_path, "config file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) ? 2 : 0;
    }

    bf_experiment* exp = nullptr;
    bf_status st = bf_experiment_load(config_path.c_str(), &exp);
    if (st != BF_OK) return report(st);

    if (validate->parsed()) {
        std::printf("config ok\n");
        bf_experiment_free(exp);
        return 0;
    }

    if (have_seed) bf_experiment_set_seed(exp, seed);
    if (have_trials) {
        st = bf_experiment_set_trials(exp, trials);
        if (st != BF_OK) {
            bf_experiment_free(exp);
            return report(st);
        }
    }

    bf_results* res = nullptr;
    const bf_status run_status = bf_experiment_run(exp, &res);
    if (run_status != BF_OK && run_status != BF_ERR_SOLVER_ABORT) {
        bf_experiment_free(exp);
        return report(run_status);
    }

    int rc = 0;
    if (!out_csv.empty()) {
        st = bf_results_write_csv(res, out_csv.c_str());
        if (st != BF_OK) rc = report(st);
    } else {
        // print rows to stdout
        const int n = bf_results_row_count(res);
        std::printf("experiment,algorithm,x_value,sinr_db_mean,sinr_db_std,trials\n");
        for (int k = 0; k < n; ++k) {
            const char* alg = nullptr;
            double x, mean, stddev;
            int tr;
            bf_results_row(res, k, &alg, &x, &mean, &stddev, &tr);
            std::printf("%s,%s,%.10g,%.10g,%.10g,%d\n", bf_results_experiment(res),
                        alg, x, mean, stddev, tr);
        }
    }
    if (rc == 0 && !plot_path.empty()) {
        st = bf_results_write_plot(res, out_csv.empty() ? "results.csv" : out_csv.c_str(),
                                   plot_path.c_str());
        if (st != BF_OK) rc = report(st);
    }
    if (bf_results_excluded_trials(res) > 0)
        std::fprintf(stderr, "note: %ld trial(s) excluded by the solver-abort policy\n",
                     bf_results_excluded_trials(res));
    if (rc == 0 && run_status == BF_ERR_SOLVER_ABORT) rc = report(run_status);

    bf_results_free(res);
    bf_experiment_free(exp);
    return rc;
}
