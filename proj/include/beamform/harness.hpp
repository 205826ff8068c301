// SPDX-License-Identifier: Apache-2.0
//
// Experiment configuration, Monte-Carlo execution and tabular output.
// Config files are flat "section.key = value" text; see docs/config.md.
#ifndef BEAMFORM_HARNESS_HPP
#define BEAMFORM_HARNESS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "beamform/array_sim.hpp"
#include "beamform/mcg_designs.hpp"
#include "beamform/wc_designs.hpp"

namespace beamform {

enum class ExperimentKind { SinrVsSnapshots, SinrVsSnr, SinrVsEpsilon, GammaSweep };

enum class Algorithm { WcCcm, WcCmv, RcmvMcg, RccmMcg, LoadedSmi, Optimal };

std::string to_string(ExperimentKind kind);
std::string to_string(Algorithm alg);
ExperimentKind experiment_kind_from_string(const std::string& s);
Algorithm algorithm_from_string(const std::string& s);

struct ExperimentConfig {
    ExperimentKind kind = ExperimentKind::SinrVsSnapshots;
    std::string scenario_id = "table4"; // table4 | table5 | custom
    std::vector<ScenarioSegment> custom_segments;
    std::vector<Algorithm> algorithms = {Algorithm::WcCcm, Algorithm::LoadedSmi,
                                         Algorithm::Optimal};
    int trials = 50;
    int snapshots = 2000;
    int eval_stride = 25;
    std::uint64_t seed = 1;
    double snr_db = 0.0;
    std::vector<double> sweep; // SNR dB / epsilon / gamma grid
    MismatchModel mismatch{MismatchKind::LocalCoherentScattering, 4, 2.0, true};
    WcParams wc;
    McgParams mcg;                 // mu_lambda field unused; see below
    double mu_lambda_cmv = 800.0;
    double mu_lambda_ccm = 100.0;

    bool operator==(const ExperimentConfig&) const = default;

    Scenario build_scenario(double snr_db_override) const;
    void validate() const;
};

std::string serialize_config(const ExperimentConfig& config);
ExperimentConfig parse_config(const std::string& text);
ExperimentConfig load_config_file(const std::string& path);

struct ResultRow {
    std::string experiment;
    std::string algorithm;
    double x_value;
    double sinr_db_mean;
    double sinr_db_std;
    int trials;
};

struct ExperimentResult {
    std::vector<ResultRow> rows;
    long excluded_trials = 0;       // trials dropped by the solver-abort policy
    bool abort_threshold_exceeded = false;
};

ExperimentResult run_experiment(const ExperimentConfig& config);

/// (R_smi + 10 sigma_n^2 I)^{-1} a with R_smi the plain sample average.
CVector loaded_smi_weights(const CMatrix& sample_cov, const CVector& a, double sigma_n2);

/// Header exactly: experiment,algorithm,x_value,sinr_db_mean,sinr_db_std,trials
/// Rows sorted by algorithm, then x. Throws on empty rows or unwritable path.
void emit_csv(const std::vector<ResultRow>& rows, const std::string& path);
std::string format_csv(const std::vector<ResultRow>& rows);

/// Standalone Python script that renders the CSV, one curve per algorithm.
void emit_plot_script(const std::vector<ResultRow>& rows, const std::string& csv_path,
                      const std::string& out_path);

} // namespace beamform

#endif
