// SPDX-License-Identifier: Apache-2.0
#include "beamform/harness.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <future>
#include <map>
#include <sstream>
#include <stdexcept>

namespace beamform {

std::string to_string(ExperimentKind kind) {
    switch (kind) {
        case ExperimentKind::SinrVsSnapshots: return "sinr-vs-snapshots";
        case ExperimentKind::SinrVsSnr: return "sinr-vs-snr";
        case ExperimentKind::SinrVsEpsilon: return "sinr-vs-epsilon";
        case ExperimentKind::GammaSweep: return "gamma-sweep";
    }
    throw std::logic_error("bad experiment kind");
}

std::string to_string(Algorithm alg) {
    switch (alg) {
        case Algorithm::WcCcm: return "wc-ccm";
        case Algorithm::WcCmv: return "wc-cmv";
        case Algorithm::RcmvMcg: return "rcmv-mcg";
        case Algorithm::RccmMcg: return "rccm-mcg";
        case Algorithm::LoadedSmi: return "loaded-smi";
        case Algorithm::Optimal: return "optimal";
    }
    throw std::logic_error("bad algorithm");
}

ExperimentKind experiment_kind_from_string(const std::string& s) {
    if (s == "sinr-vs-snapshots") return ExperimentKind::SinrVsSnapshots;
    if (s == "sinr-vs-snr") return ExperimentKind::SinrVsSnr;
    if (s == "sinr-vs-epsilon") return ExperimentKind::SinrVsEpsilon;
    if (s == "gamma-sweep") return ExperimentKind::GammaSweep;
    throw std::invalid_argument("unknown experiment kind: " + s);
}

Algorithm algorithm_from_string(const std::string& s) {
    if (s == "wc-ccm") return Algorithm::WcCcm;
    if (s == "wc-cmv") return Algorithm::WcCmv;
    if (s == "rcmv-mcg") return Algorithm::RcmvMcg;
    if (s == "rccm-mcg") return Algorithm::RccmMcg;
    if (s == "loaded-smi") return Algorithm::LoadedSmi;
    if (s == "optimal") return Algorithm::Optimal;
    throw std::invalid_argument("unknown algorithm: " + s);
}

Scenario ExperimentConfig::build_scenario(double snr) const {
    Scenario s;
    if (scenario_id == "table4") {
        s = table4_scenario(snr);
    } else if (scenario_id == "table5") {
        s = table5_scenario(snr);
    } else if (scenario_id == "custom") {
        s.geometry.num_sensors = 10;
        s.snr_db = snr;
        s.segments = custom_segments;
    } else {
        throw std::invalid_argument("unknown scenario id: " + scenario_id);
    }
    s.mismatch = mismatch;
    s.validate();
    return s;
}

void ExperimentConfig::validate() const {
    if (trials < 1) throw std::invalid_argument("trials must be positive");
    if (snapshots < 1) throw std::invalid_argument("snapshots must be positive");
    if (eval_stride < 1) throw std::invalid_argument("eval_stride must be positive");
    if (algorithms.empty()) throw std::invalid_argument("no algorithms selected");
    const Scenario s = build_scenario(snr_db);
    const int m = s.geometry.num_sensors;
    if (wc.epsilon >= std::sqrt(static_cast<double>(m)))
        throw std::invalid_argument("wc.epsilon >= sqrt(M) is infeasible");
    McgParams mp = mcg;
    mp.mu_lambda = mu_lambda_cmv;
    mp.validate(m);
}

// ---------------------------------------------------------------------------
// config text format

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep)) {
        item = trim(item);
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

} // namespace

std::string serialize_config(const ExperimentConfig& c) {
    std::ostringstream os;
    os << "experiment.kind = " << to_string(c.kind) << "\n";
    os << "experiment.scenario = " << c.scenario_id << "\n";
    os << "experiment.algorithms = ";
    for (std::size_t k = 0; k < c.algorithms.size(); ++k)
        os << (k ? "," : "") << to_string(c.algorithms[k]);
    os << "\n";
    os << "experiment.trials = " << c.trials << "\n";
    os << "experiment.snapshots = " << c.snapshots << "\n";
    os << "experiment.eval_stride = " << c.eval_stride << "\n";
    os << "experiment.seed = " << c.seed << "\n";
    if (!c.sweep.empty()) {
        os << "experiment.sweep = ";
        for (std::size_t k = 0; k < c.sweep.size(); ++k)
            os << (k ? "," : "") << fmt(c.sweep[k]);
        os << "\n";
    }
    os << "scenario.snr_db = " << fmt(c.snr_db) << "\n";
    if (c.scenario_id == "custom") {
        os << "scenario.segments = " << c.custom_segments.size() << "\n";
        for (std::size_t k = 0; k < c.custom_segments.size(); ++k) {
            const auto& seg = c.custom_segments[k];
            os << "scenario.segment" << (k + 1) << ".range = " << seg.first << "-"
               << seg.last << "\n";
            os << "scenario.segment" << (k + 1) << ".sources = ";
            for (std::size_t j = 0; j < seg.sources.size(); ++j)
                os << (j ? "," : "") << fmt(seg.sources[j].power_db_rel) << "/"
                   << fmt(seg.sources[j].doa_deg);
            os << "\n";
        }
    }
    os << "mismatch.kind = "
       << (c.mismatch.kind == MismatchKind::None ? "none" : "local-coherent-scattering")
       << "\n";
    os << "mismatch.paths = " << c.mismatch.num_paths << "\n";
    os << "mismatch.angle_std_deg = " << fmt(c.mismatch.angle_std_deg) << "\n";
    os << "mismatch.resample_per_trial = " << (c.mismatch.resample_per_trial ? "true" : "false")
       << "\n";
    os << "wc.epsilon = " << fmt(c.wc.epsilon) << "\n";
    os << "wc.delta = " << fmt(c.wc.delta) << "\n";
    os << "wc.gamma = " << fmt(c.wc.gamma) << "\n";
    os << "wc.mu = " << fmt(c.wc.mu) << "\n";
    os << "mcg.epsilon_tilde = " << fmt(c.mcg.epsilon_tilde) << "\n";
    os << "mcg.delta = " << fmt(c.mcg.delta) << "\n";
    os << "mcg.gamma = " << fmt(c.mcg.gamma) << "\n";
    os << "mcg.mu = " << fmt(c.mcg.mu) << "\n";
    os << "mcg.eta = " << fmt(c.mcg.eta) << "\n";
    os << "mcg.mu_lambda_cmv = " << fmt(c.mu_lambda_cmv) << "\n";
    os << "mcg.mu_lambda_ccm = " << fmt(c.mu_lambda_ccm) << "\n";
    os << "mcg.delta_lambda_max = " << fmt(c.mcg.delta_lambda_max) << "\n";
    os << "mcg.lambda0 = " << fmt(c.mcg.lambda0) << "\n";
    return os.str();
}

ExperimentConfig parse_config(const std::string& text) {
    std::map<std::string, std::string> kv;
    std::istringstream is(text);
    std::string line;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("config line " + std::to_string(lineno) +
                                        ": expected key = value");
        kv[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
    }

    ExperimentConfig c;
    auto get = [&](const std::string& key, auto parse, auto& dst) {
        auto it = kv.find(key);
        if (it != kv.end()) dst = parse(it->second);
        kv.erase(key);
    };
    auto as_str = [](const std::string& v) { return v; };
    auto as_int = [](const std::string& v) { return std::stoi(v); };
    auto as_u64 = [](const std::string& v) { return std::stoull(v); };
    auto as_dbl = [](const std::string& v) { return std::stod(v); };
    auto as_bool = [](const std::string& v) { return v == "true" || v == "1"; };

    std::string kind_s, mm_kind;
    get("experiment.kind", as_str, kind_s);
    if (!kind_s.empty()) c.kind = experiment_kind_from_string(kind_s);
    get("experiment.scenario", as_str, c.scenario_id);
    if (auto it = kv.find("experiment.algorithms"); it != kv.end()) {
        c.algorithms.clear();
        for (const auto& tok : split(it->second, ','))
            c.algorithms.push_back(algorithm_from_string(tok));
        kv.erase(it);
    }
    get("experiment.trials", as_int, c.trials);
    get("experiment.snapshots", as_int, c.snapshots);
    get("experiment.eval_stride", as_int, c.eval_stride);
    get("experiment.seed", as_u64, c.seed);
    if (auto it = kv.find("experiment.sweep"); it != kv.end()) {
        c.sweep.clear();
        for (const auto& tok : split(it->second, ',')) c.sweep.push_back(std::stod(tok));
        kv.erase(it);
    }
    get("scenario.snr_db", as_dbl, c.snr_db);
    if (auto it = kv.find("scenario.segments"); it != kv.end()) {
        const int nseg = std::stoi(it->second);
        kv.erase(it);
        c.custom_segments.clear();
        for (int k = 1; k <= nseg; ++k) {
            const std::string base = "scenario.segment" + std::to_string(k);
            ScenarioSegment seg;
            auto rit = kv.find(base + ".range");
            auto sit = kv.find(base + ".sources");
            if (rit == kv.end() || sit == kv.end())
                throw std::invalid_argument("config: missing keys for " + base);
            const auto range = split(rit->second, '-');
            if (range.size() != 2) throw std::invalid_argument("config: bad range in " + base);
            seg.first = std::stoi(range[0]);
            seg.last = std::stoi(range[1]);
            bool desired = true;
            for (const auto& tok : split(sit->second, ',')) {
                const auto pd = split(tok, '/');
                if (pd.size() != 2)
                    throw std::invalid_argument("config: bad source spec in " + base);
                seg.sources.push_back({std::stod(pd[1]), std::stod(pd[0]), desired});
                desired = false;
            }
            kv.erase(rit->first);
            kv.erase(sit->first);
            c.custom_segments.push_back(seg);
        }
    }
    get("mismatch.kind", as_str, mm_kind);
    if (!mm_kind.empty()) {
        if (mm_kind == "none")
            c.mismatch.kind = MismatchKind::None;
        else if (mm_kind == "local-coherent-scattering")
            c.mismatch.kind = MismatchKind::LocalCoherentScattering;
        else
            throw std::invalid_argument("unknown mismatch kind: " + mm_kind);
    }
    get("mismatch.paths", as_int, c.mismatch.num_paths);
    get("mismatch.angle_std_deg", as_dbl, c.mismatch.angle_std_deg);
    get("mismatch.resample_per_trial", as_bool, c.mismatch.resample_per_trial);
    get("wc.epsilon", as_dbl, c.wc.epsilon);
    get("wc.delta", as_dbl, c.wc.delta);
    get("wc.gamma", as_dbl, c.wc.gamma);
    get("wc.mu", as_dbl, c.wc.mu);
    get("mcg.epsilon_tilde", as_dbl, c.mcg.epsilon_tilde);
    get("mcg.delta", as_dbl, c.mcg.delta);
    get("mcg.gamma", as_dbl, c.mcg.gamma);
    get("mcg.mu", as_dbl, c.mcg.mu);
    get("mcg.eta", as_dbl, c.mcg.eta);
    get("mcg.mu_lambda_cmv", as_dbl, c.mu_lambda_cmv);
    get("mcg.mu_lambda_ccm", as_dbl, c.mu_lambda_ccm);
    get("mcg.delta_lambda_max", as_dbl, c.mcg.delta_lambda_max);
    get("mcg.lambda0", as_dbl, c.mcg.lambda0);
    if (!kv.empty())
        throw std::invalid_argument("config: unknown key: " + kv.begin()->first);
    c.validate();
    return c;
}

ExperimentConfig load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str());
}

// ---------------------------------------------------------------------------
// experiment execution

namespace {

struct TrialResult {
    // [algorithm][checkpoint] -> SINR dB
    std::vector<std::vector<double>> sinr;
    bool aborted = false;
};

// One full trial: generate the stream once and feed every algorithm.
TrialResult run_trial(const ExperimentConfig& config, const Scenario& scenario,
                      const WcParams& wc, const McgParams& mcg_cmv,
                      const McgParams& mcg_ccm, int num_snapshots,
                      const std::vector<int>& checkpoints, std::uint64_t trial_seed,
                      std::uint64_t mismatch_seed) {
    const ArrayGeometry geom = scenario.geometry;
    const double presumed_doa = [&] {
        for (const auto& src : scenario.segments.front().sources)
            if (src.is_desired) return src.doa_deg;
        throw std::logic_error("no desired source");
    }();
    const CVector a = steering_vector(geom, presumed_doa);

    std::mt19937_64 mismatch_rng(mismatch_seed);
    const CVector a1 = realize_mismatch(scenario.mismatch, geom, presumed_doa, mismatch_rng);

    std::vector<SegmentTruth> truth;
    for (const auto& seg : scenario.segments) truth.push_back(segment_truth(scenario, seg, a1));

    std::mt19937_64 rng(trial_seed);
    SnapshotStream stream(scenario, a1, std::mt19937_64(rng()));

    struct AlgRunner {
        Algorithm alg;
        WcState wc_state;
        McgState mcg_state;
        CMatrix smi_sum;
    };
    std::vector<AlgRunner> runners;
    for (Algorithm alg : config.algorithms) {
        AlgRunner r;
        r.alg = alg;
        switch (alg) {
            case Algorithm::WcCcm: r.wc_state = wc_init(WcVariant::Ccm, a, wc); break;
            case Algorithm::WcCmv: r.wc_state = wc_init(WcVariant::Cmv, a, wc); break;
            case Algorithm::RcmvMcg: r.mcg_state = mcg_cmv_init(a, mcg_cmv); break;
            case Algorithm::RccmMcg: r.mcg_state = mcg_ccm_init(a, mcg_ccm); break;
            case Algorithm::LoadedSmi:
                r.smi_sum = CMatrix::Zero(geom.num_sensors, geom.num_sensors);
                break;
            case Algorithm::Optimal: break;
        }
        runners.push_back(std::move(r));
    }

    TrialResult result;
    result.sinr.assign(runners.size(), std::vector<double>(checkpoints.size(), 0.0));
    std::size_t next_cp = 0;
    for (int i = 1; i <= num_snapshots; ++i) {
        const CVector x = stream.next();
        const int seg = scenario.segment_at(i);
        for (auto& r : runners) {
            switch (r.alg) {
                case Algorithm::WcCcm:
                case Algorithm::WcCmv:
                    wc_adapt_step(r.wc_state, x, a, wc);
                    break;
                case Algorithm::RcmvMcg:
                    mcg_cmv_step(r.mcg_state, x, a, mcg_cmv);
                    break;
                case Algorithm::RccmMcg:
                    mcg_ccm_step(r.mcg_state, x, r.mcg_state.w.dot(x), a, mcg_ccm);
                    break;
                case Algorithm::LoadedSmi:
                    r.smi_sum += x * x.adjoint();
                    break;
                case Algorithm::Optimal: break;
            }
        }
        if (next_cp < checkpoints.size() && checkpoints[next_cp] == i) {
            const SegmentTruth& t = truth[seg];
            for (std::size_t k = 0; k < runners.size(); ++k) {
                auto& r = runners[k];
                double val = 0.0;
                switch (r.alg) {
                    case Algorithm::WcCcm:
                    case Algorithm::WcCmv:
                        val = sinr_db(r.wc_state.w, t.r_s, t.r_in);
                        break;
                    case Algorithm::RcmvMcg:
                    case Algorithm::RccmMcg:
                        val = r.mcg_state.w.norm() > 0.0
                                  ? sinr_db(r.mcg_state.w, t.r_s, t.r_in)
                                  : -100.0;
                        break;
                    case Algorithm::LoadedSmi:
                        val = sinr_db(loaded_smi_weights(r.smi_sum / i, a,
                                                         scenario.sigma_n2()),
                                      t.r_s, t.r_in);
                        break;
                    case Algorithm::Optimal:
                        val = optimal_sinr_db(t.a1, scenario.sigma_s2(), t.r_in);
                        break;
                }
                result.sinr[k][next_cp] = val;
            }
            ++next_cp;
        }
    }
    for (auto& r : runners)
        if ((r.alg == Algorithm::WcCcm || r.alg == Algorithm::WcCmv) && wc_abort(r.wc_state))
            result.aborted = true;
    return result;
}

struct Aggregate {
    double mean = 0.0;
    double stddev = 0.0;
    int n = 0;
};

Aggregate aggregate(const std::vector<double>& vals) {
    Aggregate a;
    a.n = static_cast<int>(vals.size());
    if (a.n == 0) return a;
    double sum = 0.0;
    for (double v : vals) sum += v;
    a.mean = sum / a.n;
    double ss = 0.0;
    for (double v : vals) ss += (v - a.mean) * (v - a.mean);
    a.stddev = a.n > 1 ? std::sqrt(ss / (a.n - 1)) : 0.0;
    return a;
}

// Run all trials of one sweep point; returns per-algorithm per-checkpoint stats.
std::vector<TrialResult> run_trials(const ExperimentConfig& config, const Scenario& scenario,
                                    const WcParams& wc, const McgParams& mcg_cmv,
                                    const McgParams& mcg_ccm, int num_snapshots,
                                    const std::vector<int>& checkpoints) {
    std::vector<std::future<TrialResult>> futures;
    futures.reserve(config.trials);
    for (int t = 0; t < config.trials; ++t) {
        const std::uint64_t trial_seed = config.seed ^ static_cast<std::uint64_t>(t);
        const std::uint64_t mismatch_seed =
            config.mismatch.resample_per_trial ? trial_seed ^ 0x6d69736dULL
                                               : config.seed ^ 0x6d69736dULL;
        futures.push_back(std::async(std::launch::async, [&, trial_seed, mismatch_seed] {
            return run_trial(config, scenario, wc, mcg_cmv, mcg_ccm, num_snapshots,
                             checkpoints, trial_seed, mismatch_seed);
        }));
    }
    std::vector<TrialResult> out;
    out.reserve(config.trials);
    for (auto& f : futures) out.push_back(f.get());
    return out;
}

} // namespace

CVector loaded_smi_weights(const CMatrix& sample_cov, const CVector& a, double sigma_n2) {
    const CMatrix loaded =
        sample_cov + 10.0 * sigma_n2 * CMatrix::Identity(a.size(), a.size());
    return loaded.llt().solve(a);
}

ExperimentResult run_experiment(const ExperimentConfig& config) {
    config.validate();
    ExperimentResult result;
    const std::string exp_name = to_string(config.kind);

    McgParams mcg_cmv = config.mcg;
    mcg_cmv.mu_lambda = config.mu_lambda_cmv;
    McgParams mcg_ccm = config.mcg;
    mcg_ccm.mu_lambda = config.mu_lambda_ccm;

    auto emit_point = [&](const std::vector<TrialResult>& trials, double x_value,
                          std::size_t checkpoint) {
        for (std::size_t k = 0; k < config.algorithms.size(); ++k) {
            std::vector<double> vals;
            for (const auto& tr : trials)
                if (!tr.aborted) vals.push_back(tr.sinr[k][checkpoint]);
            const Aggregate agg = aggregate(vals);
            result.rows.push_back({exp_name, to_string(config.algorithms[k]), x_value,
                                   agg.mean, agg.stddev, agg.n});
        }
    };

    auto count_excluded = [&](const std::vector<TrialResult>& trials) {
        long excluded = 0;
        for (const auto& tr : trials)
            if (tr.aborted) ++excluded;
        result.excluded_trials += excluded;
        if (config.trials - excluded < std::max(1, config.trials / 2))
            result.abort_threshold_exceeded = true;
    };

    if (config.kind == ExperimentKind::SinrVsSnapshots) {
        const Scenario scenario = config.build_scenario(config.snr_db);
        const int n = std::min(config.snapshots, scenario.total_snapshots());
        std::vector<int> checkpoints;
        for (int i = config.eval_stride; i <= n; i += config.eval_stride)
            checkpoints.push_back(i);
        if (checkpoints.empty() || checkpoints.back() != n) checkpoints.push_back(n);
        WcParams wc = config.wc;
        wc.sigma_n2 = scenario.sigma_n2();
        const auto trials = run_trials(config, scenario, wc, mcg_cmv, mcg_ccm, n, checkpoints);
        count_excluded(trials);
        for (std::size_t cp = 0; cp < checkpoints.size(); ++cp)
            emit_point(trials, static_cast<double>(checkpoints[cp]), cp);
    } else {
        std::vector<double> sweep = config.sweep;
        if (sweep.empty())
            throw std::invalid_argument("sweep experiment needs experiment.sweep values");
        for (double x : sweep) {
            double snr = config.snr_db;
            WcParams wc = config.wc;
            McgParams cmv = mcg_cmv, ccm = mcg_ccm;
            if (config.kind == ExperimentKind::SinrVsSnr) {
                snr = x;
            } else if (config.kind == ExperimentKind::SinrVsEpsilon) {
                wc.epsilon = x;
                cmv.epsilon_tilde = x;
                ccm.epsilon_tilde = x;
            } else { // gamma sweep
                wc.gamma = x;
                ccm.gamma = x;
            }
            const Scenario scenario = config.build_scenario(snr);
            wc.sigma_n2 = scenario.sigma_n2();
            const int n = std::min(config.snapshots, scenario.total_snapshots());
            const std::vector<int> checkpoints = {n};
            const auto trials =
                run_trials(config, scenario, wc, cmv, ccm, n, checkpoints);
            count_excluded(trials);
            emit_point(trials, x, 0);
        }
    }

    std::stable_sort(result.rows.begin(), result.rows.end(),
                     [](const ResultRow& a, const ResultRow& b) {
                         if (a.algorithm != b.algorithm) return a.algorithm < b.algorithm;
                         return a.x_value < b.x_value;
                     });
    return result;
}

// ---------------------------------------------------------------------------
// output

std::string format_csv(const std::vector<ResultRow>& rows) {
    if (rows.empty()) throw std::invalid_argument("emit_csv: no rows");
    std::ostringstream os;
    os << "experiment,algorithm,x_value,sinr_db_mean,sinr_db_std,trials\n";
    for (const auto& r : rows) {
        char buf[160];
        std::snprintf(buf, sizeof buf, "%s,%s,%.10g,%.10g,%.10g,%d\n",
                      r.experiment.c_str(), r.algorithm.c_str(), r.x_value,
                      r.sinr_db_mean, r.sinr_db_std, r.trials);
        os << buf;
    }
    return os.str();
}

void emit_csv(const std::vector<ResultRow>& rows, const std::string& path) {
    const std::string text = format_csv(rows);
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
    if (!out) throw std::runtime_error("write failed: " + path);
}

void emit_plot_script(const std::vector<ResultRow>& rows, const std::string& csv_path,
                      const std::string& out_path) {
    if (rows.empty()) throw std::invalid_argument("emit_plot_script: no rows");
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot write " + out_path);
    out << "#!/usr/bin/env python3\n"
        << "# Renders " << csv_path << ": one SINR curve per algorithm.\n"
        << "import csv\n"
        << "from collections import defaultdict\n"
        << "import matplotlib.pyplot as plt\n\n"
        << "curves = defaultdict(list)\n"
        << "with open(" << '"' << csv_path << '"' << ") as fh:\n"
        << "    for row in csv.DictReader(fh):\n"
        << "        curves[row[\"algorithm\"]].append(\n"
        << "            (float(row[\"x_value\"]), float(row[\"sinr_db_mean\"])))\n\n"
        << "for name, pts in sorted(curves.items()):\n"
        << "    pts.sort()\n"
        << "    plt.plot([p[0] for p in pts], [p[1] for p in pts], label=name)\n"
        << "plt.xlabel(\"" << (rows.front().experiment) << "\")\n"
        << "plt.ylabel(\"SINR (dB)\")\n"
        << "plt.legend()\n"
        << "plt.grid(True)\n"
        << "plt.savefig(\"" << csv_path << ".png\", dpi=150)\n";
    if (!out) throw std::runtime_error("write failed: " + out_path);
}

} // namespace beamform
