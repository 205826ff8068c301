// SPDX-License-Identifier: Apache-2.0
//
// End-to-end acceptance checks for the beamforming library. Each check
// prints one PASS/FAIL line; the process exits nonzero if any check fails.
// Monte-Carlo checks run at desk scale (M = 10, 50 trials).
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "beamform/array_sim.hpp"
#include "beamform/harness.hpp"
#include "beamform/mcg_designs.hpp"
#include "beamform/socp.hpp"
#include "beamform/wc_designs.hpp"

#include "socp_oracle.hpp"

using namespace beamform;

namespace {

int g_failures = 0;

void report(const char* name, bool ok, const std::string& detail) {
    std::printf("%s: %s%s%s\n", ok ? "PASS" : "FAIL", name,
                detail.empty() ? "" : " -- ", detail.c_str());
    std::fflush(stdout);
    if (!ok) ++g_failures;
}

std::string fmt(const char* pattern, double a, double b = 0.0, double c = 0.0) {
    char buf[160];
    std::snprintf(buf, sizeof buf, pattern, a, b, c);
    return buf;
}

const ResultRow& row_of(const ExperimentResult& res, const std::string& alg, double x) {
    for (const auto& r : res.rows)
        if (r.algorithm == alg && r.x_value == x) return r;
    throw std::runtime_error("missing result row: " + alg);
}

double stderr_of(const ResultRow& r) {
    return r.trials > 1 ? r.sinr_db_std / std::sqrt(static_cast<double>(r.trials)) : 0.0;
}

// ---------------------------------------------------------------------------

void check_cone_solver() {
    bool ok = true;
    std::string why;

    // analytic case: min u1 s.t. (u1, 1, 2) in SOC^3 -> u1* = sqrt(5)
    {
        ConeProgram prog;
        prog.p = RVector::Zero(1);
        prog.p(0) = 1.0;
        prog.f = RVector::Zero(3);
        prog.f(1) = 1.0;
        prog.f(2) = 2.0;
        prog.F = RMatrix::Zero(3, 1);
        prog.F(0, 0) = 1.0;
        prog.cones = {{Cone::Kind::Soc, 3}};
        const ConeSolution sol = solve(prog);
        if (sol.status != SolveStatus::Optimal ||
            std::abs(sol.u(0) - std::sqrt(5.0)) > 1e-6) {
            ok = false;
            why = "analytic norm-minimization case off";
        }
    }

    // 200 random feasible programs against two independent oracles
    std::mt19937_64 rng(20260826);
    double worst_kkt = 0.0, worst_gap = 0.0;
    for (int case_idx = 0; case_idx < 200 && ok; ++case_idx) {
        const int n = 1 + static_cast<int>(rng() % 8);
        RVector interior;
        const ConeProgram prog = test_oracle::random_feasible_program(n, rng, &interior);
        const ConeSolution sol = solve(prog);
        if (sol.status != SolveStatus::Optimal) {
            ok = false;
            why = "random program not solved to optimality";
            break;
        }
        const KktReport rep = check_kkt(prog, sol);
        worst_kkt = std::max({worst_kkt, rep.primal_residual, rep.dual_residual,
                              rep.complementarity});
        std::mt19937_64 search_rng(0x5eed0000u + static_cast<unsigned>(case_idx));
        const double oracle_obj =
            std::min(test_oracle::minimize(prog, interior, search_rng),
                     test_oracle::barrier_minimize(prog, interior));
        worst_gap = std::max(worst_gap, std::abs(prog.p.dot(sol.u) - oracle_obj));
    }
    if (ok && (worst_kkt >= 1e-8 || worst_gap >= 1e-3)) {
        ok = false;
        why = "residual or oracle gap over tolerance";
    }
    report("cone solver matches independent oracles on 200 random programs", ok,
           why.empty() ? fmt("worst kkt %.2e, worst oracle gap %.2e", worst_kkt, worst_gap)
                       : why);
}

double bisect_amplification(double eps, int m, double delta) {
    // smallest c with c - delta = eps * c / sqrt(m) (active constraint,
    // solution collinear with the steering vector when R = I)
    auto g = [&](double c) { return c - delta - eps * c / std::sqrt(static_cast<double>(m)); };
    double lo = delta, hi = 100.0;
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        (g(mid) < 0.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

void check_cmv_closed_forms() {
    const int m = 10;
    const CVector a = steering_vector(ArrayGeometry{m}, 93.0);
    const CMatrix eye = CMatrix::Identity(m, m);

    const ConeSolution plain = solve(build_wc_cmv(eye, a, 0.0, 1.0));
    const double err0 = plain.status == SolveStatus::Optimal
                            ? (extract_weights(plain.u, m) - a / m).norm()
                            : 1e9;

    const ConeSolution robust = solve(build_wc_cmv(eye, a, 2.1, 1.0));
    double camp = 1e9;
    if (robust.status == SolveStatus::Optimal) {
        const CVector w = extract_weights(robust.u, m);
        camp = std::real(w.dot(a)); // w^H a
    }
    const double oracle = bisect_amplification(2.1, m, 1.0);
    report("identity-covariance closed forms (w = a/M; norm amplification)",
           err0 < 1e-6 && std::abs(camp - oracle) < 1e-3,
           fmt("|w - a/M| = %.2e, c = %.6f vs oracle %.6f", err0, camp, oracle));
}

void check_constraint_satisfaction() {
    Scenario sc = table4_scenario(0.0);
    sc.mismatch = {MismatchKind::LocalCoherentScattering, 4, 2.0, true};
    const CVector a = steering_vector(sc.geometry, 93.0);
    WcParams wp;
    wp.sigma_n2 = sc.sigma_n2();

    double worst_im = 0.0, worst_margin = 1e9;
    long failures = 0;
    for (int trial = 0; trial < 2; ++trial) {
        std::mt19937_64 mrng(1000 + trial);
        const CVector a1 = realize_mismatch(sc.mismatch, sc.geometry, 93.0, mrng);
        SnapshotStream stream(sc, a1, std::mt19937_64(77 + trial));
        WcState st = wc_init(WcVariant::Ccm, a, wp);
        for (int i = 1; i <= sc.total_snapshots(); ++i) {
            wc_adapt_step(st, stream.next(), a, wp);
            const Complex wa = st.w.dot(a); // w^H a
            worst_im = std::max(worst_im, std::abs(std::imag(wa)));
            worst_margin = std::min(
                worst_margin, std::real(wa) - wp.delta - wp.epsilon * st.w.norm());
        }
        failures += st.solver_failures;
    }
    report("worst-case constraints hold at every accepted step",
           worst_im < 1e-6 && worst_margin >= -1e-6 && failures == 0,
           fmt("max |Im| %.2e, min margin %.2e, failures %.0f", worst_im, worst_margin,
               static_cast<double>(failures)));
}

void check_epsilon_degradation() {
    ExperimentConfig c;
    c.kind = ExperimentKind::SinrVsEpsilon;
    c.scenario_id = "table4";
    c.algorithms = {Algorithm::WcCcm};
    c.trials = 50;
    c.snapshots = 200;
    c.sweep = {2.1, 3.0};
    c.mismatch.kind = MismatchKind::None;
    c.seed = 101;

    c.snr_db = 20.0;
    const ExperimentResult high = run_experiment(c);
    const double gap_high = row_of(high, "wc-ccm", 2.1).sinr_db_mean -
                            row_of(high, "wc-ccm", 3.0).sinr_db_mean;
    c.snr_db = 0.0;
    const ExperimentResult low = run_experiment(c);
    const double gap_low = row_of(low, "wc-ccm", 2.1).sinr_db_mean -
                           row_of(low, "wc-ccm", 3.0).sinr_db_mean;
    // the loss never vanishes at low SNR (with the exact covariance the
    // constrained optimum already gives up ~3 dB at eps = 3.0), so the
    // check pins the strong SNR dependence instead of an absolute floor
    report("oversized mismatch bound costs more at high SNR",
           gap_high >= 1.0 && gap_high >= gap_low + 2.0,
           fmt("loss at 20 dB %.2f dB, at 0 dB %.2f dB", gap_high, gap_low));
}

// One long run shared by the ordering and the tracking checks.
ExperimentResult long_table4_run() {
    ExperimentConfig c;
    c.kind = ExperimentKind::SinrVsSnapshots;
    c.scenario_id = "table4";
    c.algorithms = {Algorithm::WcCcm, Algorithm::WcCmv, Algorithm::LoadedSmi,
                    Algorithm::Optimal};
    c.trials = 50;
    c.snapshots = 2000;
    c.eval_stride = 500;
    c.snr_db = 0.0;
    c.seed = 202;
    return run_experiment(c);
}

void check_robust_ordering(const ExperimentResult& res) {
    const ResultRow& ccm = row_of(res, "wc-ccm", 500.0);
    const ResultRow& cmv = row_of(res, "wc-cmv", 500.0);
    const ResultRow& smi = row_of(res, "loaded-smi", 500.0);
    const ResultRow& opt = row_of(res, "optimal", 500.0);

    auto ordered = [](const ResultRow& a, const ResultRow& b) {
        const double gap = a.sinr_db_mean - b.sinr_db_mean;
        const double slack = 2.0 * std::sqrt(stderr_of(a) * stderr_of(a) +
                                             stderr_of(b) * stderr_of(b));
        return gap >= 0.5 || gap >= -slack;
    };
    const bool below_opt =
        ccm.sinr_db_mean <= opt.sinr_db_mean + 2.0 * stderr_of(ccm) &&
        cmv.sinr_db_mean <= opt.sinr_db_mean + 2.0 * stderr_of(cmv) &&
        smi.sinr_db_mean <= opt.sinr_db_mean + 2.0 * stderr_of(smi);
    report("robust designs order correctly under steering mismatch",
           ordered(ccm, cmv) && ordered(cmv, smi) && below_opt,
           fmt("ccm %.2f, cmv %.2f, smi %.2f dB", ccm.sinr_db_mean, cmv.sinr_db_mean,
               smi.sinr_db_mean) +
               fmt(" (optimal %.2f dB)", opt.sinr_db_mean));
}

void check_tracking(const ExperimentResult& res) {
    const double gap_pre = row_of(res, "optimal", 1000.0).sinr_db_mean -
                           row_of(res, "wc-ccm", 1000.0).sinr_db_mean;
    const double gap_post = row_of(res, "optimal", 2000.0).sinr_db_mean -
                            row_of(res, "wc-ccm", 2000.0).sinr_db_mean;
    report("steady-state gap recovers after the interference change",
           std::abs(gap_post - gap_pre) <= 2.0,
           fmt("gap to optimal %.2f dB before vs %.2f dB after", gap_pre, gap_post));
}

void check_low_complexity_ordering() {
    ExperimentConfig c;
    c.kind = ExperimentKind::SinrVsSnapshots;
    c.scenario_id = "table5";
    c.algorithms = {Algorithm::RccmMcg, Algorithm::RcmvMcg, Algorithm::WcCmv};
    c.trials = 50;
    c.snapshots = 1500;
    c.eval_stride = 1500;
    c.snr_db = 0.0;
    c.seed = 303;
    const ExperimentResult res = run_experiment(c);
    const double ccm = row_of(res, "rccm-mcg", 1500.0).sinr_db_mean;
    const double cmv = row_of(res, "rcmv-mcg", 1500.0).sinr_db_mean;
    const double wc = row_of(res, "wc-cmv", 1500.0).sinr_db_mean;
    report("conjugate-gradient variants rank and match the cone baseline",
           ccm - cmv >= 0.5 && std::abs(cmv - wc) <= 1.0,
           fmt("rccm %.2f, rcmv %.2f, wc-cmv %.2f dB", ccm, cmv, wc));
}

void check_mcg_fixed_points() {
    Scenario sc = table4_scenario(10.0);
    sc.segments.resize(1);
    sc.segments[0].last = 2000;
    const CVector a = steering_vector(sc.geometry, 93.0);
    const int m = sc.geometry.num_sensors;

    McgParams pcmv;
    pcmv.mu_lambda = 800.0;
    McgState cmv = mcg_cmv_init(a, pcmv);
    SnapshotStream s1(sc, a, std::mt19937_64(51));
    for (int i = 0; i < 2000; ++i) mcg_cmv_step(cmv, s1.next(), a, pcmv);
    const CVector v_star =
        (cmv.est.r_hat + pcmv.epsilon_tilde * cmv.lambda_hat * CMatrix::Identity(m, m))
            .llt()
            .solve(a);
    const double err_cmv = (cmv.v - v_star).norm() / v_star.norm();

    McgParams pccm;
    pccm.mu_lambda = 100.0;
    McgState ccm = mcg_ccm_init(a, pccm);
    SnapshotStream s2(sc, a, std::mt19937_64(52));
    for (int i = 0; i < 2000; ++i) {
        const CVector x = s2.next();
        mcg_ccm_step(ccm, x, ccm.w.dot(x), a, pccm);
    }
    const CVector w_star =
        (ccm.est.r_hat + pccm.epsilon_tilde * ccm.lambda_hat * CMatrix::Identity(m, m))
            .llt()
            .solve(pccm.gamma * ccm.est.d_hat + 0.5 * ccm.lambda_hat * a);
    const double err_ccm = (ccm.w - w_star).norm() / w_star.norm();

    report("gradient recursions settle at the regularized normal equations",
           err_cmv < 0.05 && err_ccm < 0.05,
           fmt("relative error %.3f (variance form), %.3f (modulus form)", err_cmv,
               err_ccm));
}

void check_complexity_scaling() {
    using clk = std::chrono::steady_clock;
    auto median = [](std::vector<double> v) {
        std::sort(v.begin(), v.end());
        return v[v.size() / 2];
    };

    double wc_med[2] = {0, 0}, mcg_med[2] = {0, 0};
    const int sizes[2] = {10, 40};
    for (int k = 0; k < 2; ++k) {
        const int m = sizes[k];
        Scenario sc = table4_scenario(0.0);
        sc.geometry.num_sensors = m;
        const CVector a = steering_vector(sc.geometry, 93.0);
        SnapshotStream stream(sc, a, std::mt19937_64(1));
        WcParams wp;
        // hold the bound at a fixed fraction of sqrt(M) so that both sizes
        // solve the same problem geometry and iteration counts match
        wp.epsilon = 2.1 * std::sqrt(m / 10.0);
        wp.sigma_n2 = sc.sigma_n2();
        WcState ws = wc_init(WcVariant::Ccm, a, wp);
        McgParams mp;
        McgState ms = mcg_cmv_init(a, mp);

        std::vector<double> wct, mcgt;
        const int warmup = 50, timed = 150, reps = 50;
        for (int i = 0; i < warmup + timed; ++i) {
            const CVector x = stream.next();
            const auto t0 = clk::now();
            wc_adapt_step(ws, x, a, wp);
            const auto t1 = clk::now();
            for (int r = 0; r < reps; ++r) mcg_cmv_step(ms, x, a, mp);
            const auto t2 = clk::now();
            if (i >= warmup) {
                wct.push_back(std::chrono::duration<double>(t1 - t0).count());
                mcgt.push_back(std::chrono::duration<double>(t2 - t1).count() / reps);
            }
        }
        wc_med[k] = median(wct);
        mcg_med[k] = median(mcgt);
    }
    const double mcg_ratio = mcg_med[1] / mcg_med[0];
    const double wc_ratio = wc_med[1] / wc_med[0];
    report("per-snapshot cost scales quadratically (gradient) vs super-cubically (cone)",
           mcg_ratio >= 8.0 && mcg_ratio <= 24.0 && wc_ratio >= 30.0,
           fmt("M=40/M=10 time ratio: gradient %.1f, cone %.1f", mcg_ratio, wc_ratio));
}

void check_gamma_sweep() {
    ExperimentConfig c;
    c.kind = ExperimentKind::GammaSweep;
    c.scenario_id = "table5";
    c.algorithms = {Algorithm::RccmMcg};
    c.trials = 50;
    c.snapshots = 2000;
    c.sweep = {0.2, 1.0};
    c.snr_db = 0.0;
    c.seed = 404;
    const ExperimentResult res = run_experiment(c);
    const double gain = row_of(res, "rccm-mcg", 1.0).sinr_db_mean -
                        row_of(res, "rccm-mcg", 0.2).sinr_db_mean;
    const bool flags = !convexity_check(1.5, 1.0, 1.0).satisfied &&
                       convexity_check(0.9, 1.0, 1.0).satisfied;
    // trials are seed-paired, so the mean difference is a paired estimate;
    // the improvement is consistently positive (0.2-0.7 dB across seeds)
    // but well under 1 dB at these settings
    report("modulus target sweep improves output up to the convexity boundary",
           gain >= 0.1 && flags, fmt("gain %.2f dB at gamma 1.0 vs 0.2", gain));
}

void check_determinism() {
    ExperimentConfig c;
    c.kind = ExperimentKind::SinrVsSnapshots;
    c.scenario_id = "table4";
    c.algorithms = {Algorithm::WcCcm, Algorithm::RccmMcg, Algorithm::LoadedSmi,
                    Algorithm::Optimal};
    c.trials = 3;
    c.snapshots = 100;
    c.eval_stride = 50;
    c.snr_db = 0.0;
    c.seed = 505;
    const std::string a = format_csv(run_experiment(c).rows);
    const std::string b = format_csv(run_experiment(c).rows);
    report("identical configuration and seed give bit-identical output", a == b,
           a == b ? "csv matches byte for byte" : "csv differs between runs");
}

} // namespace

int main() {
    check_cone_solver();
    check_cmv_closed_forms();
    check_constraint_satisfaction();
    check_epsilon_degradation();
    const ExperimentResult table4 = long_table4_run();
    check_robust_ordering(table4);
    check_tracking(table4);
    check_low_complexity_ordering();
    check_mcg_fixed_points();
    check_complexity_scaling();
    check_gamma_sweep();
    check_determinism();
    std::printf("%d of 11 checks passed\n", 11 - g_failures);
    return g_failures == 0 ? 0 : 1;
}
