// SPDX-License-Identifier: Apache-2.0
#include "beamform/wc_designs.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace beamform {

namespace {

void require_feasible_epsilon(double epsilon, int m) {
    if (epsilon < 0.0) throw std::invalid_argument("epsilon must be nonnegative");
    if (epsilon >= std::sqrt(static_cast<double>(m)))
        throw std::invalid_argument(
            "epsilon >= sqrt(M): no w can satisfy the worst-case constraint");
}

// Shared tail: robustness cone rows followed by the Im{w^H a} = 0 hyperplane.
//   rows [off]            : -delta + a_breve^T w_breve
//   rows [off+1 .. off+2M]: eps * w_breve
//   row  [off+2M+1]       : a_bar^T w_breve
void fill_constraint_rows(ConeProgram& prog, int off, const RealEmbedding& e,
                          double epsilon, double delta) {
    const int n2 = static_cast<int>(e.a_breve.size());
    prog.f(off) = -delta;
    prog.F.row(off).tail(n2) = e.a_breve.transpose();
    prog.F.block(off + 1, 1, n2, n2) = epsilon * RMatrix::Identity(n2, n2);
    prog.F.row(off + 1 + n2).tail(n2) = e.a_bar.transpose();
}

} // namespace

ConeProgram build_wc_cmv(const CMatrix& r_hat, const CVector& a, double epsilon,
                         double delta) {
    const int m = static_cast<int>(a.size());
    require_feasible_epsilon(epsilon, m);
    const CMatrix r_ac = cholesky_upper(r_hat);
    const RealEmbedding e = embed_real(r_ac, CVector::Zero(m), a);

    const int n = 2 * m + 1;       // [tau, w_breve]
    const int rows = 4 * m + 3;    // (2M+1) + (2M+1) + 1
    ConeProgram prog;
    prog.p = RVector::Zero(n);
    prog.p(0) = 1.0;
    prog.f = RVector::Zero(rows);
    prog.F = RMatrix::Zero(rows, n);

    // first cone: tau >= || R_acr w_breve ||
    prog.F(0, 0) = 1.0;
    prog.F.block(1, 1, 2 * m, 2 * m) = e.r_acr;
    fill_constraint_rows(prog, 2 * m + 1, e, epsilon, delta);

    prog.cones = {{Cone::Kind::Soc, 2 * m + 1},
                  {Cone::Kind::Soc, 2 * m + 1},
                  {Cone::Kind::Zero, 1}};
    return prog;
}

ConeProgram build_wc_ccm(const CMatrix& r_a_hat, const CVector& d_hat, const CVector& a,
                         double epsilon, double delta, double gamma) {
    const int m = static_cast<int>(a.size());
    require_feasible_epsilon(epsilon, m);
    const CMatrix r_ac = cholesky_upper(r_a_hat);
    const RealEmbedding e = embed_real(r_ac, d_hat, a);

    const int n = 2 * m + 1;
    const int rows = 4 * m + 4;    // (2M+2) + (2M+1) + 1
    ConeProgram prog;
    prog.p = RVector::Zero(n);
    prog.p(0) = 1.0;
    prog.f = RVector::Zero(rows);
    prog.F = RMatrix::Zero(rows, n);

    // rotated quadratic epigraph:
    //   1/2 + tau/2 + gamma d_r^T w >= || [1/2 - tau/2 - gamma d_r^T w ; R_acr w] ||
    prog.f(0) = 0.5;
    prog.F(0, 0) = 0.5;
    prog.F.row(0).tail(2 * m) = gamma * e.d_r.transpose();
    prog.f(1) = 0.5;
    prog.F(1, 0) = -0.5;
    prog.F.row(1).tail(2 * m) = -gamma * e.d_r.transpose();
    prog.F.block(2, 1, 2 * m, 2 * m) = e.r_acr;
    fill_constraint_rows(prog, 2 * m + 2, e, epsilon, delta);

    prog.cones = {{Cone::Kind::Soc, 2 * m + 2},
                  {Cone::Kind::Soc, 2 * m + 1},
                  {Cone::Kind::Zero, 1}};
    return prog;
}

CVector extract_weights(const RVector& u, int m) {
    CVector w(m);
    for (int k = 0; k < m; ++k) w(k) = Complex(u(1 + k), u(1 + m + k));
    return w;
}

WcState wc_init(WcVariant variant, const CVector& a, const WcParams& params) {
    WcState state;
    state.variant = variant;
    state.w = a / static_cast<double>(a.size());
    state.est = WindowedEstimates::identity_init(static_cast<int>(a.size()),
                                                 params.sigma_n2, params.mu);
    return state;
}

void wc_adapt_step(WcState& state, const CVector& x, const CVector& a,
                   const WcParams& params, const SolverSettings& settings) {
    ++state.steps;
    ConeProgram prog;
    if (state.variant == WcVariant::Ccm) {
        const Complex y = state.w.dot(x); // w^H(i-1) x(i)
        update_ra_d(state.est, x, y);
        // scale the quadratic and linear terms together: the objective is
        // multiplied by a constant, the argmin is unchanged, and the cone
        // program stays well conditioned as the windowed sums grow
        const double scale =
            state.est.r_hat.trace().real() / static_cast<double>(a.size());
        const double inv = scale > 0.0 ? 1.0 / scale : 1.0;
        prog = build_wc_ccm(inv * state.est.r_hat, inv * state.est.d_hat, a,
                            params.epsilon, params.delta, params.gamma);
    } else {
        update_rxx(state.est, x);
        const double scale =
            state.est.r_hat.trace().real() / static_cast<double>(a.size());
        const double inv = scale > 0.0 ? 1.0 / scale : 1.0;
        prog = build_wc_cmv(inv * state.est.r_hat, a, params.epsilon, params.delta);
    }
    const ConeSolution sol = solve(prog, settings);
    if (sol.status == SolveStatus::Optimal) {
        state.w = extract_weights(sol.u, static_cast<int>(a.size()));
    } else {
        ++state.solver_failures; // hold previous weights
    }
}

bool wc_abort(const WcState& state) {
    return state.steps > 0 &&
           static_cast<double>(state.solver_failures) > 0.01 * static_cast<double>(state.steps);
}

ConvexityReport convexity_check(double gamma, double delta, double sigma_s2) {
    if (gamma < 0.0 || delta < 0.0 || sigma_s2 < 0.0)
        throw std::invalid_argument("convexity_check: negative input");
    const double margin = delta * sigma_s2 - gamma;
    return {margin >= 0.0, margin};
}

EpsilonRatioReport epsilon_ratio_diagnostic(const CVector& w, const CVector& a,
                                            double epsilon, double delta) {
    const int m = static_cast<int>(a.size());
    EpsilonRatioReport rep{};
    const Complex c = w.dot(a); // w^H a
    rep.c = c.real();
    rep.bound = 1.0 / (epsilon * epsilon) - 1.0 / static_cast<double>(m);
    rep.amplification_floor = delta / (1.0 - epsilon / std::sqrt(static_cast<double>(m)));
    if (std::abs(c) < 1e-12 * w.norm() * a.norm()) {
        rep.degenerate = true;
        rep.ratio = std::numeric_limits<double>::quiet_NaN();
        return rep;
    }
    rep.degenerate = false;
    const CVector b = w - std::conj(c) * a / static_cast<double>(m);
    rep.ratio = b.squaredNorm() / std::norm(c);
    return rep;
}

} // namespace beamform
