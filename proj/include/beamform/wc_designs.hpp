// SPDX-License-Identifier: Apache-2.0
//
// Per-snapshot worst-case beamformer designs. build_wc_cmv encodes the
// minimum variance problem
//   min w^H R w   s.t.  Re{w^H a} - delta >= eps ||w||,  Im{w^H a} = 0
// and build_wc_ccm the constant modulus problem
//   min w^H R_a w - 2 gamma Re{d^H w}   s.t.  same constraints,
// both as dual-form cone programs solved once per snapshot.
#ifndef BEAMFORM_WC_DESIGNS_HPP
#define BEAMFORM_WC_DESIGNS_HPP

#include "beamform/estimators.hpp"
#include "beamform/socp.hpp"

namespace beamform {

struct WcParams {
    double epsilon = 2.1;  // mismatch bound, must be < sqrt(M)
    double delta = 1.0;    // distortionless level
    double gamma = 1.0;    // modulus target (CCM only)
    double mu = 0.995;     // forgetting factor
    double sigma_n2 = 1.0; // R_a(0) = sigma_n^2 I

    bool operator==(const WcParams&) const = default;
};

/// Cone layout SOC(2M+1) x SOC(2M+1) x Zero(1); u = [tau, w_breve].
ConeProgram build_wc_cmv(const CMatrix& r_hat, const CVector& a, double epsilon,
                         double delta);

/// Cone layout SOC(2M+2) x SOC(2M+1) x Zero(1); the extra first-cone row
/// carries the rotated quadratic epigraph with the -2 gamma d term.
ConeProgram build_wc_ccm(const CMatrix& r_a_hat, const CVector& d_hat, const CVector& a,
                         double epsilon, double delta, double gamma);

/// w from the solution vector u = [tau, Re w, Im w].
CVector extract_weights(const RVector& u, int m);

enum class WcVariant { Cmv, Ccm };

struct WcState {
    CVector w;
    WindowedEstimates est;
    WcVariant variant = WcVariant::Ccm;
    long solver_failures = 0;
    long steps = 0;
};

WcState wc_init(WcVariant variant, const CVector& a, const WcParams& params);

/// One Table-I step: y = w^H(i-1) x, estimate update, Cholesky, real
/// embedding, one cone solve, weight extraction. On a non-optimal solve the
/// previous w is kept and the failure counted.
void wc_adapt_step(WcState& state, const CVector& x, const CVector& a,
                   const WcParams& params, const SolverSettings& settings = {});

/// Trial abort policy: more than 1% failed solves.
bool wc_abort(const WcState& state);

struct ConvexityReport {
    bool satisfied;
    double margin; // delta * sigma_s^2 - gamma
};

ConvexityReport convexity_check(double gamma, double delta, double sigma_s2);

/// Decomposition w = c a/M + b with b orthogonal to a, and the component
/// ratio b^H b / c^2 against the bound 1/eps^2 - 1/M, plus the norm
/// amplification floor c >= delta / (1 - eps/sqrt(M)).
struct EpsilonRatioReport {
    bool degenerate;  // w nearly orthogonal to a
    double c;         // w^H a
    double ratio;     // b^H b / |c|^2
    double bound;     // 1/eps^2 - 1/M
    double amplification_floor;
};

EpsilonRatioReport epsilon_ratio_diagnostic(const CVector& w, const CVector& a,
                                            double epsilon, double delta);

} // namespace beamform

#endif
