// SPDX-License-Identifier: Apache-2.0
//
// Low-complexity robust designs: one modified-conjugate-gradient iteration
// per snapshot with alternating adaptation of the Lagrange multiplier.
// Per-step cost is O(M^2); no inverse or factorization is formed.
#ifndef BEAMFORM_MCG_DESIGNS_HPP
#define BEAMFORM_MCG_DESIGNS_HPP

#include "beamform/estimators.hpp"

namespace beamform {

struct McgParams {
    double epsilon_tilde = 2.1; // must satisfy 0 < eps_tilde <= M/2
    double delta = 1.0;
    double gamma = 1.0;          // CCM only
    double mu = 0.995;
    double eta = 0.25;           // step-size slack in [0, 0.5]
    double mu_lambda = 100.0;
    double delta_lambda_max = 200.0;
    double lambda0 = 1.0;

    bool operator==(const McgParams&) const = default;

    void validate(int num_sensors) const;
};

/// Largest admissible epsilon_tilde for an M-sensor array.
double epsilon_tilde_bound(int num_sensors);

struct McgState {
    CVector w;
    CVector v;           // CG weight vector (CMV only; w = lambda_hat v / 2)
    CVector p;           // direction
    CVector g;           // negative gradient
    double lambda_hat = 1.0;
    double lambda_prev = 1.0; // lambda_hat(i-1), feeds the nu term
    WindowedEstimates est;
};

McgState mcg_cmv_init(const CVector& a, const McgParams& params);
McgState mcg_ccm_init(const CVector& a, const McgParams& params);

void mcg_cmv_step(McgState& state, const CVector& x, const CVector& a,
                  const McgParams& params);

/// y = w^H(i-1) x(i), computed by the caller.
void mcg_ccm_step(McgState& state, const CVector& x, Complex y, const CVector& a,
                  const McgParams& params);

/// delta_lambda = mu_lambda [eps_tilde ||w||^2 - Re{w^H a} + delta], halved
/// while it would drive lambda nonpositive or exceed delta_lambda_max.
double lambda_update(double lambda_hat, const CVector& w, const CVector& a,
                     const McgParams& params);

} // namespace beamform

#endif
