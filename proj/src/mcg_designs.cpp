// SPDX-License-Identifier: Apache-2.0
#include "beamform/mcg_designs.hpp"

#include <cmath>
#include <stdexcept>

namespace beamform {

double epsilon_tilde_bound(int num_sensors) {
    if (num_sensors < 2) throw std::invalid_argument("need at least 2 sensors");
    return static_cast<double>(num_sensors) / 2.0;
}

void McgParams::validate(int num_sensors) const {
    if (!(epsilon_tilde > 0.0) || epsilon_tilde > epsilon_tilde_bound(num_sensors))
        throw std::invalid_argument("epsilon_tilde must lie in (0, M/2]");
    if (eta < 0.0 || eta > 0.5)
        throw std::invalid_argument("eta must lie in [0, 0.5]");
    if (!(mu > 0.0 && mu < 1.0))
        throw std::invalid_argument("forgetting factor must lie in (0, 1)");
    if (!(lambda0 > 0.0)) throw std::invalid_argument("lambda0 must be positive");
}

McgState mcg_cmv_init(const CVector& a, const McgParams& params) {
    params.validate(static_cast<int>(a.size()));
    McgState st;
    st.v = CVector::Zero(a.size());
    st.w = CVector::Zero(a.size());
    st.p = a;
    st.g = a;
    st.lambda_hat = params.lambda0;
    st.lambda_prev = params.lambda0;
    st.est = WindowedEstimates::identity_init(static_cast<int>(a.size()), params.delta,
                                              params.mu);
    return st;
}

McgState mcg_ccm_init(const CVector& a, const McgParams& params) {
    McgState st = mcg_cmv_init(a, params);
    st.w = a / static_cast<double>(a.size());
    return st;
}

double lambda_update(double lambda_hat, const CVector& w, const CVector& a,
                     const McgParams& params) {
    double dl = params.mu_lambda * (params.epsilon_tilde * w.squaredNorm() -
                                    std::real(w.dot(a)) + params.delta);
    while (dl <= -lambda_hat || dl >= params.delta_lambda_max) dl *= 0.5;
    return lambda_hat + dl;
}

namespace {

// common step-size; imaginary parts of p^H g are neglected
double step_size(const McgState& st, const CVector& p_r, const McgParams& params) {
    const double denom = std::real(st.p.dot(p_r));
    if (denom == 0.0) return 0.0;
    return (params.mu - params.eta) * std::real(st.p.dot(st.g)) / denom;
}

Complex polak_ribiere(const CVector& g_prev, const CVector& g_new) {
    const double denom = g_prev.squaredNorm();
    if (denom == 0.0) return 0.0;
    return (g_new - g_prev).dot(g_new) / denom;
}

} // namespace

void mcg_cmv_step(McgState& state, const CVector& x, const CVector& a,
                  const McgParams& params) {
    update_rxx(state.est, x);
    const CVector p_r = state.est.r_hat * state.p +
                        state.lambda_hat * params.epsilon_tilde * state.p;
    const double nu = (state.lambda_hat - params.mu * state.lambda_prev) *
                      params.epsilon_tilde;
    const double alpha = step_size(state, p_r, params);

    const CVector v_prev = state.v;
    state.v += alpha * state.p;
    const CVector g_new = (1.0 - params.mu) * a + params.mu * state.g - alpha * p_r -
                          (x * (x.dot(v_prev)) + nu * v_prev);
    const Complex beta = polak_ribiere(state.g, g_new);
    state.g = g_new;
    state.p = state.g + beta * state.p;
    state.w = state.lambda_hat * state.v / 2.0;

    state.lambda_prev = state.lambda_hat;
    state.lambda_hat = lambda_update(state.lambda_hat, state.w, a, params);
}

void mcg_ccm_step(McgState& state, const CVector& x, Complex y, const CVector& a,
                  const McgParams& params) {
    update_ra_d(state.est, x, y);
    const CVector p_r = state.est.r_hat * state.p +
                        state.lambda_hat * params.epsilon_tilde * state.p;
    const double nu = (state.lambda_hat - params.mu * state.lambda_prev) *
                      params.epsilon_tilde;
    const double alpha = step_size(state, p_r, params);

    const CVector w_prev = state.w;
    state.w += alpha * state.p;
    const CVector g_new = params.mu * state.g - alpha * p_r -
                          std::norm(y) * x * (x.dot(w_prev)) +
                          params.gamma * x * std::conj(y) +
                          nu * (a / (2.0 * params.epsilon_tilde) - w_prev);
    const Complex beta = polak_ribiere(state.g, g_new);
    state.g = g_new;
    state.p = state.g + beta * state.p;

    state.lambda_prev = state.lambda_hat;
    state.lambda_hat = lambda_update(state.lambda_hat, state.w, a, params);
}

} // namespace beamform
