// SPDX-License-Identifier: Apache-2.0
#include "beamform/estimators.hpp"

#include <stdexcept>

namespace beamform {

WindowedEstimates WindowedEstimates::identity_init(int m, double scale, double mu) {
    WindowedEstimates est;
    est.r_hat = scale * CMatrix::Identity(m, m);
    est.d_hat = CVector::Zero(m);
    est.mu = mu;
    est.count = 0;
    return est;
}

namespace {

void symmetrize(CMatrix& r) { r = 0.5 * (r + r.adjoint()).eval(); }

} // namespace

void update_rxx(WindowedEstimates& est, const CVector& x) {
    est.r_hat = est.mu * est.r_hat + x * x.adjoint();
    symmetrize(est.r_hat);
    ++est.count;
}

void update_ra_d(WindowedEstimates& est, const CVector& x, Complex y) {
    const double w = std::norm(y);
    est.r_hat = est.mu * est.r_hat + w * (x * x.adjoint());
    symmetrize(est.r_hat);
    est.d_hat = est.mu * est.d_hat + x * std::conj(y);
    ++est.count;
}

CMatrix cholesky_upper(const CMatrix& r) {
    Eigen::LLT<CMatrix> llt(r);
    if (llt.info() != Eigen::Success) {
        const double jitter = 1e-10 * std::real(r.trace()) / static_cast<double>(r.rows());
        CMatrix loaded = r + jitter * CMatrix::Identity(r.rows(), r.cols());
        llt.compute(loaded);
        if (llt.info() != Eigen::Success)
            throw std::runtime_error("cholesky: matrix is not positive definite");
    }
    return llt.matrixL().adjoint(); // U with U^H U = R
}

RealEmbedding embed_real(const CMatrix& r_ac, const CVector& d, const CVector& a) {
    const auto m = r_ac.rows();
    RealEmbedding e;
    e.r_acr.resize(2 * m, 2 * m);
    e.r_acr << r_ac.real(), -r_ac.imag(), r_ac.imag(), r_ac.real();
    e.d_r.resize(2 * m);
    e.d_r << d.real(), d.imag();
    e.a_breve.resize(2 * m);
    e.a_breve << a.real(), a.imag();
    e.a_bar.resize(2 * m);
    e.a_bar << a.imag(), -a.real();
    return e;
}

RVector embed_vector(const CVector& w) {
    RVector v(2 * w.size());
    v << w.real(), w.imag();
    return v;
}

CVector unembed_vector(const RVector& w_breve) {
    const auto m = w_breve.size() / 2;
    CVector w(m);
    for (Eigen::Index k = 0; k < m; ++k) w(k) = Complex(w_breve(k), w_breve(m + k));
    return w;
}

} // namespace beamform
