// SPDX-License-Identifier: Apache-2.0
//
// Exponentially windowed second-order statistics and the factorization /
// real-embedding transforms shared by the adaptive designs.
#ifndef BEAMFORM_ESTIMATORS_HPP
#define BEAMFORM_ESTIMATORS_HPP

#include "beamform/linalg.hpp"

namespace beamform {

/// R_hat(i) = mu R_hat(i-1) + weight * x x^H, plus the matching d recursion
/// for the constant modulus estimates. Hermitian symmetry is re-enforced
/// after every update; drift otherwise accumulates over long runs.
struct WindowedEstimates {
    CMatrix r_hat;
    CVector d_hat;
    double mu = 0.995;
    long count = 0;

    static WindowedEstimates identity_init(int m, double scale, double mu);
};

/// R_hat(i) = mu R_hat(i-1) + x x^H
void update_rxx(WindowedEstimates& est, const CVector& x);

/// R_a(i) = mu R_a(i-1) + |y|^2 x x^H ;  d(i) = mu d(i-1) + x y*
/// with y = w^H(i-1) x(i) supplied by the caller.
void update_ra_d(WindowedEstimates& est, const CVector& x, Complex y);

/// Upper-triangular factor U with U^H U = R. On a non-PD pivot a single
/// jitter retry of 1e-10 * trace(R)/M * I is attempted; a second failure
/// throws.
CMatrix cholesky_upper(const CMatrix& r);

/// Real-valued dual-size embedding of the factor, the CM cross vector and
/// the presumed steering vector:
///   r_acr = [Re R  -Im R; Im R  Re R],  a_breve = [Re a; Im a],
///   a_bar = [Im a; -Re a],  d_r = [Re d; Im d].
/// For any complex w with w_breve = [Re w; Im w]:
///   ||w_breve|| = ||w||  and  w_breve^T r_acr^T r_acr w_breve = w^H R^H R w.
struct RealEmbedding {
    RMatrix r_acr;
    RVector d_r;
    RVector a_breve;
    RVector a_bar;
};

RealEmbedding embed_real(const CMatrix& r_ac, const CVector& d, const CVector& a);

RVector embed_vector(const CVector& w);
CVector unembed_vector(const RVector& w_breve);

} // namespace beamform

#endif
