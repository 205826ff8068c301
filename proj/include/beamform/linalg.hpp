// SPDX-License-Identifier: Apache-2.0
#ifndef BEAMFORM_LINALG_HPP
#define BEAMFORM_LINALG_HPP

#include <Eigen/Dense>
#include <complex>

namespace beamform {

using Complex = std::complex<double>;
using CVector = Eigen::VectorXcd;
using CMatrix = Eigen::MatrixXcd;
using RVector = Eigen::VectorXd;
using RMatrix = Eigen::MatrixXd;

} // namespace beamform

#endif
