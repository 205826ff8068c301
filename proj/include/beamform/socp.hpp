// SPDX-License-Identifier: Apache-2.0
//
// Small dense second-order cone solver for problems in the dual cone form
//
//   minimize    p^T u
//   subject to  f + F u  in  SOC(k1) x SOC(k2) x ... x Zero(kz) x ...
//
// SOC(k): the first coordinate dominates the 2-norm of the remaining k-1.
// Zero(k): the k coordinates equal zero. Primal-dual interior-point method
// with Nesterov-Todd scaling on the SOC blocks and direct elimination of
// the Zero blocks.
#ifndef BEAMFORM_SOCP_HPP
#define BEAMFORM_SOCP_HPP

#include <string>
#include <vector>

#include "beamform/linalg.hpp"

namespace beamform {

struct Cone {
    enum class Kind { Soc, Zero };
    Kind kind;
    int dim;
};

struct ConeProgram {
    RVector p;               // objective, length n
    RVector f;               // length m
    RMatrix F;               // m x n; constraint reads f + F u in cones
    std::vector<Cone> cones; // dims sum to m

    int num_vars() const { return static_cast<int>(p.size()); }
    int num_rows() const { return static_cast<int>(f.size()); }
    void validate() const;
};

enum class SolveStatus { Optimal, Infeasible, MaxIterations };

struct SolverSettings {
    double tolerance = 1e-8;
    int max_iterations = 100;
    double step_fraction = 0.99; // fraction-to-boundary
};

struct ConeSolution {
    RVector u;
    RVector z; // dual certificate, same length as f
    SolveStatus status = SolveStatus::MaxIterations;
    double primal_residual = 0.0;
    double dual_residual = 0.0;
    double duality_gap = 0.0;
    int iterations = 0;
};

ConeSolution solve(const ConeProgram& prog, const SolverSettings& settings = {});

/// Residuals recomputed from (u, z) alone, independent of solver internals.
struct KktReport {
    double primal_residual;      // distance of f + F u from the cone product
    double dual_residual;        // || F^T z - p || and dual cone violation
    double complementarity;      // |s^T z| scaled
    bool ok(double tol) const;
};

KktReport check_kkt(const ConeProgram& prog, const ConeSolution& sol);

/// Plain-text fixture format: dims, cone list, then p, f, F (row-major).
std::string dump_program(const ConeProgram& prog);
ConeProgram parse_program(const std::string& text);

} // namespace beamform

#endif
