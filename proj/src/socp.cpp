// SPDX-License-Identifier: Apache-2.0
#include "beamform/socp.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace beamform {

void ConeProgram::validate() const {
    if (F.rows() != f.size() || F.cols() != p.size())
        throw std::invalid_argument("cone program: inconsistent dimensions");
    int total = 0;
    for (const auto& c : cones) {
        if (c.dim < 1) throw std::invalid_argument("cone program: empty cone");
        total += c.dim;
    }
    if (total != num_rows())
        throw std::invalid_argument("cone program: cone dims do not sum to m");
    if (!F.allFinite() || !f.allFinite() || !p.allFinite())
        throw std::invalid_argument("cone program: non-finite data");
}

namespace {

// x0^2 - ||x1||^2 over one SOC block
double soc_det(const RVector& x, int off, int dim) {
    double t = x(off) * x(off);
    for (int k = 1; k < dim; ++k) t -= x(off + k) * x(off + k);
    return t;
}

// sup { alpha >= 0 : x + alpha d stays in the cone }
double step_to_boundary(const RVector& x, const RVector& d, int off, int dim) {
    const double big = std::numeric_limits<double>::infinity();
    // quadratic a t^2 + b t + c >= 0 with c = det(x) > 0 at the interior point
    double a = d(off) * d(off), b = 2.0 * x(off) * d(off), c = x(off) * x(off);
    for (int k = 1; k < dim; ++k) {
        a -= d(off + k) * d(off + k);
        b -= 2.0 * x(off + k) * d(off + k);
        c -= x(off + k) * x(off + k);
    }
    double alpha = big;
    const double disc = b * b - 4.0 * a * c;
    if (std::abs(a) < 1e-300) {
        if (b < 0.0) alpha = -c / b;
    } else if (disc >= 0.0) {
        const double sq = std::sqrt(disc);
        const double r1 = (-b - sq) / (2.0 * a);
        const double r2 = (-b + sq) / (2.0 * a);
        const double lo = std::min(r1, r2), hi = std::max(r1, r2);
        if (lo > 0.0)
            alpha = lo;
        else if (a < 0.0 && hi > 0.0)
            alpha = hi;
        else if (a < 0.0 && hi <= 0.0)
            alpha = 0.0;
    }
    if (d(off) < 0.0) alpha = std::min(alpha, -x(off) / d(off));
    return alpha;
}

// Jordan product x o y = (x^T y, x0 y1 + y0 x1) on one block
void jordan_mul(const RVector& x, const RVector& y, int off, int dim, RVector& out) {
    double dot = 0.0;
    for (int k = 0; k < dim; ++k) dot += x(off + k) * y(off + k);
    out(off) = dot;
    for (int k = 1; k < dim; ++k)
        out(off + k) = x(off) * y(off + k) + y(off) * x(off + k);
}

// out = L(lam)^{-1} v on one block (arrowhead solve)
void jordan_div(const RVector& lam, const RVector& v, int off, int dim, RVector& out) {
    const double det = soc_det(lam, off, dim);
    double l1v1 = 0.0;
    for (int k = 1; k < dim; ++k) l1v1 += lam(off + k) * v(off + k);
    const double w0 = (lam(off) * v(off) - l1v1) / det;
    out(off) = w0;
    for (int k = 1; k < dim; ++k)
        out(off + k) = (v(off + k) - w0 * lam(off + k)) / lam(off);
}

struct NtScaling {
    RMatrix w;     // W with W z = W^{-1} s = lambda
    RMatrix winv;
    RMatrix winv2;
};

NtScaling nt_scaling(const RVector& s, const RVector& z, int off, int dim) {
    const double ds = soc_det(s, off, dim);
    const double dz = soc_det(z, off, dim);
    RVector sb(dim), zb(dim);
    for (int k = 0; k < dim; ++k) {
        sb(k) = s(off + k) / std::sqrt(ds);
        zb(k) = z(off + k) / std::sqrt(dz);
    }
    const double gamma = std::sqrt(0.5 * (1.0 + sb.dot(zb)));
    RVector wb(dim);
    wb(0) = (sb(0) + zb(0)) / (2.0 * gamma);
    for (int k = 1; k < dim; ++k) wb(k) = (sb(k) - zb(k)) / (2.0 * gamma);
    // group square root of wb: (2 vb vb^T - J)^2 z = (2 wb wb^T - J) z,
    // which gives W z = W^{-1} s = lambda
    RVector vb = wb;
    vb(0) += 1.0;
    vb /= std::sqrt(2.0 * (1.0 + wb(0)));
    const double beta = std::pow(ds / dz, 0.25);

    RMatrix jm = -RMatrix::Identity(dim, dim);
    jm(0, 0) = 1.0;
    RVector jvb = jm * vb;
    NtScaling nt;
    nt.w = beta * (2.0 * vb * vb.transpose() - jm);
    nt.winv = (1.0 / beta) * (2.0 * jvb * jvb.transpose() - jm);
    nt.winv2 = nt.winv * nt.winv;
    return nt;
}

} // namespace

ConeSolution solve(const ConeProgram& prog, const SolverSettings& settings) {
    prog.validate();
    const int n = prog.num_vars();
    const int m = prog.num_rows();

    // split rows into SOC and Zero parts, keeping the original order per part
    std::vector<int> soc_rows, zero_rows;
    std::vector<std::pair<int, int>> blocks; // (offset into soc part, dim)
    {
        int row = 0;
        for (const auto& c : prog.cones) {
            if (c.kind == Cone::Kind::Soc) {
                blocks.emplace_back(static_cast<int>(soc_rows.size()), c.dim);
                for (int k = 0; k < c.dim; ++k) soc_rows.push_back(row + k);
            } else {
                for (int k = 0; k < c.dim; ++k) zero_rows.push_back(row + k);
            }
            row += c.dim;
        }
    }
    const int ms = static_cast<int>(soc_rows.size());
    const int mz = static_cast<int>(zero_rows.size());
    const int nu = static_cast<int>(blocks.size());

    RMatrix gs(ms, n), gz(mz, n);
    RVector fs(ms), fz(mz);
    for (int k = 0; k < ms; ++k) {
        gs.row(k) = prog.F.row(soc_rows[k]);
        fs(k) = prog.f(soc_rows[k]);
    }
    for (int k = 0; k < mz; ++k) {
        gz.row(k) = prog.F.row(zero_rows[k]);
        fz(k) = prog.f(zero_rows[k]);
    }

    RVector u = RVector::Zero(n);
    RVector s(ms), z(ms);
    RVector zz = RVector::Zero(mz);
    const double init = std::max(1.0, prog.f.size() ? prog.f.cwiseAbs().maxCoeff() : 1.0);
    s.setZero();
    z.setZero();
    for (const auto& [off, dim] : blocks) {
        s(off) = init;
        z(off) = init;
    }

    const double fn = 1.0 + prog.f.norm();
    const double pn = 1.0 + prog.p.norm();

    ConeSolution sol;
    sol.u = u;
    sol.z = RVector::Zero(m);

    auto assemble = [&](SolveStatus status, int iters, double relp, double reld, double relg) {
        sol.status = status;
        sol.iterations = iters;
        sol.u = u;
        for (int k = 0; k < ms; ++k) sol.z(soc_rows[k]) = z(k);
        for (int k = 0; k < mz; ++k) sol.z(zero_rows[k]) = zz(k);
        sol.primal_residual = relp;
        sol.dual_residual = reld;
        sol.duality_gap = relg;
        return sol;
    };

    for (int iter = 0; iter <= settings.max_iterations; ++iter) {
        const RVector rp_s = s - gs * u - fs;
        const RVector rp_z = -gz * u - fz;
        const RVector rd = gs.transpose() * z + gz.transpose() * zz - prog.p;
        const double gap = nu > 0 ? s.dot(z) : 0.0;
        const double pobj = prog.p.dot(u);

        const double relp = std::sqrt(rp_s.squaredNorm() + rp_z.squaredNorm()) / fn;
        const double reld = rd.norm() / pn;
        const double relg = gap / (1.0 + std::abs(pobj));
        if (relp <= settings.tolerance && reld <= settings.tolerance &&
            relg <= settings.tolerance)
            return assemble(SolveStatus::Optimal, iter, relp, reld, relg);

        // primal infeasibility certificate: z in K*, F^T z ~ 0, f^T z < 0
        {
            const double zn = std::sqrt(z.squaredNorm() + zz.squaredNorm());
            if (zn > 1.0) {
                const double cert_d = (gs.transpose() * z + gz.transpose() * zz).norm() / zn;
                const double cert_f = (fs.dot(z) + fz.dot(zz)) / zn;
                if (cert_d < 1e3 * settings.tolerance && cert_f < -1e3 * settings.tolerance)
                    return assemble(SolveStatus::Infeasible, iter, relp, reld, relg);
            }
        }

        if (iter == settings.max_iterations) break;
        // bail out if rounding pushed an iterate off the cone interior;
        // continuing would only propagate NaNs
        {
            bool interior = s.allFinite() && z.allFinite() && u.allFinite();
            for (const auto& [off, dim] : blocks)
                interior = interior && s(off) > 0.0 && z(off) > 0.0 &&
                           soc_det(s, off, dim) > 0.0 && soc_det(z, off, dim) > 0.0;
            if (!interior) return assemble(SolveStatus::MaxIterations, iter, relp, reld, relg);
        }
        const double mu = nu > 0 ? gap / nu : 0.0;

        // NT scaling and scaled point per block
        RMatrix winv2 = RMatrix::Zero(ms, ms);
        RMatrix winv = RMatrix::Zero(ms, ms);
        RMatrix wmat = RMatrix::Zero(ms, ms);
        RVector lam = RVector::Zero(ms);
        for (const auto& [off, dim] : blocks) {
            NtScaling nt = nt_scaling(s, z, off, dim);
            wmat.block(off, off, dim, dim) = nt.w;
            winv.block(off, off, dim, dim) = nt.winv;
            winv2.block(off, off, dim, dim) = nt.winv2;
            lam.segment(off, dim) = nt.w.block(0, 0, dim, dim) * z.segment(off, dim);
        }

        // KKT matrix, shared by predictor and corrector
        RMatrix kkt = RMatrix::Zero(n + mz, n + mz);
        kkt.topLeftCorner(n, n) = gs.transpose() * winv2 * gs;
        if (mz > 0) {
            kkt.topRightCorner(n, mz) = -gz.transpose();
            kkt.bottomLeftCorner(mz, n) = gz;
        }
        Eigen::FullPivLU<RMatrix> lu(kkt);

        auto solve_kkt = [&](const RVector& d, RVector& du, RVector& ds, RVector& dz,
                             RVector& dzz) {
            RVector rhs(n + mz);
            rhs.head(n) =
                rd + gs.transpose() * (winv * d) + gs.transpose() * (winv2 * rp_s);
            rhs.tail(mz) = rp_z;
            const RVector sol_v = lu.solve(rhs);
            du = sol_v.head(n);
            dzz = sol_v.tail(mz);
            ds = gs * du - rp_s;
            dz = winv * d - winv2 * ds;
        };

        auto boundary = [&](const RVector& x, const RVector& dx) {
            double a = std::numeric_limits<double>::infinity();
            for (const auto& [off, dim] : blocks)
                a = std::min(a, step_to_boundary(x, dx, off, dim));
            return a;
        };

        // predictor: sigma = 0, d = -lambda
        RVector du, ds, dz, dzz;
        solve_kkt(-lam, du, ds, dz, dzz);
        double alpha_aff = std::min({1.0, boundary(s, ds), boundary(z, dz)});
        double sigma = 0.0;
        if (nu > 0) {
            const double gap_aff = (s + alpha_aff * ds).dot(z + alpha_aff * dz);
            sigma = std::pow(std::max(gap_aff, 0.0) / gap, 3.0);
            sigma = std::clamp(sigma, 0.0, 1.0);
        }

        // corrector with Mehrotra second-order term
        RVector d = RVector::Zero(ms);
        if (nu > 0) {
            RVector corr(ms), tmp1 = winv * ds, tmp2 = wmat * dz;
            for (const auto& [off, dim] : blocks) jordan_mul(tmp1, tmp2, off, dim, corr);
            RVector target = -corr;
            for (const auto& [off, dim] : blocks) target(off) += sigma * mu;
            for (const auto& [off, dim] : blocks) jordan_div(lam, target, off, dim, d);
            d -= lam;
        }
        solve_kkt(d, du, ds, dz, dzz);

        double alpha =
            settings.step_fraction * std::min({boundary(s, ds), boundary(z, dz)});
        alpha = std::min(alpha, 1.0);
        if (!std::isfinite(alpha)) alpha = 1.0;

        u += alpha * du;
        s += alpha * ds;
        z += alpha * dz;
        zz += alpha * dzz;
    }

    {
        const RVector rp_s = s - gs * u - fs;
        const RVector rp_z = -gz * u - fz;
        const RVector rd = gs.transpose() * z + gz.transpose() * zz - prog.p;
        const double gap = nu > 0 ? s.dot(z) : 0.0;
        return assemble(SolveStatus::MaxIterations, settings.max_iterations,
                        std::sqrt(rp_s.squaredNorm() + rp_z.squaredNorm()) / fn,
                        rd.norm() / pn, gap / (1.0 + std::abs(prog.p.dot(u))));
    }
}

bool KktReport::ok(double tol) const {
    return primal_residual <= tol && dual_residual <= tol && complementarity <= tol;
}

KktReport check_kkt(const ConeProgram& prog, const ConeSolution& sol) {
    prog.validate();
    const RVector s = prog.f + prog.F * sol.u;
    double pviol2 = 0.0, dcone = 0.0;
    int row = 0;
    for (const auto& c : prog.cones) {
        if (c.kind == Cone::Kind::Soc) {
            const double tail_s = s.segment(row + 1, c.dim - 1).norm();
            pviol2 += std::pow(std::max(0.0, tail_s - s(row)), 2);
            const double tail_z = sol.z.segment(row + 1, c.dim - 1).norm();
            dcone = std::max(dcone, tail_z - sol.z(row));
        } else {
            pviol2 += s.segment(row, c.dim).squaredNorm();
        }
        row += c.dim;
    }
    KktReport rep;
    rep.primal_residual = std::sqrt(pviol2) / (1.0 + prog.f.norm());
    rep.dual_residual =
        ((prog.F.transpose() * sol.z - prog.p).norm() + std::max(0.0, dcone)) /
        (1.0 + prog.p.norm());
    rep.complementarity = std::abs(s.dot(sol.z)) / (1.0 + std::abs(prog.p.dot(sol.u)));
    return rep;
}

std::string dump_program(const ConeProgram& prog) {
    std::ostringstream os;
    os.precision(17);
    os << "socp\n";
    os << "n " << prog.num_vars() << " m " << prog.num_rows() << "\n";
    os << "cones " << prog.cones.size() << "\n";
    for (const auto& c : prog.cones)
        os << (c.kind == Cone::Kind::Soc ? "soc " : "zero ") << c.dim << "\n";
    os << "p\n";
    for (int k = 0; k < prog.num_vars(); ++k) os << prog.p(k) << (k + 1 < prog.num_vars() ? " " : "\n");
    os << "f\n";
    for (int k = 0; k < prog.num_rows(); ++k) os << prog.f(k) << (k + 1 < prog.num_rows() ? " " : "\n");
    os << "F\n";
    for (int r = 0; r < prog.num_rows(); ++r) {
        for (int c = 0; c < prog.num_vars(); ++c)
            os << prog.F(r, c) << (c + 1 < prog.num_vars() ? " " : "\n");
    }
    return os.str();
}

ConeProgram parse_program(const std::string& text) {
    std::istringstream is(text);
    std::string tok;
    is >> tok;
    if (tok != "socp") throw std::invalid_argument("socp dump: bad magic");
    int n = 0, m = 0;
    is >> tok >> n >> tok >> m;
    std::size_t ncones = 0;
    is >> tok >> ncones;
    ConeProgram prog;
    for (std::size_t k = 0; k < ncones; ++k) {
        std::string kind;
        int dim;
        is >> kind >> dim;
        prog.cones.push_back({kind == "soc" ? Cone::Kind::Soc : Cone::Kind::Zero, dim});
    }
    prog.p.resize(n);
    prog.f.resize(m);
    prog.F.resize(m, n);
    is >> tok; // p
    for (int k = 0; k < n; ++k) is >> prog.p(k);
    is >> tok; // f
    for (int k = 0; k < m; ++k) is >> prog.f(k);
    is >> tok; // F
    for (int r = 0; r < m; ++r)
        for (int c = 0; c < n; ++c) is >> prog.F(r, c);
    if (!is) throw std::invalid_argument("socp dump: truncated data");
    prog.validate();
    return prog;
}

} // namespace beamform
