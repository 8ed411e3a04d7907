#include "vseed/saddle.hpp"

#include <cmath>

#include "vseed/ops.hpp"

namespace vseed {

SchurSolver::SchurSolver(const ChannelGrid& grid, double nu, double sigma, double delta)
    : grid_(grid), nu_(nu), sigma_(sigma), delta_(delta),
      ainv_(grid, nu, sigma, delta), poisson_(grid) {}

StokesSolution SchurSolver::solve(const VelocityField& b, const PressureField* c,
                                  const SaddleOptions& opt) const {
    // Schur application: q -> -div A^-1 grad q  (symmetric positive definite
    // on zero-mean pressures)
    VelocityField work(grid_), x(grid_);
    auto schur = [&](const PressureField& q) {
        VelocityField gq = gradient(q);
        ainv_.solve(gq, work);
        PressureField r = divergence(work);
        for (double& v : r.p) v = -v;
        r.remove_mean();
        return r;
    };
    auto precond = [&](const PressureField& r) {
        PressureField z = r;
        poisson_.solve(z);  // z = lap^-1 r
        PressureField out = r;
        for (size_t k = 0; k < out.p.size(); ++k) out.p[k] = nu_ * r.p[k] - sigma_ * z.p[k];
        out.remove_mean();
        return out;
    };

    // Schur system with the sign that keeps the operator SPD:
    // (-div A^-1 grad) q = c - div A^-1 b
    ainv_.solve(b, work);
    PressureField rhs = divergence(work);
    for (size_t k = 0; k < rhs.p.size(); ++k)
        rhs.p[k] = (c ? c->p[k] : 0.0) - rhs.p[k];
    rhs.remove_mean();

    PressureField q(grid_);
    PressureField r = rhs;  // q0 = 0
    double r0 = std::sqrt(inner(r, r));
    std::vector<double> history;
    history.push_back(1.0);
    int iters = 0;

    if (r0 > 0.0) {
        PressureField z = precond(r);
        PressureField d = z;
        double rz = inner(r, z);
        const double floor = 1e-300;
        for (iters = 1; iters <= opt.max_iter; ++iters) {
            PressureField w = schur(d);
            double dw = inner(d, w);
            if (!(dw > floor)) break;
            double a = rz / dw;
            for (size_t k = 0; k < q.p.size(); ++k) q.p[k] += a * d.p[k];
            for (size_t k = 0; k < r.p.size(); ++k) r.p[k] -= a * w.p[k];
            double rn = std::sqrt(inner(r, r));
            history.push_back(rn / r0);
            if (rn <= opt.tol * r0) break;
            z = precond(r);
            double rz2 = inner(r, z);
            double beta = rz2 / rz;
            rz = rz2;
            for (size_t k = 0; k < d.p.size(); ++k) d.p[k] = z.p[k] + beta * d.p[k];
        }
        if (history.back() > opt.tol)
            throw SolverError("SchurSolver: no convergence after " + std::to_string(iters - 1) +
                                  " iterations (relative residual " +
                                  std::to_string(history.back()) + ")",
                              history);
        q.remove_mean();
    }

    // velocity recovery: x = A^-1 (b - grad q)
    VelocityField bg = b;
    VelocityField gq = gradient(q);
    bg.axpy(-1.0, gq);
    ainv_.solve(bg, x);

    StokesSolution s;
    s.velocity = std::move(x);
    s.pressure = std::move(q);
    s.residual = history.back();
    s.iterations = iters;
    return s;
}

}  // namespace vseed
