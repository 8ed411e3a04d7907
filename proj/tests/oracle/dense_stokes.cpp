#include "oracle/dense_stokes.hpp"

#include <cmath>
#include <stdexcept>

#include "vseed/bc.hpp"
#include "vseed/momentum.hpp"
#include "vseed/ops.hpp"

namespace vseed::testing {

DenseSaddleOracle::DenseSaddleOracle(const ChannelGrid& grid, double nu, double sigma,
                                     double delta)
    : grid_(grid), nu_(nu), sigma_(sigma), delta_(delta) {
    const int nx = grid.nx, ny = grid.ny;
    n_u_ = nx * ny;
    n_v_ = nx * (ny - 1);
    n_p_ = nx * ny;
    n_ = n_u_ + n_v_ + n_p_ + 1;  // + pressure-mean multiplier

    std::vector<double> A(size_t(n_) * n_, 0.0);
    MomentumOp op{grid, nu, sigma, delta};

    auto scatter_column = [&](int col, const VelocityField& mom, const PressureField& div) {
        for (int j = 0; j < ny; ++j)
            for (int i = 0; i < nx; ++i) A[size_t(idx_u(i, j)) * n_ + col] = mom.u(i, j);
        for (int j = 1; j < ny; ++j)
            for (int i = 0; i < nx; ++i) A[size_t(idx_v(i, j)) * n_ + col] = mom.v(i, j);
        for (int j = 0; j < ny; ++j)
            for (int i = 0; i < nx; ++i) A[size_t(idx_p(i, j)) * n_ + col] = div(i, j);
    };

    // velocity columns: momentum block + divergence rows
    VelocityField e(grid), mom(grid);
    for (int j = 0; j < ny; ++j)
        for (int i = 0; i < nx; ++i) {
            e.fill(0.0);
            e.u(i, j) = 1.0;
            op.apply_hom(e, mom);
            VelocityField t = e;
            set_wall_flux_zero(t);
            scatter_column(idx_u(i, j), mom, divergence(t));
        }
    for (int j = 1; j < ny; ++j)
        for (int i = 0; i < nx; ++i) {
            e.fill(0.0);
            e.v(i, j) = 1.0;
            op.apply_hom(e, mom);
            VelocityField t = e;
            set_wall_flux_zero(t);
            scatter_column(idx_v(i, j), mom, divergence(t));
        }
    // pressure columns: gradient into the momentum rows
    PressureField q(grid);
    for (int j = 0; j < ny; ++j)
        for (int i = 0; i < nx; ++i) {
            for (double& v : q.p) v = 0.0;
            q(i, j) = 1.0;
            VelocityField gq = gradient(q);
            for (int jj = 0; jj < ny; ++jj)
                for (int ii = 0; ii < nx; ++ii)
                    A[size_t(idx_u(ii, jj)) * n_ + idx_p(i, j)] = gq.u(ii, jj);
            for (int jj = 1; jj < ny; ++jj)
                for (int ii = 0; ii < nx; ++ii)
                    A[size_t(idx_v(ii, jj)) * n_ + idx_p(i, j)] = gq.v(ii, jj);
        }
    // bordering: multiplier in the continuity rows, zero-mean constraint row
    const double vol = grid.hx * grid.hy;
    for (int j = 0; j < ny; ++j)
        for (int i = 0; i < nx; ++i) {
            A[size_t(idx_p(i, j)) * n_ + (n_ - 1)] = 1.0;
            A[size_t(n_ - 1) * n_ + idx_p(i, j)] = vol;
        }

    // LU with partial pivoting
    lu_ = std::move(A);
    pivot_.resize(n_);
    for (int k = 0; k < n_; ++k) {
        int piv = k;
        double best = std::abs(lu_[size_t(k) * n_ + k]);
        for (int r = k + 1; r < n_; ++r) {
            double v = std::abs(lu_[size_t(r) * n_ + k]);
            if (v > best) {
                best = v;
                piv = r;
            }
        }
        if (best == 0.0) throw std::runtime_error("DenseSaddleOracle: singular system");
        pivot_[k] = piv;
        if (piv != k)
            for (int cidx = 0; cidx < n_; ++cidx)
                std::swap(lu_[size_t(k) * n_ + cidx], lu_[size_t(piv) * n_ + cidx]);
        double d = lu_[size_t(k) * n_ + k];
        for (int r = k + 1; r < n_; ++r) {
            double m = lu_[size_t(r) * n_ + k] / d;
            lu_[size_t(r) * n_ + k] = m;
            if (m != 0.0)
                for (int cidx = k + 1; cidx < n_; ++cidx)
                    lu_[size_t(r) * n_ + cidx] -= m * lu_[size_t(k) * n_ + cidx];
        }
    }
}

StokesSolution DenseSaddleOracle::solve(const VelocityField& b, const PressureField* c) const {
    const int nx = grid_.nx, ny = grid_.ny;
    std::vector<double> rhs(n_, 0.0);
    for (int j = 0; j < ny; ++j)
        for (int i = 0; i < nx; ++i) rhs[idx_u(i, j)] = b.u(i, j);
    for (int j = 1; j < ny; ++j)
        for (int i = 0; i < nx; ++i) rhs[idx_v(i, j)] = b.v(i, j);
    if (c)
        for (int j = 0; j < ny; ++j)
            for (int i = 0; i < nx; ++i) rhs[idx_p(i, j)] = (*c)(i, j);

    // rows were swapped in full during factorization, so permute first, then
    // the two triangular solves
    for (int k = 0; k < n_; ++k)
        if (pivot_[k] != k) std::swap(rhs[k], rhs[pivot_[k]]);
    for (int r = 0; r < n_; ++r)
        for (int cidx = 0; cidx < r; ++cidx) rhs[r] -= lu_[size_t(r) * n_ + cidx] * rhs[cidx];
    for (int k = n_ - 1; k >= 0; --k) {
        for (int cidx = k + 1; cidx < n_; ++cidx) rhs[k] -= lu_[size_t(k) * n_ + cidx] * rhs[cidx];
        rhs[k] /= lu_[size_t(k) * n_ + k];
    }

    StokesSolution s;
    s.velocity = VelocityField(grid_);
    s.pressure = PressureField(grid_);
    for (int j = 0; j < ny; ++j)
        for (int i = 0; i < nx; ++i) s.velocity.u(i, j) = rhs[idx_u(i, j)];
    for (int j = 1; j < ny; ++j)
        for (int i = 0; i < nx; ++i) s.velocity.v(i, j) = rhs[idx_v(i, j)];
    for (int j = 0; j < ny; ++j)
        for (int i = 0; i < nx; ++i) s.pressure(i, j) = rhs[idx_p(i, j)];
    s.pressure.remove_mean();
    close_ghosts(s.velocity, delta_);
    return s;
}

}  // namespace vseed::testing
