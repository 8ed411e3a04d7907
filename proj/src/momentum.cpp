#include "vseed/momentum.hpp"

#include <cmath>

#include "vseed/bc.hpp"
#include "vseed/ops.hpp"

namespace vseed {

void MomentumOp::apply_closed(const VelocityField& f, VelocityField& out) const {
    const ChannelGrid& g = grid;
    DeformationField d = deformation(f);
    out = VelocityField(g);
    for (int j = 0; j < g.ny; ++j)
        for (int i = 0; i < g.nx; ++i) {
            double divDx = (d.D11(i, j) - d.D11(i - 1, j)) / g.hx +
                           (d.D12(i, j + 1) - d.D12(i, j)) / g.hy;
            out.u(i, j) = sigma * f.u(i, j) - nu * divDx;
        }
    for (int j = 1; j < g.ny; ++j)
        for (int i = 0; i < g.nx; ++i) {
            double divDy = (d.D12(i + 1, j) - d.D12(i, j)) / g.hx +
                           (d.D22(i, j) - d.D22(i, j - 1)) / g.hy;
            out.v(i, j) = sigma * f.v(i, j) - nu * divDy;
        }
}

void MomentumOp::apply_hom(const VelocityField& f, VelocityField& out) const {
    VelocityField t = f;
    set_wall_flux_zero(t);
    close_ghosts(t, delta);
    apply_closed(t, out);
}

// ---------------------------------------------------------------------------
// per-wavenumber construction
//
// A field u(i,j) = uh(j) z^i with z = e^{i theta} turns every x shift into a
// multiplication by z. The code below mirrors apply_closed term by term in
// that representation; a unit test checks the two give identical results.

namespace {

struct SymbolApply {
    const ChannelGrid& g;
    double nu, sigma, delta;
    cplx z;

    // uh has ny entries (rows 0..ny-1), vh has ny+1 entries with vh[0] and
    // vh[ny] fixed to zero (homogeneous data)
    void operator()(const std::vector<cplx>& uh, const std::vector<cplx>& vh,
                    std::vector<cplx>& ru, std::vector<cplx>& rv) const {
        const int ny = g.ny;
        const double hx = g.hx, hy = g.hy;
        const cplx zb = std::conj(z);
        const double cg = (delta - hy) / (delta + hy);

        auto uat = [&](int j) -> cplx {
            if (j == -1) return cg * uh[0];
            if (j == ny) return cg * uh[ny - 1];
            return uh[j];
        };

        std::vector<cplx> d11(ny), d22(ny), d12(ny + 1);
        for (int j = 0; j < ny; ++j) {
            d11[j] = (z - 1.0) / hx * uh[j];
            d22[j] = (vh[j + 1] - vh[j]) / hy;
        }
        for (int j = 0; j <= ny; ++j)
            d12[j] = 0.5 * ((uat(j) - uat(j - 1)) / hy + (1.0 - zb) / hx * vh[j]);

        ru.assign(ny, cplx(0.0, 0.0));
        rv.assign(ny + 1, cplx(0.0, 0.0));
        for (int j = 0; j < ny; ++j) {
            cplx divDx = (1.0 - zb) / hx * d11[j] + (d12[j + 1] - d12[j]) / hy;
            ru[j] = sigma * uh[j] - nu * divDx;
        }
        for (int j = 1; j < ny; ++j) {
            cplx divDy = (z - 1.0) / hx * d12[j] + (d22[j] - d22[j - 1]) / hy;
            rv[j] = sigma * vh[j] - nu * divDy;
        }
    }
};

// interleaved DOF indexing per wavenumber: u_j -> 2j, v_j -> 2j-1
inline int idx_u(int j) { return 2 * j; }
inline int idx_v(int j) { return 2 * j - 1; }

}  // namespace

MomentumWaveSolver::MomentumWaveSolver(const ChannelGrid& grid, double nu, double sigma,
                                       double delta)
    : op_{grid, nu, sigma, delta} {
    const int nx = grid.nx, ny = grid.ny;
    const int n = 2 * ny - 1;
    blocks_.reserve(nx);

    std::vector<cplx> uh(ny), vh(ny + 1), ru, rv;
    for (int k = 0; k < nx; ++k) {
        double theta = 2.0 * M_PI * k / double(nx);
        SymbolApply sym{grid, nu, sigma, delta, cplx(std::cos(theta), std::sin(theta))};
        BandedHermitian blk(n, 2);
        // probe columns; keep the lower triangle inside the band
        for (int col = 0; col < n; ++col) {
            std::fill(uh.begin(), uh.end(), cplx(0.0, 0.0));
            std::fill(vh.begin(), vh.end(), cplx(0.0, 0.0));
            if (col % 2 == 0)
                uh[col / 2] = 1.0;
            else
                vh[(col + 1) / 2] = 1.0;
            sym(uh, vh, ru, rv);
            for (int j = 0; j < ny; ++j) {
                int row = idx_u(j);
                if (row >= col && row - col <= 2) blk.at(row, col) = ru[j];
            }
            for (int j = 1; j < ny; ++j) {
                int row = idx_v(j);
                if (row >= col && row - col <= 2) blk.at(row, col) = rv[j];
            }
        }
        blk.factor();
        blocks_.push_back(std::move(blk));
    }
}

void MomentumWaveSolver::solve(const VelocityField& rhs, VelocityField& out) const {
    const ChannelGrid& g = op_.grid;
    const int nx = g.nx, ny = g.ny;
    const int n = 2 * ny - 1;

    // forward transform every DOF row
    std::vector<std::vector<cplx>> urows(ny, std::vector<cplx>(nx));
    std::vector<std::vector<cplx>> vrows(ny + 1, std::vector<cplx>(nx, cplx(0.0, 0.0)));
    std::vector<cplx> tmp(nx);
    for (int j = 0; j < ny; ++j) {
        for (int i = 0; i < nx; ++i) tmp[i] = cplx(rhs.u(i, j), 0.0);
        dft(tmp, false);
        urows[j] = tmp;
    }
    for (int j = 1; j < ny; ++j) {
        for (int i = 0; i < nx; ++i) tmp[i] = cplx(rhs.v(i, j), 0.0);
        dft(tmp, false);
        vrows[j] = tmp;
    }

    std::vector<cplx> b(n);
    for (int k = 0; k < nx; ++k) {
        for (int j = 0; j < ny; ++j) b[idx_u(j)] = urows[j][k];
        for (int j = 1; j < ny; ++j) b[idx_v(j)] = vrows[j][k];
        blocks_[k].solve(b);
        for (int j = 0; j < ny; ++j) urows[j][k] = b[idx_u(j)];
        for (int j = 1; j < ny; ++j) vrows[j][k] = b[idx_v(j)];
    }

    out = VelocityField(g);
    for (int j = 0; j < ny; ++j) {
        tmp = urows[j];
        dft(tmp, true);
        for (int i = 0; i < nx; ++i) out.u(i, j) = tmp[i].real() / double(nx);
    }
    for (int j = 1; j < ny; ++j) {
        tmp = vrows[j];
        dft(tmp, true);
        for (int i = 0; i < nx; ++i) out.v(i, j) = tmp[i].real() / double(nx);
    }
    close_ghosts(out, op_.delta);
}

double slip_dissipation(const VelocityField& f, double delta, double nu) {
    if (delta <= 0.0) return 0.0;
    return nu / delta * boundary_tang_sq(f);
}

}  // namespace vseed
