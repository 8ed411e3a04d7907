#include "vseed/lifting.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace vseed {

VelocityField build_lifting(const ChannelGrid& grid, const WallData& w, int t_index,
                            double delta, double alpha) {
    if (grid.nx != w.nx) throw std::invalid_argument("build_lifting: grid/wall nx mismatch");
    if (t_index < 0 || t_index > w.nt) throw std::invalid_argument("build_lifting: t_index out of range");
    double defect = w.compatibility_defect();
    if (defect > 1e-12 * std::max(1.0, w.max_abs()) * w.lx)
        throw std::invalid_argument("build_lifting: wall data violates the compatibility condition");

    const int nx = grid.nx, ny = grid.ny;
    const double s = std::pow(delta, alpha);

    std::vector<double> vb(nx), vt(nx);
    for (int i = 0; i < nx; ++i) {
        vb[i] = -s * w.bottom(i, t_index);
        vt[i] = s * w.top(i, t_index);
    }
    double mb = 0.0, mt = 0.0;
    for (int i = 0; i < nx; ++i) {
        mb += vb[i];
        mt += vt[i];
    }
    mb /= nx;
    mt /= nx;
    const double c = 0.5 * (mb + mt);  // walls agree by compatibility

    // node antiderivatives of the zero-mean traces
    std::vector<double> A(nx + 1, 0.0), B(nx + 1, 0.0);
    for (int i = 0; i < nx; ++i) {
        A[i + 1] = A[i] + grid.hx * (vb[i] - c);
        B[i + 1] = B[i] + grid.hx * (vt[i] - c);
    }

    auto beta = [](double y) { return y * y * (3.0 - 2.0 * y); };
    auto psi = [&](int i, int jnode) {
        double b = beta(jnode * grid.hy);
        int iw = grid.wrap(i);
        return (1.0 - b) * A[iw] + b * B[iw];
    };

    VelocityField G1(grid);
    for (int jc = -1; jc <= ny; ++jc)
        for (int i = 0; i < nx; ++i)
            G1.u(i, jc) = -(psi(i, jc + 1) - psi(i, jc)) / grid.hy;
    for (int j = 0; j <= ny; ++j)
        for (int i = 0; i < nx; ++i)
            G1.v(i, j) = (psi(i + 1, j) - psi(i, j)) / grid.hx + c;
    return G1;
}

}  // namespace vseed
