#include "vseed/advection.hpp"

#include <cmath>

#include "vseed/ops.hpp"

namespace vseed {

VelocityField advect(const VelocityField& c, const VelocityField& w) {
    const ChannelGrid& g = c.grid;
    const double ihx = 1.0 / g.hx, ihy = 1.0 / g.hy;
    VelocityField out(g);
    PressureField divc = divergence(c);

    // x-momentum: cell fluxes (u c_x averages) and node fluxes (u c_y averages)
    for (int j = 0; j < g.ny; ++j) {
        for (int i = 0; i < g.nx; ++i) {
            auto cell_flux = [&](int ci) {
                double cb = 0.5 * (c.u(ci, j) + c.u(ci + 1, j));
                double wb = 0.5 * (w.u(ci, j) + w.u(ci + 1, j));
                return cb * wb;
            };
            auto node_flux = [&](int jn) {
                double cb = 0.5 * (c.v(i - 1, jn) + c.v(i, jn));
                double wb = 0.5 * (w.u(i, jn - 1) + w.u(i, jn));
                return cb * wb;
            };
            double div_at_u = 0.5 * (divc(i - 1, j) + divc(i, j));
            out.u(i, j) = (cell_flux(i) - cell_flux(i - 1)) * ihx +
                          (node_flux(j + 1) - node_flux(j)) * ihy -
                          0.5 * w.u(i, j) * div_at_u;
        }
    }
    // y-momentum: node fluxes (v c_x) and cell fluxes (v c_y)
    for (int j = 1; j < g.ny; ++j) {
        for (int i = 0; i < g.nx; ++i) {
            auto node_flux = [&](int in) {
                double cb = 0.5 * (c.u(in, j - 1) + c.u(in, j));
                double wb = 0.5 * (w.v(in - 1, j) + w.v(in, j));
                return cb * wb;
            };
            auto cell_flux = [&](int jc) {
                double cb = 0.5 * (c.v(i, jc) + c.v(i, jc + 1));
                double wb = 0.5 * (w.v(i, jc) + w.v(i, jc + 1));
                return cb * wb;
            };
            double div_at_v = 0.5 * (divc(i, j - 1) + divc(i, j));
            out.v(i, j) = (node_flux(i + 1) - node_flux(i)) * ihx +
                          (cell_flux(j) - cell_flux(j - 1)) * ihy -
                          0.5 * w.v(i, j) * div_at_v;
        }
    }
    return out;
}

AdvectionAudit nonlinear_term_audit(const VelocityField& w, const VelocityField& z,
                                    const VelocityField& v, const VelocityField& U) {
    AdvectionAudit a;
    a.t_Uw = std::sqrt(l2_sq(advect(U, w)));
    a.t_wv = std::sqrt(l2_sq(advect(w, v)));
    a.t_Uz = std::sqrt(l2_sq(advect(U, z)));
    a.t_zU = std::sqrt(l2_sq(advect(z, U)));
    a.t_zz = std::sqrt(l2_sq(advect(z, z)));
    a.cancel_self = inner(U, advect(U, U));
    a.cancel_pair = inner(U, advect(U, z)) + inner(z, advect(U, U));
    return a;
}

AdvectionAudit nonlinear_term_audit(const VelocityField& U, const VelocityField& z) {
    VelocityField zero(U.grid);
    return nonlinear_term_audit(U, z, zero, U);
}

}  // namespace vseed
