#include "vseed/ops.hpp"

#include <algorithm>
#include <cmath>

namespace vseed {

PressureField divergence(const VelocityField& f) {
    const ChannelGrid& g = f.grid;
    PressureField d(g);
    for (int j = 0; j < g.ny; ++j)
        for (int i = 0; i < g.nx; ++i)
            d(i, j) = (f.u(i + 1, j) - f.u(i, j)) / g.hx + (f.v(i, j + 1) - f.v(i, j)) / g.hy;
    return d;
}

double divergence_max(const VelocityField& f) {
    const ChannelGrid& g = f.grid;
    double m = 0.0;
    for (int j = 0; j < g.ny; ++j)
        for (int i = 0; i < g.nx; ++i) {
            double d = (f.u(i + 1, j) - f.u(i, j)) / g.hx + (f.v(i, j + 1) - f.v(i, j)) / g.hy;
            m = std::max(m, std::abs(d));
        }
    return m;
}

double divergence_sum(const VelocityField& f) {
    const ChannelGrid& g = f.grid;
    double s = 0.0;
    for (int j = 0; j < g.ny; ++j)
        for (int i = 0; i < g.nx; ++i)
            s += (f.u(i + 1, j) - f.u(i, j)) / g.hx + (f.v(i, j + 1) - f.v(i, j)) / g.hy;
    return s * g.hx * g.hy;
}

VelocityField gradient(const PressureField& p) {
    const ChannelGrid& g = p.grid;
    VelocityField r(g);
    for (int j = 0; j < g.ny; ++j)
        for (int i = 0; i < g.nx; ++i)
            r.u(i, j) = (p(i, j) - p(i - 1, j)) / g.hx;
    for (int j = 1; j < g.ny; ++j)
        for (int i = 0; i < g.nx; ++i)
            r.v(i, j) = (p(i, j) - p(i, j - 1)) / g.hy;
    return r;
}

DeformationField deformation(const VelocityField& f) {
    const ChannelGrid& g = f.grid;
    DeformationField d(g);
    for (int j = 0; j < g.ny; ++j)
        for (int i = 0; i < g.nx; ++i) {
            d.D11(i, j) = (f.u(i + 1, j) - f.u(i, j)) / g.hx;
            d.D22(i, j) = (f.v(i, j + 1) - f.v(i, j)) / g.hy;
        }
    for (int j = 0; j <= g.ny; ++j)
        for (int i = 0; i < g.nx; ++i)
            d.D12(i, j) = 0.5 * ((f.u(i, j) - f.u(i, j - 1)) / g.hy +
                                 (f.v(i, j) - f.v(i - 1, j)) / g.hx);
    return d;
}

double inner(const VelocityField& a, const VelocityField& b) {
    const ChannelGrid& g = a.grid;
    const double vol = g.hx * g.hy;
    double s = 0.0;
    for (int j = 0; j < g.ny; ++j)
        for (int i = 0; i < g.nx; ++i) s += a.u(i, j) * b.u(i, j);
    for (int j = 1; j < g.ny; ++j)
        for (int i = 0; i < g.nx; ++i) s += a.v(i, j) * b.v(i, j);
    s *= vol;
    // wall v faces carry half a control volume
    for (int i = 0; i < g.nx; ++i)
        s += 0.5 * vol * (a.v(i, 0) * b.v(i, 0) + a.v(i, g.ny) * b.v(i, g.ny));
    return s;
}

double l2_sq(const VelocityField& a) { return inner(a, a); }

double inner(const PressureField& a, const PressureField& b) {
    double s = 0.0;
    for (size_t k = 0; k < a.p.size(); ++k) s += a.p[k] * b.p[k];
    return s * a.grid.hx * a.grid.hy;
}

double boundary_tang_sq(const VelocityField& f) {
    const ChannelGrid& g = f.grid;
    double s = 0.0;
    for (int i = 0; i < g.nx; ++i) {
        double ub = 0.5 * (f.u(i, -1) + f.u(i, 0));
        double ut = 0.5 * (f.u(i, g.ny - 1) + f.u(i, g.ny));
        s += ub * ub + ut * ut;
    }
    return s * g.hx;
}

double deform_sq(const VelocityField& f) {
    const ChannelGrid& g = f.grid;
    DeformationField d = deformation(f);
    const double vol = g.hx * g.hy;
    double s = 0.0;
    for (int j = 0; j < g.ny; ++j)
        for (int i = 0; i < g.nx; ++i)
            s += (d.D11(i, j) * d.D11(i, j) + d.D22(i, j) * d.D22(i, j)) * vol;
    for (int j = 0; j <= g.ny; ++j) {
        double w = (j == 0 || j == g.ny) ? 0.5 : 1.0;
        for (int i = 0; i < g.nx; ++i)
            s += 2.0 * d.D12(i, j) * d.D12(i, j) * w * vol;
    }
    return s;
}

double grad_sq(const VelocityField& f) {
    const ChannelGrid& g = f.grid;
    const double vol = g.hx * g.hy;
    double s = 0.0;
    // du/dx, dv/dy at cells
    for (int j = 0; j < g.ny; ++j)
        for (int i = 0; i < g.nx; ++i) {
            double ux = (f.u(i + 1, j) - f.u(i, j)) / g.hx;
            double vy = (f.v(i, j + 1) - f.v(i, j)) / g.hy;
            s += (ux * ux + vy * vy) * vol;
        }
    // du/dy, dv/dx at nodes with trapezoid weights in y
    for (int j = 0; j <= g.ny; ++j) {
        double w = (j == 0 || j == g.ny) ? 0.5 : 1.0;
        for (int i = 0; i < g.nx; ++i) {
            double uy = (f.u(i, j) - f.u(i, j - 1)) / g.hy;
            double vx = (f.v(i, j) - f.v(i - 1, j)) / g.hx;
            s += (uy * uy + vx * vx) * w * vol;
        }
    }
    return s;
}

Norms norms(const VelocityField& f) {
    const ChannelGrid& g = f.grid;
    const double vol = g.hx * g.hy;
    Norms n;
    double l2 = 0.0, l4 = 0.0;
    for (int j = 0; j < g.ny; ++j)
        for (int i = 0; i < g.nx; ++i) {
            double a = f.u(i, j);
            l2 += a * a * vol;
            l4 += a * a * a * a * vol;
        }
    for (int j = 0; j <= g.ny; ++j) {
        double w = (j == 0 || j == g.ny) ? 0.5 : 1.0;
        for (int i = 0; i < g.nx; ++i) {
            double a = f.v(i, j);
            l2 += a * a * w * vol;
            l4 += a * a * a * a * w * vol;
        }
    }
    n.l2 = std::sqrt(l2);
    n.l4 = std::pow(l4, 0.25);
    n.h1_semi = std::sqrt(grad_sq(f));
    n.boundary_l2_tangential = std::sqrt(boundary_tang_sq(f));
    return n;
}

Norms norms(const PressureField& f) {
    const double vol = f.grid.hx * f.grid.hy;
    Norms n;
    double l2 = 0.0, l4 = 0.0;
    for (double a : f.p) {
        l2 += a * a * vol;
        l4 += a * a * a * a * vol;
    }
    n.l2 = std::sqrt(l2);
    n.l4 = std::pow(l4, 0.25);
    return n;
}

double laplacian_l2(const VelocityField& f) {
    const ChannelGrid& g = f.grid;
    const double ihx2 = 1.0 / (g.hx * g.hx), ihy2 = 1.0 / (g.hy * g.hy);
    const double vol = g.hx * g.hy;
    double s = 0.0;
    for (int j = 0; j < g.ny; ++j)
        for (int i = 0; i < g.nx; ++i) {
            double lap = (f.u(i + 1, j) - 2.0 * f.u(i, j) + f.u(i - 1, j)) * ihx2 +
                         (f.u(i, j + 1) - 2.0 * f.u(i, j) + f.u(i, j - 1)) * ihy2;
            s += lap * lap * vol;
        }
    for (int j = 1; j < g.ny; ++j)
        for (int i = 0; i < g.nx; ++i) {
            double lap = (f.v(i + 1, j) - 2.0 * f.v(i, j) + f.v(i - 1, j)) * ihx2 +
                         (f.v(i, j + 1) - 2.0 * f.v(i, j) + f.v(i, j - 1)) * ihy2;
            s += lap * lap * vol;
        }
    return std::sqrt(s);
}

}  // namespace vseed
