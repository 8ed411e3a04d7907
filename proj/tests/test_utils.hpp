// Shared helpers for the unit suites: analytic field fills, seeded random
// fields, and a step that renders a random field discretely divergence-free.

#pragma once

#include <cmath>
#include <cstdint>
#include <functional>

#include "vseed/bc.hpp"
#include "vseed/fourier.hpp"
#include "vseed/grid.hpp"
#include "vseed/ops.hpp"

namespace vseed::testing {

inline std::uint64_t mix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline double urand(std::uint64_t& state) {  // in (-1, 1)
    state = mix(state);
    return 2.0 * (double(state >> 11) * 0x1.0p-53) - 1.0;
}

/// Fill u and v from analytic profiles, including ghost rows.
inline void fill_analytic(VelocityField& f, const std::function<double(double, double)>& fu,
                          const std::function<double(double, double)>& fv) {
    const ChannelGrid& g = f.grid;
    for (int j = -1; j <= g.ny; ++j)
        for (int i = 0; i < g.nx; ++i) f.u(i, j) = fu(g.xu(i), g.yu(j));
    for (int j = 0; j <= g.ny; ++j)
        for (int i = 0; i < g.nx; ++i) f.v(i, j) = fv(g.xc(i), g.yv(j));
}

/// Smooth random field: a few low Fourier modes with seeded coefficients,
/// zero normal trace, ghosts closed with the given slip width.
inline VelocityField random_smooth_field(const ChannelGrid& g, std::uint64_t seed,
                                         double delta) {
    VelocityField f(g);
    std::uint64_t st = seed * 0x9e3779b97f4a7c15ULL + 12345;
    for (int kx = 1; kx <= 3; ++kx)
        for (int ky = 1; ky <= 3; ++ky) {
            double au = urand(st), av = urand(st), pu = urand(st) * M_PI, pv = urand(st) * M_PI;
            for (int j = -1; j <= g.ny; ++j)
                for (int i = 0; i < g.nx; ++i)
                    f.u(i, j) += au * std::cos(2.0 * M_PI * kx * g.xu(i) / g.lx + pu) *
                                 std::sin(M_PI * ky * g.yu(j));
            for (int j = 1; j < g.ny; ++j)
                for (int i = 0; i < g.nx; ++i)
                    f.v(i, j) += av * std::cos(2.0 * M_PI * kx * g.xc(i) / g.lx + pv) *
                                 std::sin(M_PI * ky * g.yv(j));
        }
    set_wall_flux_zero(f);
    close_ghosts(f, delta);
    return f;
}

/// Project a field onto the discretely divergence-free subspace (exact to
/// round-off thanks to the direct Poisson solve).
inline VelocityField make_divfree(const VelocityField& f, double delta) {
    PoissonSolver poisson(f.grid);
    PressureField phi = divergence(f);
    poisson.solve(phi);
    VelocityField out = f;
    out.axpy(-1.0, gradient(phi));
    close_ghosts(out, delta);
    return out;
}

}  // namespace vseed::testing
