// Wall-normal flux data g(x,t) on both walls.
//
// Sign convention (fixed once, used everywhere): g > 0 means outflow through
// the wall, u.n = delta^alpha * g with outward normal (0,-1) at y=0 and (0,1)
// at y=1. Hence the imposed wall rows are
//   v(x,0) = -delta^alpha g_bottom,   v(x,1) = +delta^alpha g_top.
// Samples are stored unscaled; the delta^alpha factor is applied at
// imposition time.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "vseed/grid.hpp"

namespace vseed {

struct WallData {
    int nx = 0;
    int nt = 0;        // samples cover t_k = k*dt, k = 0..nt
    double dt = 0.0;
    double lx = 1.0;
    double alpha = 1.0;  // default flux exponent, >= 1 in experiments
    double delta = 1.0;  // default layer width; solvers may override
    std::vector<double> g_bottom;  // (nt+1) * nx, row-major in time
    std::vector<double> g_top;

    WallData() = default;
    WallData(int nx_, int nt_, double dt_, double lx_)
        : nx(nx_), nt(nt_), dt(dt_), lx(lx_),
          g_bottom(size_t(nt_ + 1) * nx_, 0.0), g_top(size_t(nt_ + 1) * nx_, 0.0) {}

    double& bottom(int i, int k) { return g_bottom[size_t(k) * nx + i]; }
    double bottom(int i, int k) const { return g_bottom[size_t(k) * nx + i]; }
    double& top(int i, int k) { return g_top[size_t(k) * nx + i]; }
    double top(int i, int k) const { return g_top[size_t(k) * nx + i]; }

    double max_abs() const;

    /// Worst |sum_i (g_b + g_t) hx| over time slices; zero for compatible data.
    double compatibility_defect(int* worst_slice = nullptr) const;
};

/// Removes the joint mean from each time slice so the flux integrates to zero
/// over the whole boundary. Idempotent (a projection).
WallData project_compatible(const WallData& raw);

enum class FluxKind { Tone, Multitone, BandLimitedNoise };

struct FluxSpec {
    FluxKind kind = FluxKind::Tone;
    double amplitude = 1.0;
    int kappa = 1;        // spatial wavenumber (tone); must be nonzero
    double omega = 6.283185307179586;  // temporal angular frequency (tone)
    int modes = 3;        // spatial mode count (multitone / noise)
    double sobolev_s = 0.6;  // target temporal smoothness H^s for noise
    std::uint64_t seed = 1;
};

/// Synthesizes compatible wall data. Tone: sin(2 pi kappa x / lx) sin(omega t)
/// on the bottom wall, negated on the top. Band-limited noise: seeded random
/// Fourier modes whose temporal amplitudes decay like m^-( (1+2s)/2 + eta ),
/// eta = 0.1, so the H^s(0,T) norm is finite; the per-mode draws depend only
/// on (seed, mode), so refining nt extends the same realization.
WallData make_test_flux(const FluxSpec& spec, int nx, int nt, double dt, double lx);

/// CSV with header "wall,t_index,x_index,value"; wall is "bottom" or "top".
void write_wall_csv(const WallData& w, const std::string& path);
WallData read_wall_csv(const std::string& path, int nx, int nt, double dt, double lx);

}  // namespace vseed
