// Nonlinear solvers: the no-slip reference flow, the slip/flux problem
// integrated directly (monolithic), and the split form where the linear
// slip-Stokes part z is precomputed and the homogeneous perturbation U is
// stepped with the combined advection.
//
// Time stepping is IMEX Euler: explicit skew-symmetric advection, implicit
// viscous solve through the direct wavenumber factorization, incremental
// pressure projection with the Fourier Poisson solver. The imposed wall flux
// enters before the projection, whose right-hand side then carries the
// boundary divergence; compatibility makes the Poisson problem solvable.

#pragma once

#include <functional>
#include <stdexcept>
#include <vector>

#include "vseed/grid.hpp"
#include "vseed/stokes.hpp"
#include "vseed/wall_data.hpp"

namespace vseed {

struct CflError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct BlowupError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

using Forcing = std::function<void(double t, VelocityField& f)>;

enum class NseMode { NoSlip, Split, Monolithic };

struct NseConfig {
    ChannelGrid grid;
    double delta = 0.1;  // ignored in no-slip mode
    double alpha = 1.0;
    double nu = 1.0;
    double dt = 0.0;
    int nt = 0;
    double solver_tol = 1e-10;
    double proj_tol = 1e-10;
    int save_stride = 0;  // 0 = keep no snapshots
    Forcing forcing;      // optional, assumed divergence-free

    double T() const { return dt * nt; }
    void validate() const;
};

struct StepDiag {
    double t = 0.0;
    double energy = 0.0;       // ||u||^2 / 2
    double deform_sq = 0.0;    // ||D(u)||^2
    double boundary_diss = 0.0;  // (nu/delta) ||u.tau||^2_Gamma (0 for no-slip)
    double div_max = 0.0;
    double l2 = 0.0;
    double grad_sq = 0.0;
    double h2_surr = 0.0;  // (||lap_h u|| + ||grad u||)^2
    double f_l2_sq = 0.0;

    // per-step energy budget (entries valid from step 1 on)
    double adv_work = 0.0, press_work = 0.0, force_work = 0.0;
    double visc_deform = 0.0, visc_slip = 0.0;
    double step_loss = 0.0, proj_loss = 0.0;
    double imbalance = 0.0;  // budget residual; round-off for homogeneous data
};

struct Trajectory {
    ChannelGrid grid;
    double dt = 0.0;
    int nt = 0;
    double delta = 0.0, alpha = 1.0, nu = 1.0;
    NseMode mode = NseMode::NoSlip;
    int save_stride = 0;

    std::vector<StepDiag> diag;          // nt+1
    std::vector<VelocityField> snaps;    // every save_stride steps (if > 0)
    std::vector<PressureField> psnaps;
    std::vector<int> snap_steps;

    // split mode: perturbation norms for the Gronwall ledger
    std::vector<double> U_l2_sq, U_deform_sq, U_tang_sq, U_grad_sq;

    double sup_l2_sq() const;
};

/// Called with (step, u, p) after every accepted step, including step 0.
using StepObserver = std::function<void(int, const VelocityField&, const PressureField&)>;

Trajectory solve_noslip(const NseConfig& cfg, const VelocityField& u0,
                        const StepObserver& obs = {});

Trajectory solve_monolithic(const NseConfig& cfg, const VelocityField& u0, const WallData& w,
                            const StepObserver& obs = {});

/// u0 is the initial total field; internally U(0) = u0 - z(0). The emitted
/// trajectory is u = U + z.
Trajectory solve_split(const NseConfig& cfg, const VelocityField& u0, const WallData& w,
                       const LinearEvolution& ztraj, const StepObserver& obs = {});

}  // namespace vseed
