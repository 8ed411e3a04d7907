// The two linear building blocks of the splitting: the stationary Stokes
// problem carrying the wall flux (time enters as a parameter) and the
// slip-Stokes evolution driven by -dG/dt after homogenization.

#pragma once

#include <vector>

#include "vseed/grid.hpp"
#include "vseed/saddle.hpp"
#include "vseed/wall_data.hpp"

namespace vseed {

/// Stationary slip Stokes solve with prescribed normal trace delta^alpha g at
/// time slice t_index. Splits off the explicit lifting and solves the
/// homogeneous-trace remainder through the Schur iteration.
StokesSolution solve_stationary(const ChannelGrid& grid, const WallData& w, int t_index,
                                double delta, double alpha, double nu, double tol);

/// Same, reusing a prebuilt solver (per-step callers); viscosity comes from
/// the solver itself.
StokesSolution solve_stationary(const SchurSolver& stat, const WallData& w, int t_index,
                                double delta, double alpha, double tol);

struct LinearEvolution {
    ChannelGrid grid;
    double dt = 0.0;
    int nt = 0;
    double delta = 0.0, alpha = 1.0, nu = 1.0;

    std::vector<VelocityField> z;   // nt+1 snapshots, ghosts closed
    std::vector<PressureField> q;   // nt+1, zero mean
    std::vector<double> residuals;
    std::vector<int> iterations;

    // per-step scalars (nt+1 entries)
    std::vector<double> z_l2, z_deform_sq, z_grad_sq, z_tang_sq;
    std::vector<double> G_l2, G_deform_sq;

    // optional field series for the fractional-norm audits
    std::vector<VelocityField> G;        // stationary snapshots
    std::vector<VelocityField> Zhom;     // z - G

    /// sup ||z||^2 + sum dt (||D z||^2): the quantity whose delta-scaling the
    /// sweep verifies.
    double energy_functional() const;
};

struct EvolutionOptions {
    double tol = 1e-10;
    bool keep_fields = false;  // retain G and z-G series for audits
};

/// Implicit Euler on the homogenized unknown Z = z - G with right-hand side
/// -dG/dt by backward differences of stationary snapshots; boundary data at
/// the new time level; z(0) = G(0).
LinearEvolution solve_linear_evolution(const ChannelGrid& grid, const WallData& w,
                                       double delta, double alpha, double nu, double dt,
                                       int nt, const EvolutionOptions& opt = {});

struct LinearEnergyAudit {
    double lhs = 0.0;       // sup ||z||^2 + sum dt (||Dz||^2 + slip) + frac term
    double rhs = 0.0;       // ||G||^2_{H^{1/2+eps}(0,T;L2)} + sum dt ||D G||^2
    double ratio = 0.0;     // lhs / rhs, 0 when both vanish
    bool defined = true;
};

/// Requires keep_fields = true on the evolution run.
LinearEnergyAudit energy_audit_linear(const LinearEvolution& traj, double delta,
                                      double epsilon = 0.1);

}  // namespace vseed
