// Implicit momentum operator  A f = sigma f - nu div D(f)  on the velocity
// DOFs (u rows 0..ny-1, v rows 1..ny-1), with the slip closure folded into
// the ghost rows and the wall v rows treated as data.
//
// The stencil is the formal adjoint of the deformation stencil, so with
// homogeneous wall data
//   <A f, f> = sigma ||f||^2 + nu ||D(f)||^2 + (nu/delta) ||f.tau||^2_Gamma
// holds to round-off (trapezoid node quadrature). That identity is what the
// energy ledgers rely on.
//
// The operator has constant coefficients and is periodic in x, so it
// diagonalizes by wavenumber into small banded Hermitian systems across the
// channel; those are factored once and give a direct application of A^-1.

#pragma once

#include <vector>

#include "vseed/fourier.hpp"
#include "vseed/grid.hpp"

namespace vseed {

struct MomentumOp {
    ChannelGrid grid;
    double nu = 1.0;
    double sigma = 0.0;  // 1/dt for evolution steps, 0 for stationary solves
    double delta = 1.0;  // slip length; 0 = no-slip

    /// Applies A to a field whose wall v rows and ghost rows were already
    /// set by the caller (data or homogeneous closure). Output is defined on
    /// DOF entries; its wall rows and ghosts are zero.
    void apply_closed(const VelocityField& f, VelocityField& out) const;

    /// Homogeneous-data application: zeros the wall rows of a copy, closes
    /// ghosts with the slip closure, applies.
    void apply_hom(const VelocityField& f, VelocityField& out) const;
};

/// Direct A^-1 via x-wavenumber factorization. Build once per
/// (grid, nu, sigma, delta) and reuse across steps and iterations.
class MomentumWaveSolver {
  public:
    MomentumWaveSolver(const ChannelGrid& grid, double nu, double sigma, double delta);

    /// rhs on DOF entries; result has zero wall v rows and homogeneously
    /// closed ghosts.
    void solve(const VelocityField& rhs, VelocityField& out) const;

    const MomentumOp& op() const { return op_; }

  private:
    MomentumOp op_;
    std::vector<BandedHermitian> blocks_;  // one per wavenumber
};

/// (nu/delta) ||f.tau||^2_Gamma with wall-interpolated traces; 0 for delta=0.
double slip_dissipation(const VelocityField& f, double delta, double nu);

}  // namespace vseed
