// Navier slip-with-friction closure.
//
// The tangential condition  u.tau + delta n.D(u).tau = 0  reads, at the flat
// bottom wall (n = (0,-1)):  u_wall = delta * d12_wall  with
// d12 = (du/dy + dv/dx)/2, and with the sign flipped at the top. Writing the
// wall value as a two-point average and the wall-normal derivative as a
// two-point difference gives a closed-form ghost row:
//   bottom:  u(-1) = [ u(0)(delta - hy) + delta hy dv/dx ] / (delta + hy)
//   top:     u(ny) = [ u(ny-1)(delta - hy) - delta hy dv/dx ] / (delta + hy)
// delta = 0 recovers the no-slip mirror, delta -> inf the free-slip closure.

#pragma once

#include "vseed/grid.hpp"
#include "vseed/wall_data.hpp"

namespace vseed {

/// Writes the imposed normal velocity into the wall v rows:
/// v(x,0) = -delta^alpha g_bottom, v(x,1) = +delta^alpha g_top.
void set_wall_flux(VelocityField& f, const WallData& w, int t_index, double delta, double alpha);

/// Zero normal trace (no-slip / homogeneous runs).
void set_wall_flux_zero(VelocityField& f);

/// Fills both ghost u rows from the current interior and wall v rows.
/// delta >= 0; delta = 0 is the Dirichlet limit.
void close_ghosts(VelocityField& f, double delta);

/// set_wall_flux + close_ghosts in one call. Rejects delta <= 0 (explicit
/// slip runs need a positive layer width; use close_ghosts for limits).
void apply_bc(VelocityField& f, const WallData& w, int t_index, double delta, double alpha);

/// Max residual of the discrete slip relation after closure (both walls).
double robin_residual(const VelocityField& f, double delta);

/// Max over wall points of |n.D(f).tau - curl(f)/2| for fields with zero
/// normal trace, one-sided second-order stencils on the stress side and
/// extrapolated node values on the curl side. Flat walls, so no curvature
/// term.
double vorticity_identity_residual(const VelocityField& f);

}  // namespace vseed
