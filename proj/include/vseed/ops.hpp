// Discrete differential operators and quadratures on the MAC grid.
//
// The divergence/gradient pair is adjoint in the midpoint inner product for
// fields with zero wall-normal trace, and the deformation stencil is the one
// whose formal adjoint drives the viscous operator, so energy identities hold
// to round-off.

#pragma once

#include "vseed/grid.hpp"

namespace vseed {

/// Cell divergence (u_E - u_W)/hx + (v_N - v_S)/hy.
PressureField divergence(const VelocityField& f);

double divergence_max(const VelocityField& f);
double divergence_sum(const VelocityField& f);  // times cell volume

/// Staggered pressure gradient; wall v rows of the result stay zero.
VelocityField gradient(const PressureField& p);

/// Centered deformation tensor. Requires populated ghost rows.
DeformationField deformation(const VelocityField& f);

struct Norms {
    double l2 = 0.0;
    double h1_semi = 0.0;
    double l4 = 0.0;
    double boundary_l2_tangential = 0.0;
};

/// Midpoint/trapezoid quadrature norms of a velocity field. Faces are weighted
/// by their control volumes (wall v rows half), node quantities by trapezoid
/// weights in y. The boundary norm uses wall-interpolated tangential velocity,
/// so ghosts must be closed.
Norms norms(const VelocityField& f);

/// Same quadrature for a cell-centered scalar (h1_semi and boundary are not
/// defined here and return 0; l2/l4 only).
Norms norms(const PressureField& f);

/// Deformation magnitude ||D(f)||^2 with trapezoid node weights.
double deform_sq(const VelocityField& f);

/// Full velocity-gradient seminorm ||grad f||^2 (same quadrature family).
double grad_sq(const VelocityField& f);

/// L2(Omega) inner product of velocity DOF + data entries, control-volume
/// weighted (ghosts excluded).
double inner(const VelocityField& a, const VelocityField& b);
double l2_sq(const VelocityField& a);

double inner(const PressureField& a, const PressureField& b);

/// Wall-interpolated tangential trace, squared and summed with hx weights:
/// ||u . tau||^2_Gamma over both walls.
double boundary_tang_sq(const VelocityField& f);

/// Discrete vector Laplacian magnitude ||lap_h f|| used as the H2 surrogate
/// building block. Ghosts must be closed.
double laplacian_l2(const VelocityField& f);

}  // namespace vseed
