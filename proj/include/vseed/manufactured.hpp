// Manufactured no-slip flow for convergence studies: the divergence-free
// field from the stream function (e^{-t}/(2 pi)) sin^2(pi y) cos(2 pi x)
// together with the body force that makes it an exact solution (pressure
// gauge zero).

#pragma once

#include "vseed/nse.hpp"

namespace vseed {

double manufactured_u(double x, double y, double t);
double manufactured_v(double x, double y, double t);

/// Evaluates the exact field on the faces of the grid (ghosts included).
VelocityField manufactured_velocity(const ChannelGrid& grid, double t);

Forcing manufactured_forcing(double nu);

}  // namespace vseed
