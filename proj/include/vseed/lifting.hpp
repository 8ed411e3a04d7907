// Divergence-free lifting of the wall-normal flux.
//
// The zero-mean part of each wall trace is lifted through a discrete stream
// function psi(x,y) = (1-beta(y)) A(x) + beta(y) B(x), where A and B are
// periodic antiderivatives of the imposed wall velocities and
// beta(y) = 3y^2 - 2y^3 blends between the walls with beta'(0) = beta'(1) = 0
// so the lifting does not disturb the tangential slip balance. The mean part
// (net bottom-to-top through-flow, permitted by the compatibility condition)
// is the uniform field (0, c(t)).
//
// The discrete curl of a node stream function telescopes, so the result is
// divergence-free to round-off and carries the wall trace exactly.

#pragma once

#include "vseed/grid.hpp"
#include "vseed/wall_data.hpp"

namespace vseed {

/// Lifting field G1 for time slice t_index with trace scaled by delta^alpha.
/// Throws if w violates the compatibility condition.
VelocityField build_lifting(const ChannelGrid& grid, const WallData& w, int t_index,
                            double delta, double alpha);

}  // namespace vseed
