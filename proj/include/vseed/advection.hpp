// Skew-symmetric advection on the staggered grid: the average of the
// conservative and convective forms, written as interpolated-flux divergence
// minus half the advected field times the interpolated divergence of the
// advecting field. With that correction the quadratic form <w, adv(c;w)>
// reduces to wall flux terms exactly, independent of how well div c
// vanishes, which is what the energy estimates need.

#pragma once

#include "vseed/grid.hpp"

namespace vseed {

/// adv(c; w) ~ (c . grad) w in skew form. Needs ghosts of c and w closed and
/// wall v rows set (they act as the boundary flux). Result lives on DOFs.
VelocityField advect(const VelocityField& c, const VelocityField& w);

struct AdvectionAudit {
    // L2 magnitudes of the five advective products (U.grad)w, (w.grad)v,
    // (U.grad)z, (z.grad)U, (z.grad)z
    double t_Uw = 0.0, t_wv = 0.0, t_Uz = 0.0, t_zU = 0.0, t_zz = 0.0;
    double cancel_self = 0.0;  // <U, (U.grad)U>
    double cancel_pair = 0.0;  // <U, (U.grad)z> + <z, (U.grad)U>
};

AdvectionAudit nonlinear_term_audit(const VelocityField& w, const VelocityField& z,
                                    const VelocityField& v, const VelocityField& U);

/// Convenience form with w = U, v = 0.
AdvectionAudit nonlinear_term_audit(const VelocityField& U, const VelocityField& z);

}  // namespace vseed
