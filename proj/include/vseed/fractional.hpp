// Fractional Sobolev norms in time via the Fourier transform of the
// zero-extended trajectory.
//
// A sampled trajectory on [0,T] is extended by zero onto a window of at
// least 4T (the padding factor tempers leakage from the hard cutoff), the
// transform is taken with the quadrature weight dt, and
//   ||f||_{H^alpha}^2 = sum_j (1 + |xi_j|^{2 alpha}) ||fhat_j||^2 dxi,
// with angular frequencies xi_j and dxi = 2 pi / window. At alpha = 0 this
// reproduces the rectangle-rule L^2(0,T) norm exactly (discrete Parseval),
// which is asserted on every call.

#pragma once

#include <vector>

#include "vseed/grid.hpp"

namespace vseed {

struct TimeSeries {
    std::vector<double> values;  // nt+1 uniform samples
    double dt = 0.0;

    double horizon() const { return dt * double(values.size() - 1); }
};

/// Full H^alpha(0,T) norm of a scalar series, alpha in [0,1).
double fractional_norm(const TimeSeries& s, double alpha);

/// Seminorm part only (the |xi|^{2 alpha}-weighted sum).
double fractional_seminorm(const TimeSeries& s, double alpha);

/// H^alpha(0,T; L2(Omega)) norm of a field trajectory. Uses the Gram matrix
/// of snapshots, so ||fhat(xi)||_{L2} is exact for the sampled data.
double field_fractional_norm(const std::vector<VelocityField>& snaps, double dt, double alpha);

struct FractionalAudit {
    double z_norm = 0.0;  // H^{1/2-eps} of the homogenized evolution part
    double g_norm = 0.0;  // H^{1/2+eps} of the lifting trajectory
    double ratio = 0.0;
    bool defined = false;
};

/// Ratio ||Z||_{H^{1/2-eps}} / ||G||_{H^{1/2+eps}}; flagged undefined when
/// the denominator vanishes.
FractionalAudit estimate_audit_fractional(const std::vector<VelocityField>& Z,
                                          const std::vector<VelocityField>& G, double dt,
                                          double epsilon);

}  // namespace vseed
