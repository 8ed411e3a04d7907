// Rate verification machinery: error functionals between trajectories,
// log-log slope fits over a delta sweep, and the Gronwall-type bound curves
// that the perturbation energy is checked against.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "vseed/fractional.hpp"
#include "vseed/nse.hpp"
#include "vseed/stokes.hpp"
#include "vseed/wall_data.hpp"

namespace vseed {

struct SlopeFit {
    double slope = 0.0;
    double intercept = 0.0;
    double r2 = 0.0;
    int points = 0;
    bool conclusive() const { return points >= 3 && r2 >= 0.95; }
};

/// Least squares on (log x, log y), all points weighted equally.
SlopeFit fit_loglog(const std::vector<double>& x, const std::vector<double>& y);

struct ErrorRecord {
    double sup_l2_sq = 0.0;     // max_n ||d||^2
    double sup_l2 = 0.0;
    double deform_l2_sq = 0.0;  // sum dt ||D d||^2
    double boundary_term = 0.0; // sum dt (1/delta) ||d.tau||^2_Gamma
    double total = 0.0;
    double trace_l2 = 0.0;      // sqrt( sum dt ||d.tau||^2_Gamma )
};

/// Streaming accumulator for the difference of two trajectories; feed every
/// step in order.
class ErrorAccumulator {
  public:
    ErrorAccumulator(const ChannelGrid& grid, double dt, double delta)
        : grid_(grid), dt_(dt), delta_(delta) {}

    void add(int step, const VelocityField& a, const VelocityField& b);
    ErrorRecord finish() const;

  private:
    ChannelGrid grid_;
    double dt_, delta_;
    int last_step_ = -1;
    ErrorRecord acc_;
};

/// Both trajectories must store snapshots at every step (save_stride = 1).
ErrorRecord error_functionals(const Trajectory& u, const Trajectory& v, double delta);

// ---------------------------------------------------------------------------

struct RatePoint {
    double delta = 0.0;
    bool ok = false;
    std::string error;       // solver failure message if any
    ErrorRecord err;         // u_delta - v
    ErrorRecord werr;        // w = u_delta - z_delta - v
    double z_energy = 0.0;   // sup ||z||^2 + sum dt ||D z||^2
    double int_psi = 0.0;    // unit-constant Gronwall psi integral
    int gronwall_violations = 0;
};

struct RateAssertion {
    std::string name;
    double slope = 0.0, threshold = 0.0, r2 = 0.0;
    bool conclusive = false;
    bool pass = false;  // meaningful only when conclusive
};

struct RateReport {
    double alpha = 1.0;
    std::vector<RatePoint> points;  // deltas strictly decreasing
    bool partial = false;

    SlopeFit slope_total, slope_sup_l2, slope_trace, slope_w_total, slope_z_energy,
        slope_int_psi;
    std::vector<RateAssertion> assertions;

    bool all_pass() const;
    std::string summary() const;
};

struct SweepOptions {
    double gronwall_c = 64.0;  // pinned estimate constant
    bool init_total_with_lifting = true;  // u_delta(0) = u0 + G(0)
    std::vector<std::string> advisories;  // filled by the sweep
};

/// Runs the no-slip reference once and one split (z + perturbation) run per
/// delta, accumulating the error functionals streamingly. Per-delta solver
/// failures are recorded and mark the report partial.
RateReport rate_sweep(const NseConfig& cfg, const WallData& w,
                      const std::vector<double>& deltas, double alpha,
                      SweepOptions& opt);

// ---------------------------------------------------------------------------

struct GronwallCurves {
    std::vector<double> A;        // exponent of the perturbation estimate
    std::vector<double> bound_U;  // right-hand side curve for sup ||U||^2
    std::vector<double> psi, phi, chi;
    std::vector<double> bound_w;  // integrated comparison-inequality curve
    int violations_U = 0;         // steps where running sup ||U||^2 exceeds bound_U
    double int_psi = 0.0;
};

/// Builds the bound curves from measured series. vdiag may be null when no
/// reference flow is involved (then phi drops its ||grad v||^2 part and chi
/// is zero).
GronwallCurves gronwall_bound(const Trajectory& split, const LinearEvolution& z,
                              const std::vector<StepDiag>* vdiag, double C,
                              double u0_minus_g0_l2sq);

}  // namespace vseed
