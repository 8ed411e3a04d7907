// Saddle-point solves
//   A x + grad q = b,   div x = c,   x.n = 0 on the walls,
// by conjugate-gradient iteration on the pressure Schur complement
// S = -div A^-1 grad. A^-1 is the direct wavenumber solver, so each Schur
// application costs one transform round trip. The preconditioner is the
// lumped pressure mass scaled by nu, plus, for evolution steps (sigma > 0),
// the standard sigma-weighted Poisson term that keeps the iteration count
// flat as dt shrinks.

#pragma once

#include <memory>
#include <stdexcept>
#include <vector>

#include "vseed/fourier.hpp"
#include "vseed/grid.hpp"
#include "vseed/momentum.hpp"

namespace vseed {

struct SolverError : std::runtime_error {
    std::vector<double> residual_history;
    SolverError(const std::string& msg, std::vector<double> hist)
        : std::runtime_error(msg), residual_history(std::move(hist)) {}
};

struct StokesSolution {
    VelocityField velocity;
    PressureField pressure;  // zero mean
    double residual = 0.0;   // final relative Schur residual
    int iterations = 0;
};

struct SaddleOptions {
    double tol = 1e-10;
    int max_iter = 600;
};

class SchurSolver {
  public:
    SchurSolver(const ChannelGrid& grid, double nu, double sigma, double delta);

    /// c == nullptr means div x = 0.
    StokesSolution solve(const VelocityField& b, const PressureField* c,
                         const SaddleOptions& opt) const;

    const MomentumWaveSolver& ainv() const { return ainv_; }

  private:
    ChannelGrid grid_;
    double nu_, sigma_, delta_;
    MomentumWaveSolver ainv_;
    PoissonSolver poisson_;
};

}  // namespace vseed
