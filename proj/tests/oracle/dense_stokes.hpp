// Brute-force reference for the saddle-point solves: assemble the complete
// system (momentum block, gradient/divergence coupling, pressure-mean
// bordering) and solve it by dense LU with partial pivoting. Kept apart from
// the production solver so the two paths share only the operator stencils.

#pragma once

#include "vseed/grid.hpp"
#include "vseed/saddle.hpp"

namespace vseed::testing {

class DenseSaddleOracle {
  public:
    DenseSaddleOracle(const ChannelGrid& grid, double nu, double sigma, double delta);

    /// Same contract as SchurSolver::solve; c == nullptr means div x = 0.
    StokesSolution solve(const VelocityField& b, const PressureField* c) const;

  private:
    ChannelGrid grid_;
    double nu_, sigma_, delta_;
    int n_u_, n_v_, n_p_, n_;
    std::vector<double> lu_;   // factored matrix, row-major
    std::vector<int> pivot_;

    int idx_u(int i, int j) const { return j * grid_.nx + grid_.wrap(i); }
    int idx_v(int i, int j) const { return n_u_ + (j - 1) * grid_.nx + grid_.wrap(i); }
    int idx_p(int i, int j) const { return n_u_ + n_v_ + j * grid_.nx + grid_.wrap(i); }
};

}  // namespace vseed::testing
