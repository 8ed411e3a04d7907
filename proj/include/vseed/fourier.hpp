// Small spectral toolbox: complex DFT/FFT in x, banded Hermitian
// factorizations per wavenumber, and the direct pressure Poisson solver
// (Fourier in the periodic direction, Neumann tridiagonal across the
// channel).

#pragma once

#include <complex>
#include <vector>

#include "vseed/grid.hpp"

namespace vseed {

using cplx = std::complex<double>;

/// In-place forward DFT (sign e^{-i 2 pi jk/n}), radix-2 when n is a power of
/// two, O(n^2) otherwise. No normalization.
void dft(std::vector<cplx>& a, bool inverse);

/// Hermitian positive definite banded matrix, lower storage:
/// band[b][i] = A(i, i-bandwidth+b) for b = 0..bandwidth (b = bandwidth is the
/// diagonal). Cholesky factorization and solve.
class BandedHermitian {
  public:
    BandedHermitian(int n, int bandwidth);

    cplx& at(int row, int col);  // only row >= col, row-col <= bandwidth
    void factor();
    void solve(std::vector<cplx>& rhs) const;

    int size() const { return n_; }
    int bandwidth() const { return bw_; }

  private:
    int n_, bw_;
    std::vector<std::vector<cplx>> band_;
    bool factored_ = false;
};

/// Direct solver for the cell-centered Poisson problem
///   lap p = rhs, homogeneous Neumann at the walls, periodic in x,
/// zero-mean gauge. The x-direction is diagonalized by the DFT; each
/// wavenumber leaves a real tridiagonal system in y. The zero wavenumber is
/// singular (constants); its right-hand side mean is projected out and the
/// solution is re-gauged, which is exact for compatible data.
class PoissonSolver {
  public:
    explicit PoissonSolver(const ChannelGrid& grid);

    /// Solves in place; result has zero mean.
    void solve(PressureField& rhs_then_solution) const;

    const ChannelGrid& grid() const { return grid_; }

  private:
    ChannelGrid grid_;
    std::vector<double> mu_;  // x-symbol per wavenumber, 4 sin^2(theta/2)/hx^2
};

}  // namespace vseed
