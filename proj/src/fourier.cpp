#include "vseed/fourier.hpp"

#include <cmath>
#include <stdexcept>

namespace vseed {

namespace {

bool is_pow2(size_t n) { return n && (n & (n - 1)) == 0; }

void fft_pow2(std::vector<cplx>& a, bool inverse) {
    const size_t n = a.size();
    for (size_t i = 1, j = 0; i < n; ++i) {
        size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    for (size_t len = 2; len <= n; len <<= 1) {
        double ang = 2.0 * M_PI / double(len) * (inverse ? 1.0 : -1.0);
        cplx wl(std::cos(ang), std::sin(ang));
        for (size_t i = 0; i < n; i += len) {
            cplx w(1.0, 0.0);
            for (size_t k = 0; k < len / 2; ++k) {
                cplx x = a[i + k];
                cplx y = a[i + k + len / 2] * w;
                a[i + k] = x + y;
                a[i + k + len / 2] = x - y;
                w *= wl;
            }
        }
    }
}

void dft_slow(std::vector<cplx>& a, bool inverse) {
    const size_t n = a.size();
    std::vector<cplx> out(n, cplx(0.0, 0.0));
    const double sgn = inverse ? 1.0 : -1.0;
    for (size_t k = 0; k < n; ++k) {
        for (size_t j = 0; j < n; ++j) {
            double ang = sgn * 2.0 * M_PI * double(j * k % n) / double(n);
            out[k] += a[j] * cplx(std::cos(ang), std::sin(ang));
        }
    }
    a.swap(out);
}

}  // namespace

void dft(std::vector<cplx>& a, bool inverse) {
    if (a.empty()) return;
    if (is_pow2(a.size()))
        fft_pow2(a, inverse);
    else
        dft_slow(a, inverse);
}

// ---------------------------------------------------------------------------

BandedHermitian::BandedHermitian(int n, int bandwidth)
    : n_(n), bw_(bandwidth), band_(bandwidth + 1, std::vector<cplx>(n, cplx(0.0, 0.0))) {}

cplx& BandedHermitian::at(int row, int col) {
    int b = bw_ - (row - col);
    if (row < col || row - col > bw_ || row >= n_)
        throw std::out_of_range("BandedHermitian::at outside band");
    return band_[b][row];
}

void BandedHermitian::factor() {
    // in-place L L^H, L lower banded with real positive diagonal
    for (int j = 0; j < n_; ++j) {
        cplx d = band_[bw_][j];
        for (int k = std::max(0, j - bw_); k < j; ++k) {
            cplx l = band_[bw_ - (j - k)][j];
            d -= l * std::conj(l);
        }
        double dr = d.real();
        if (!(dr > 0.0)) throw std::runtime_error("BandedHermitian::factor: matrix not positive definite");
        double diag = std::sqrt(dr);
        band_[bw_][j] = cplx(diag, 0.0);
        for (int i = j + 1; i <= std::min(n_ - 1, j + bw_); ++i) {
            cplx s = band_[bw_ - (i - j)][i];
            for (int k = std::max(0, i - bw_); k < j; ++k) {
                if (j - k > bw_) continue;
                cplx lik = band_[bw_ - (i - k)][i];
                cplx ljk = band_[bw_ - (j - k)][j];
                s -= lik * std::conj(ljk);
            }
            band_[bw_ - (i - j)][i] = s / diag;
        }
    }
    factored_ = true;
}

void BandedHermitian::solve(std::vector<cplx>& rhs) const {
    if (!factored_) throw std::runtime_error("BandedHermitian::solve before factor");
    // forward substitution L y = b
    for (int i = 0; i < n_; ++i) {
        cplx s = rhs[i];
        for (int k = std::max(0, i - bw_); k < i; ++k)
            s -= band_[bw_ - (i - k)][i] * rhs[k];
        rhs[i] = s / band_[bw_][i].real();
    }
    // back substitution L^H x = y
    for (int i = n_ - 1; i >= 0; --i) {
        cplx s = rhs[i];
        for (int k = i + 1; k <= std::min(n_ - 1, i + bw_); ++k)
            s -= std::conj(band_[bw_ - (k - i)][k]) * rhs[k];
        rhs[i] = s / band_[bw_][i].real();
    }
}

// ---------------------------------------------------------------------------

PoissonSolver::PoissonSolver(const ChannelGrid& grid) : grid_(grid) {
    mu_.resize(grid.nx);
    for (int k = 0; k < grid.nx; ++k) {
        double s = std::sin(M_PI * k / double(grid.nx));
        mu_[k] = 4.0 * s * s / (grid.hx * grid.hx);
    }
}

void PoissonSolver::solve(PressureField& f) const {
    const int nx = grid_.nx, ny = grid_.ny;
    const double ihy2 = 1.0 / (grid_.hy * grid_.hy);

    // remove the global mean (solvability of the pure-Neumann problem)
    f.remove_mean();

    // transform rows
    std::vector<std::vector<cplx>> rows(ny, std::vector<cplx>(nx));
    std::vector<cplx> tmp(nx);
    for (int j = 0; j < ny; ++j) {
        for (int i = 0; i < nx; ++i) tmp[i] = cplx(f(i, j), 0.0);
        dft(tmp, false);
        rows[j] = tmp;
    }

    // tridiagonal solve per wavenumber: (-mu_k + D2N) p = rhs
    std::vector<cplx> d(ny), rhs(ny), sol(ny);
    std::vector<double> diag(ny), sub(ny);
    for (int k = 0; k < nx; ++k) {
        for (int j = 0; j < ny; ++j) {
            double dd = -mu_[k];
            dd -= ((j > 0) ? ihy2 : 0.0) + ((j < ny - 1) ? ihy2 : 0.0);
            diag[j] = dd;
            sub[j] = ihy2;  // off-diagonals are all 1/hy^2
            rhs[j] = rows[j][k];
        }
        if (k == 0) {
            // singular Neumann block: project the (already tiny) mean out,
            // then replace row 0 by the pin p_0 = 0; the dropped equation is
            // implied by compatibility
            cplx m(0.0, 0.0);
            for (int j = 0; j < ny; ++j) m += rhs[j];
            m /= double(ny);
            for (int j = 0; j < ny; ++j) rhs[j] -= m;
            diag[0] = 1.0;
            rhs[0] = cplx(0.0, 0.0);
        }
        // Thomas
        std::vector<double> cp(ny);
        std::vector<cplx> dp(ny);
        double b0 = diag[0];
        double c0 = (k == 0) ? 0.0 : sub[0];
        cp[0] = c0 / b0;
        dp[0] = rhs[0] / b0;
        for (int j = 1; j < ny; ++j) {
            double a = sub[j];  // lower coupling to j-1
            double m2 = diag[j] - a * cp[j - 1];
            cp[j] = (j < ny - 1 ? sub[j] : 0.0) / m2;
            dp[j] = (rhs[j] - a * dp[j - 1]) / m2;
        }
        sol[ny - 1] = dp[ny - 1];
        for (int j = ny - 2; j >= 0; --j) sol[j] = dp[j] - cp[j] * sol[j + 1];
        for (int j = 0; j < ny; ++j) rows[j][k] = sol[j];
    }

    // inverse transform
    for (int j = 0; j < ny; ++j) {
        tmp = rows[j];
        dft(tmp, true);
        for (int i = 0; i < nx; ++i) f(i, j) = tmp[i].real() / double(nx);
    }
    f.remove_mean();
}

}  // namespace vseed
