// Staggered (MAC) grid on the periodic channel [0,lx) x [0,1].
//
// Layout:
//   p(i,j)   cell centers,      i=0..nx-1, j=0..ny-1, at ((i+1/2)hx, (j+1/2)hy)
//   u(i,j)   vertical faces,    i=0..nx-1, j=-1..ny,  at (i hx, (j+1/2)hy)
//            j=-1 and j=ny are ghost rows below/above the walls
//   v(i,j)   horizontal faces,  i=0..nx-1, j=0..ny,   at ((i+1/2)hx, j hy)
//            j=0 and j=ny lie exactly on the walls and carry the imposed
//            normal velocity
//   d12(i,j) nodes,             i=0..nx-1, j=0..ny,   at (i hx, j hy)
//
// All index arithmetic wraps periodically in x.

#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace vseed {

struct ChannelGrid {
    int nx = 0;
    int ny = 0;
    double lx = 1.0;
    double hx = 0.0;
    double hy = 0.0;

    ChannelGrid() = default;
    ChannelGrid(int nx_, int ny_, double lx_) : nx(nx_), ny(ny_), lx(lx_) {
        if (nx < 4 || ny < 4) throw std::invalid_argument("ChannelGrid: nx, ny must be >= 4");
        if (!(lx > 0.0)) throw std::invalid_argument("ChannelGrid: lx must be positive");
        hx = lx / nx;
        hy = 1.0 / ny;
    }

    bool same_as(const ChannelGrid& o) const {
        return nx == o.nx && ny == o.ny && lx == o.lx;
    }

    // periodic wrap of an x index (handles negatives)
    int wrap(int i) const {
        int r = i % nx;
        return r < 0 ? r + nx : r;
    }

    double xu(int i) const { return i * hx; }          // u face / node abscissa
    double xc(int i) const { return (i + 0.5) * hx; }  // cell center / v abscissa
    double yu(int j) const { return (j + 0.5) * hy; }  // u row height (cell row j)
    double yv(int j) const { return j * hy; }          // v row / node height
};

/// Cell-centered scalar (pressure, divergence, stream data...). Zero-mean gauge
/// is the canonical representative for pressures.
struct PressureField {
    ChannelGrid grid;
    std::vector<double> p;

    PressureField() = default;
    explicit PressureField(const ChannelGrid& g) : grid(g), p(size_t(g.nx) * g.ny, 0.0) {}

    double& operator()(int i, int j) { return p[size_t(j) * grid.nx + grid.wrap(i)]; }
    double operator()(int i, int j) const { return p[size_t(j) * grid.nx + grid.wrap(i)]; }

    double mean() const {
        double s = 0.0;
        for (double x : p) s += x;
        return s / double(p.size());
    }
    void remove_mean() {
        double m = mean();
        for (double& x : p) x -= m;
    }
};

/// Staggered velocity with one ghost row for u on each wall. v wall rows store
/// the imposed normal velocity (not unknowns).
struct VelocityField {
    ChannelGrid grid;
    std::vector<double> u_;  // nx * (ny+2), storage row = j+1 for cell row j in [-1, ny]
    std::vector<double> v_;  // nx * (ny+1)

    VelocityField() = default;
    explicit VelocityField(const ChannelGrid& g)
        : grid(g), u_(size_t(g.nx) * (g.ny + 2), 0.0), v_(size_t(g.nx) * (g.ny + 1), 0.0) {}

    double& u(int i, int j) { return u_[size_t(j + 1) * grid.nx + grid.wrap(i)]; }
    double u(int i, int j) const { return u_[size_t(j + 1) * grid.nx + grid.wrap(i)]; }
    double& v(int i, int j) { return v_[size_t(j) * grid.nx + grid.wrap(i)]; }
    double v(int i, int j) const { return v_[size_t(j) * grid.nx + grid.wrap(i)]; }

    void fill(double a) {
        for (double& x : u_) x = a;
        for (double& x : v_) x = a;
    }

    // algebra over every stored entry (ghosts and wall rows included)
    void axpy(double a, const VelocityField& o) {
        for (size_t k = 0; k < u_.size(); ++k) u_[k] += a * o.u_[k];
        for (size_t k = 0; k < v_.size(); ++k) v_[k] += a * o.v_[k];
    }
    void scale(double a) {
        for (double& x : u_) x *= a;
        for (double& x : v_) x *= a;
    }

    /// Interior degrees of freedom only: u rows 0..ny-1, v rows 1..ny-1.
    /// Ghosts and wall rows are closures/data, not unknowns.
    template <class F>
    void for_each_dof(F&& f) const {
        for (int j = 0; j < grid.ny; ++j)
            for (int i = 0; i < grid.nx; ++i) f('u', i, j);
        for (int j = 1; j < grid.ny; ++j)
            for (int i = 0; i < grid.nx; ++i) f('v', i, j);
    }
};

/// Symmetric deformation tensor: diagonal entries at cell centers, the shear
/// component at nodes.
struct DeformationField {
    ChannelGrid grid;
    std::vector<double> d11, d22;  // nx * ny
    std::vector<double> d12;       // nx * (ny+1), node rows 0..ny

    DeformationField() = default;
    explicit DeformationField(const ChannelGrid& g)
        : grid(g),
          d11(size_t(g.nx) * g.ny, 0.0),
          d22(size_t(g.nx) * g.ny, 0.0),
          d12(size_t(g.nx) * (g.ny + 1), 0.0) {}

    double& D11(int i, int j) { return d11[size_t(j) * grid.nx + grid.wrap(i)]; }
    double D11(int i, int j) const { return d11[size_t(j) * grid.nx + grid.wrap(i)]; }
    double& D22(int i, int j) { return d22[size_t(j) * grid.nx + grid.wrap(i)]; }
    double D22(int i, int j) const { return d22[size_t(j) * grid.nx + grid.wrap(i)]; }
    double& D12(int i, int j) { return d12[size_t(j) * grid.nx + grid.wrap(i)]; }
    double D12(int i, int j) const { return d12[size_t(j) * grid.nx + grid.wrap(i)]; }
};

}  // namespace vseed
