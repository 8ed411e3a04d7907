#include "vseed/manufactured.hpp"

#include <cmath>

namespace vseed {

double manufactured_u(double x, double y, double t) {
    return 0.5 * std::exp(-t) * std::sin(2.0 * M_PI * y) * std::cos(2.0 * M_PI * x);
}

double manufactured_v(double x, double y, double t) {
    double s = std::sin(M_PI * y);
    return std::exp(-t) * std::sin(2.0 * M_PI * x) * s * s;
}

VelocityField manufactured_velocity(const ChannelGrid& grid, double t) {
    VelocityField f(grid);
    for (int j = -1; j <= grid.ny; ++j)
        for (int i = 0; i < grid.nx; ++i) f.u(i, j) = manufactured_u(grid.xu(i), grid.yu(j), t);
    for (int j = 0; j <= grid.ny; ++j)
        for (int i = 0; i < grid.nx; ++i) f.v(i, j) = manufactured_v(grid.xc(i), grid.yv(j), t);
    return f;
}

Forcing manufactured_forcing(double nu) {
    return [nu](double t, VelocityField& f) {
        const ChannelGrid& g = f.grid;
        double A = std::exp(-t);
        auto fu = [&](double x, double y) {
            double u = manufactured_u(x, y, t), v = manufactured_v(x, y, t);
            double ux = -M_PI * A * std::sin(2.0 * M_PI * y) * std::sin(2.0 * M_PI * x);
            double uy = M_PI * A * std::cos(2.0 * M_PI * y) * std::cos(2.0 * M_PI * x);
            return -u + 4.0 * M_PI * M_PI * nu * u + u * ux + v * uy;
        };
        auto fv = [&](double x, double y) {
            double u = manufactured_u(x, y, t), v = manufactured_v(x, y, t);
            double s = std::sin(M_PI * y);
            double vx = 2.0 * M_PI * A * std::cos(2.0 * M_PI * x) * s * s;
            double vy = M_PI * A * std::sin(2.0 * M_PI * x) * std::sin(2.0 * M_PI * y);
            double lap_extra = M_PI * M_PI * A * std::sin(2.0 * M_PI * x) * std::cos(2.0 * M_PI * y);
            return -v + 2.0 * M_PI * M_PI * nu * v - nu * lap_extra + u * vx + v * vy;
        };
        for (int j = 0; j < g.ny; ++j)
            for (int i = 0; i < g.nx; ++i) f.u(i, j) = fu(g.xu(i), g.yu(j));
        for (int j = 1; j < g.ny; ++j)
            for (int i = 0; i < g.nx; ++i) f.v(i, j) = fv(g.xc(i), g.yv(j));
    };
}

}  // namespace vseed
