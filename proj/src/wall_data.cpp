#include "vseed/wall_data.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace vseed {

namespace {

// splitmix64: deterministic per-key stream, independent of draw order
std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

double unit_double(std::uint64_t key) {  // in [0,1)
    return double(mix64(key) >> 11) * 0x1.0p-53;
}

}  // namespace

double WallData::max_abs() const {
    double m = 0.0;
    for (double x : g_bottom) m = std::max(m, std::abs(x));
    for (double x : g_top) m = std::max(m, std::abs(x));
    return m;
}

double WallData::compatibility_defect(int* worst_slice) const {
    const double hx = lx / nx;
    double worst = 0.0;
    int at = 0;
    for (int k = 0; k <= nt; ++k) {
        double s = 0.0;
        for (int i = 0; i < nx; ++i) s += bottom(i, k) + top(i, k);
        s *= hx;
        if (std::abs(s) > worst) {
            worst = std::abs(s);
            at = k;
        }
    }
    if (worst_slice) *worst_slice = at;
    return worst;
}

WallData project_compatible(const WallData& raw) {
    WallData w = raw;
    for (int k = 0; k <= w.nt; ++k) {
        double s = 0.0, sabs = 0.0;
        for (int i = 0; i < w.nx; ++i) {
            s += w.bottom(i, k) + w.top(i, k);
            sabs += std::abs(w.bottom(i, k)) + std::abs(w.top(i, k));
        }
        // already compatible up to round-off: leave the slice untouched, so
        // the projection is bitwise idempotent
        if (std::abs(s) <= 1e-14 * sabs) continue;
        double m = s / (2.0 * w.nx);
        for (int i = 0; i < w.nx; ++i) {
            w.bottom(i, k) -= m;
            w.top(i, k) -= m;
        }
    }
    return w;
}

WallData make_test_flux(const FluxSpec& spec, int nx, int nt, double dt, double lx) {
    if (nx < 4 || nt < 1 || !(dt > 0.0)) throw std::invalid_argument("make_test_flux: bad grid/time sizes");
    WallData w(nx, nt, dt, lx);
    const double hx = lx / nx;
    const double T = nt * dt;

    switch (spec.kind) {
        case FluxKind::Tone: {
            if (spec.kappa == 0)
                throw std::invalid_argument(
                    "make_test_flux: kappa=0 (spatially constant tone) carries per-wall net "
                    "through-flow and is rejected; use CSV input for through-flow studies");
            for (int k = 0; k <= nt; ++k) {
                double ft = std::sin(spec.omega * k * dt);
                for (int i = 0; i < nx; ++i) {
                    double x = (i + 0.5) * hx;
                    double gx = spec.amplitude * std::sin(2.0 * M_PI * spec.kappa * x / lx);
                    w.bottom(i, k) = gx * ft;
                    w.top(i, k) = -gx * ft;
                }
            }
            break;
        }
        case FluxKind::Multitone: {
            if (spec.modes < 1) throw std::invalid_argument("make_test_flux: modes >= 1 required");
            for (int k = 0; k <= nt; ++k) {
                double t = k * dt;
                for (int i = 0; i < nx; ++i) {
                    double x = (i + 0.5) * hx;
                    double b = 0.0, tp = 0.0;
                    for (int m = 1; m <= spec.modes; ++m) {
                        double a = spec.amplitude / double(m * m);
                        b += a * std::sin(2.0 * M_PI * m * x / lx) * std::sin(m * spec.omega * t);
                        tp += a * std::cos(2.0 * M_PI * m * x / lx) * std::cos(m * spec.omega * t);
                    }
                    w.bottom(i, k) = b;
                    w.top(i, k) = tp;
                }
            }
            break;
        }
        case FluxKind::BandLimitedNoise: {
            // temporal modes up to nt/4 (below Nyquist); amplitude decay keeps
            // the series inside H^s(0,T)
            const double eta = 0.1;
            const double decay = 0.5 * (1.0 + 2.0 * spec.sobolev_s) + eta;
            const int mt_max = std::max(2, nt / 4);
            const int mx_max = std::max(1, spec.modes);
            for (int k = 0; k <= nt; ++k) {
                double t = k * dt;
                for (int i = 0; i < nx; ++i) {
                    double x = (i + 0.5) * hx;
                    double b = 0.0, tp = 0.0;
                    for (int mx = 1; mx <= mx_max; ++mx) {
                        double cb = 0.0, ct = 0.0;
                        for (int mt = 1; mt <= mt_max; ++mt) {
                            std::uint64_t key = spec.seed * 0x100000001b3ULL + std::uint64_t(mx) * 7919ULL + std::uint64_t(mt);
                            double amp = std::pow(double(mt), -decay) * (0.5 + 0.5 * unit_double(key));
                            double ph_b = 2.0 * M_PI * unit_double(key ^ 0xb0155e5ULL);
                            double ph_t = 2.0 * M_PI * unit_double(key ^ 0x70b5e55ULL);
                            double wt = 2.0 * M_PI * mt / T;
                            cb += amp * std::cos(wt * t + ph_b);
                            ct += amp * std::cos(wt * t + ph_t);
                        }
                        double sx = std::sin(2.0 * M_PI * mx * x / lx + 2.0 * M_PI * unit_double(spec.seed + 31 * mx));
                        double cx = std::sin(2.0 * M_PI * mx * x / lx + 2.0 * M_PI * unit_double(spec.seed + 57 * mx));
                        b += spec.amplitude / double(mx) * sx * cb;
                        tp += spec.amplitude / double(mx) * cx * ct;
                    }
                    w.bottom(i, k) = b;
                    w.top(i, k) = tp;
                }
            }
            w = project_compatible(w);
            break;
        }
    }
    return w;
}

void write_wall_csv(const WallData& w, const std::string& path) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("write_wall_csv: cannot open " + path);
    f << "wall,t_index,x_index,value\n";
    char buf[64];
    for (int k = 0; k <= w.nt; ++k)
        for (int i = 0; i < w.nx; ++i) {
            std::snprintf(buf, sizeof buf, "%.17g", w.bottom(i, k));
            f << "bottom," << k << ',' << i << ',' << buf << '\n';
        }
    for (int k = 0; k <= w.nt; ++k)
        for (int i = 0; i < w.nx; ++i) {
            std::snprintf(buf, sizeof buf, "%.17g", w.top(i, k));
            f << "top," << k << ',' << i << ',' << buf << '\n';
        }
}

WallData read_wall_csv(const std::string& path, int nx, int nt, double dt, double lx) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("read_wall_csv: cannot open " + path);
    std::string line;
    if (!std::getline(f, line) || line.rfind("wall,t_index,x_index,value", 0) != 0)
        throw std::runtime_error("read_wall_csv: missing header row in " + path);
    WallData w(nx, nt, dt, lx);
    size_t lineno = 1;
    while (std::getline(f, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::istringstream ss(line);
        std::string wall, tok;
        if (!std::getline(ss, wall, ',')) throw std::runtime_error("read_wall_csv: bad row " + std::to_string(lineno));
        std::getline(ss, tok, ',');
        int k = std::stoi(tok);
        std::getline(ss, tok, ',');
        int i = std::stoi(tok);
        std::getline(ss, tok, ',');
        double val = std::stod(tok);
        if (k < 0 || k > nt || i < 0 || i >= nx)
            throw std::runtime_error("read_wall_csv: index out of range at row " + std::to_string(lineno));
        if (wall == "bottom")
            w.bottom(i, k) = val;
        else if (wall == "top")
            w.top(i, k) = val;
        else
            throw std::runtime_error("read_wall_csv: unknown wall '" + wall + "'");
    }
    return w;
}

}  // namespace vseed
