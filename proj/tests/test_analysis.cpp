#include <cmath>
#include <complex>

#include "doctest.h"
#include "test_utils.hpp"
#include "vseed/analysis.hpp"
#include "vseed/fractional.hpp"

using namespace vseed;
using namespace vseed::testing;

TEST_SUITE_BEGIN("analysis");

namespace {

// independent slow transform: evaluate the windowed spectrum by direct
// summation and integrate the same quadrature as the production definition
double slow_fractional_norm(const std::vector<double>& f, double dt, double alpha) {
    size_t n = f.size();
    size_t M = 1;
    while (M < std::max<size_t>(4 * n, 32)) M <<= 1;
    double dxi = 2.0 * M_PI / (double(M) * dt);
    double total = 0.0;
    for (size_t j = 0; j < M; ++j) {
        double js = (j <= M / 2) ? double(j) : double(j) - double(M);
        double xi = 2.0 * M_PI * js / (double(M) * dt);
        std::complex<double> acc(0.0, 0.0);
        for (size_t k = 0; k < n; ++k)
            acc += f[k] * std::exp(std::complex<double>(0.0, -xi * double(k) * dt));
        double mag = std::norm(acc) * dt * dt / (2.0 * M_PI);
        double weight = 1.0 + ((alpha > 0.0 && js != 0.0) ? std::pow(std::abs(xi), 2.0 * alpha) : 0.0);
        total += weight * mag * dxi;
    }
    return std::sqrt(total);
}

}  // namespace

TEST_CASE("fractional norm: zero series, domain checks") {
    TimeSeries s;
    s.dt = 0.1;
    s.values.assign(16, 0.0);
    CHECK(fractional_norm(s, 0.4) == 0.0);
    CHECK_THROWS(fractional_norm(s, 1.0));
    CHECK_THROWS(fractional_norm(s, -0.1));
    TimeSeries tiny;
    tiny.dt = 0.1;
    tiny.values.assign(5, 1.0);
    CHECK_THROWS(fractional_norm(tiny, 0.3));
}

TEST_CASE("alpha = 0 reproduces the rectangle-rule time norm") {
    TimeSeries s;
    s.dt = 0.01;
    std::uint64_t st = 5;
    for (int k = 0; k < 200; ++k) s.values.push_back(urand(st));
    double l2 = 0.0;
    for (double v : s.values) l2 += v * v * s.dt;
    CHECK(fractional_norm(s, 0.0) == doctest::Approx(std::sqrt(l2)).epsilon(1e-10));
}

TEST_CASE("windowed tone matches the slow-transform reference") {
    TimeSeries s;
    s.dt = 1.0 / 64.0;
    for (int k = 0; k <= 64; ++k) s.values.push_back(std::sin(4.0 * M_PI * k * s.dt));
    for (double alpha : {0.0, 0.3, 0.45, 0.8}) {
        double mine = fractional_norm(s, alpha);
        double ref = slow_fractional_norm(s.values, s.dt, alpha);
        CHECK(mine == doctest::Approx(ref).epsilon(1e-8));
    }
}

TEST_CASE("seminorm is monotone in alpha once frequencies sit above one") {
    // short horizon: the frequency spacing 2 pi / window already exceeds 1
    TimeSeries s;
    s.dt = 1.0 / 64.0;
    std::uint64_t st = 77;
    for (int k = 0; k <= 16; ++k) s.values.push_back(urand(st));
    CHECK(2.0 * M_PI / (128.0 * s.dt) >= 1.0);
    CHECK(fractional_seminorm(s, 0.25) <= fractional_seminorm(s, 0.45));
}

TEST_CASE("field trajectory norm agrees with the scalar norm on rank-one data") {
    // f(t,x) = a(t) F(x): the trajectory norm equals ||F||_L2 * ||a||_{H^alpha}
    ChannelGrid g(12, 12, 1.0);
    VelocityField F = random_smooth_field(g, 2, 0.1);
    double fl2 = std::sqrt(l2_sq(F));
    TimeSeries a;
    a.dt = 0.05;
    for (int k = 0; k <= 32; ++k) a.values.push_back(std::cos(3.0 * k * a.dt));
    std::vector<VelocityField> snaps;
    for (double v : a.values) {
        VelocityField s = F;
        s.scale(v);
        snaps.push_back(std::move(s));
    }
    for (double alpha : {0.0, 0.4}) {
        double lhs = field_fractional_norm(snaps, a.dt, alpha);
        double rhs = fl2 * fractional_norm(a, alpha);
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-9));
    }
}

TEST_CASE("fractional audit flags a vanishing denominator") {
    ChannelGrid g(8, 8, 1.0);
    std::vector<VelocityField> Z(10, VelocityField(g)), G(10, VelocityField(g));
    FractionalAudit a = estimate_audit_fractional(Z, G, 0.1, 0.1);
    CHECK_FALSE(a.defined);
}

TEST_CASE("fractional audit ratio is stable under refinement and across widths") {
    ChannelGrid g(24, 24, 1.0);
    EvolutionOptions opt;
    opt.keep_fields = true;
    auto ratio_for = [&](int nt, double dt, double delta) {
        FluxSpec spec;
        spec.omega = 4.0 * M_PI;
        WallData w = make_test_flux(spec, g.nx, nt, dt, g.lx);
        LinearEvolution ev = solve_linear_evolution(g, w, delta, 1.0, 1.0, dt, nt, opt);
        FractionalAudit a = estimate_audit_fractional(ev.Zhom, ev.G, dt, 0.1);
        REQUIRE(a.defined);
        return a.ratio;
    };
    double r1 = ratio_for(32, 0.02, 0.25);
    double r2 = ratio_for(64, 0.01, 0.25);
    CHECK(std::abs(r2 - r1) / r1 <= 0.2);

    std::vector<double> deltas{0.4, 0.2, 0.1}, ratios;
    for (double d : deltas) ratios.push_back(ratio_for(32, 0.02, d));
    // no growth trend as the width shrinks
    SlopeFit f = fit_loglog(deltas, ratios);
    CHECK(std::abs(f.slope) <= 0.1);
}

TEST_CASE("error functionals: identical trajectories and shape mismatches") {
    NseConfig cfg;
    cfg.grid = ChannelGrid(16, 16, 1.0);
    cfg.dt = 1e-3;
    cfg.nt = 5;
    cfg.save_stride = 1;
    VelocityField u0 = make_divfree(random_smooth_field(cfg.grid, 3, 0.0), 0.0);
    Trajectory a = solve_noslip(cfg, u0);
    ErrorRecord e = error_functionals(a, a, 0.5);
    CHECK(e.sup_l2_sq == 0.0);
    CHECK(e.deform_l2_sq == 0.0);
    CHECK(e.total == 0.0);
    CHECK(e.trace_l2 == 0.0);

    NseConfig other = cfg;
    other.nt = 4;
    Trajectory b = solve_noslip(other, u0);
    CHECK_THROWS(error_functionals(a, b, 0.5));
}

TEST_CASE("log-log fit recovers exact power laws and flags noise") {
    std::vector<double> x{0.4, 0.2, 0.1, 0.05}, y;
    for (double v : x) y.push_back(3.0 * std::pow(v, 1.7));
    SlopeFit f = fit_loglog(x, y);
    CHECK(f.slope == doctest::Approx(1.7).epsilon(1e-12));
    CHECK(f.r2 == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(f.conclusive());

    std::vector<double> noisy{1.0, 20.0, 0.5, 8.0};
    SlopeFit nf = fit_loglog(x, noisy);
    CHECK_FALSE(nf.conclusive());
}

TEST_CASE("gronwall curves: zero inputs leave only the bare exponent") {
    NseConfig cfg;
    cfg.grid = ChannelGrid(16, 16, 1.0);
    cfg.dt = 1e-3;
    cfg.nt = 8;
    cfg.delta = 0.2;
    const double C = 64.0;
    WallData w(cfg.grid.nx, cfg.nt, cfg.dt, cfg.grid.lx);
    LinearEvolution z = solve_linear_evolution(cfg.grid, w, cfg.delta, 1.0, 1.0, cfg.dt, cfg.nt);
    VelocityField u0(cfg.grid);
    Trajectory split = solve_split(cfg, u0, w, z);
    GronwallCurves gc = gronwall_bound(split, z, nullptr, C, 0.25);
    for (int n = 0; n <= cfg.nt; ++n)
        CHECK(gc.bound_U[n] ==
              doctest::Approx(0.25 * std::exp(C * n * cfg.dt)).epsilon(1e-12));
    CHECK(gc.violations_U == 0);
    CHECK(gc.int_psi == 0.0);
}

TEST_SUITE_END();
