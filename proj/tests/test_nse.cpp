#include <cmath>

#include "doctest.h"
#include "test_utils.hpp"
#include "vseed/advection.hpp"
#include "vseed/analysis.hpp"
#include "vseed/manufactured.hpp"
#include "vseed/nse.hpp"
#include "vseed/ops.hpp"

using namespace vseed;
using namespace vseed::testing;

TEST_SUITE_BEGIN("nse");

namespace {

double mms_error_at(const VelocityField& u, double t) {
    VelocityField d = u;
    d.axpy(-1.0, manufactured_velocity(u.grid, t));
    set_wall_flux_zero(d);
    return std::sqrt(l2_sq(d));
}

}  // namespace

TEST_CASE("no forcing, zero data: the flow stays identically zero") {
    NseConfig cfg;
    cfg.grid = ChannelGrid(16, 16, 1.0);
    cfg.dt = 1e-3;
    cfg.nt = 10;
    VelocityField u0(cfg.grid);
    Trajectory tr = solve_noslip(cfg, u0);
    for (const auto& d : tr.diag) {
        CHECK(d.energy == 0.0);
        CHECK(d.div_max == 0.0);
    }
}

TEST_CASE("manufactured solution: spatial order two") {
    const double T = 0.1, nu = 1.0;
    std::vector<double> hs, errs;
    for (int n : {16, 24, 32, 48}) {
        NseConfig cfg;
        cfg.grid = ChannelGrid(n, n, 1.0);
        cfg.nu = nu;
        double h = 1.0 / n;
        cfg.nt = int(std::ceil(T / (0.25 * h * h)));
        cfg.dt = T / cfg.nt;
        cfg.forcing = manufactured_forcing(nu);
        VelocityField u0 = manufactured_velocity(cfg.grid, 0.0);
        VelocityField ulast(cfg.grid);
        auto obs = [&](int nstep, const VelocityField& u, const PressureField&) {
            if (nstep == cfg.nt) ulast = u;
        };
        solve_noslip(cfg, u0, obs);
        hs.push_back(h);
        errs.push_back(mms_error_at(ulast, T));
    }
    SlopeFit fit = fit_loglog(hs, errs);
    CHECK(fit.slope == doctest::Approx(2.0).epsilon(0.15));
}

TEST_CASE("time-stepping error decays at least linearly in dt") {
    const double T = 0.1, nu = 1.0;
    NseConfig cfg;
    cfg.grid = ChannelGrid(32, 32, 1.0);
    cfg.nu = nu;
    cfg.forcing = manufactured_forcing(nu);
    VelocityField u0 = manufactured_velocity(cfg.grid, 0.0);

    auto run_final = [&](double dt) {
        NseConfig c = cfg;
        c.nt = int(std::round(T / dt));
        c.dt = T / c.nt;
        VelocityField ulast(c.grid);
        auto obs = [&](int n, const VelocityField& u, const PressureField&) {
            if (n == c.nt) ulast = u;
        };
        solve_noslip(c, u0, obs);
        return ulast;
    };
    VelocityField ref = run_final(2.5e-4);
    std::vector<double> dts{4e-3, 2e-3, 1e-3}, errs;
    for (double dt : dts) {
        VelocityField d = run_final(dt);
        d.axpy(-1.0, ref);
        set_wall_flux_zero(d);
        errs.push_back(std::sqrt(l2_sq(d)));
    }
    SlopeFit fit = fit_loglog(dts, errs);
    CHECK(fit.slope >= 0.9);
}

TEST_CASE("free decay: monotone energy with an exact per-step budget") {
    NseConfig cfg;
    cfg.grid = ChannelGrid(24, 24, 1.0);
    cfg.dt = 2e-3;
    cfg.nt = 25;
    VelocityField u0 = make_divfree(random_smooth_field(cfg.grid, 4, 0.0), 0.0);
    Trajectory tr = solve_noslip(cfg, u0);
    double e0 = tr.diag[0].energy;
    for (int n = 1; n <= cfg.nt; ++n) {
        CHECK(tr.diag[n].energy <= tr.diag[n - 1].energy);
        CHECK(std::abs(tr.diag[n].imbalance) <= 1e-12 * std::max(1.0, e0));
    }
}

TEST_CASE("slip energy budget splits into deformation and boundary friction") {
    NseConfig cfg;
    cfg.grid = ChannelGrid(20, 20, 1.0);
    cfg.dt = 1e-3;
    cfg.nt = 15;
    cfg.delta = 0.15;
    WallData w(cfg.grid.nx, cfg.nt, cfg.dt, cfg.grid.lx);  // zero flux, slip walls
    VelocityField u0 = make_divfree(random_smooth_field(cfg.grid, 12, cfg.delta), cfg.delta);
    Trajectory tr = solve_monolithic(cfg, u0, w);
    double e0 = tr.diag[0].energy;
    for (int n = 1; n <= cfg.nt; ++n) {
        CHECK(tr.diag[n].energy <= tr.diag[n - 1].energy);
        CHECK(std::abs(tr.diag[n].imbalance) <= 1e-12 * std::max(1.0, e0));
        CHECK(tr.diag[n].visc_slip > 0.0);
    }
}

TEST_CASE("vanishing slip length reproduces the no-slip flow") {
    NseConfig cfg;
    cfg.grid = ChannelGrid(32, 32, 1.0);
    cfg.dt = 1e-3;
    cfg.nt = 50;
    cfg.nu = 1.0;
    cfg.save_stride = 1;
    cfg.forcing = [](double, VelocityField& f) {
        const ChannelGrid& g = f.grid;
        for (int j = 0; j < g.ny; ++j)
            for (int i = 0; i < g.nx; ++i)
                f.u(i, j) = std::sin(2.0 * M_PI * g.yu(j)) * std::cos(2.0 * M_PI * g.xu(i));
    };
    VelocityField u0(cfg.grid);
    Trajectory ns = solve_noslip(cfg, u0);

    cfg.delta = 1e-12;
    WallData w(cfg.grid.nx, cfg.nt, cfg.dt, cfg.grid.lx);  // g = 0
    Trajectory mono = solve_monolithic(cfg, u0, w);
    ErrorRecord e_mono = error_functionals(mono, ns, 1.0);
    CHECK(e_mono.sup_l2 <= 1e-6);

    LinearEvolution z = solve_linear_evolution(cfg.grid, w, cfg.delta, 1.0, cfg.nu, cfg.dt, cfg.nt);
    for (double v : z.z_l2) CHECK(v <= 1e-13);
    Trajectory split = solve_split(cfg, u0, w, z);
    ErrorRecord e_split = error_functionals(split, ns, 1.0);
    CHECK(e_split.sup_l2 <= 1e-6);
}

TEST_CASE("monolithic and split integrations agree") {
    NseConfig cfg;
    cfg.grid = ChannelGrid(32, 32, 1.0);
    cfg.dt = 1e-3;
    cfg.nt = 80;
    cfg.delta = 0.2;
    cfg.alpha = 1.0;
    cfg.save_stride = 1;
    FluxSpec spec;
    spec.amplitude = 0.5;
    WallData w = make_test_flux(spec, cfg.grid.nx, cfg.nt, cfg.dt, cfg.grid.lx);

    LinearEvolution z = solve_linear_evolution(cfg.grid, w, cfg.delta, cfg.alpha, cfg.nu,
                                               cfg.dt, cfg.nt);
    VelocityField u0 = z.z[0];  // start both at the lifted state
    Trajectory mono = solve_monolithic(cfg, u0, w);
    Trajectory split = solve_split(cfg, u0, w, z);
    ErrorRecord e = error_functionals(mono, split, cfg.delta);
    CHECK(e.sup_l2 <= 1e-5);
}

TEST_CASE("global mass balance with imposed flux") {
    NseConfig cfg;
    cfg.grid = ChannelGrid(24, 24, 1.0);
    cfg.dt = 1e-3;
    cfg.nt = 20;
    cfg.delta = 0.3;
    FluxSpec spec;
    WallData w = make_test_flux(spec, cfg.grid.nx, cfg.nt, cfg.dt, cfg.grid.lx);
    VelocityField u0(cfg.grid);
    auto obs = [&](int, const VelocityField& u, const PressureField&) {
        CHECK(std::abs(divergence_sum(u)) <= 1e-12);
    };
    Trajectory tr = solve_monolithic(cfg, u0, w, obs);
    for (const auto& d : tr.diag) CHECK(d.div_max <= 1e-10);
}

TEST_CASE("advection cancellations hold to round-off") {
    ChannelGrid g(24, 24, 1.0);
    for (int rep = 0; rep < 5; ++rep) {
        VelocityField U = make_divfree(random_smooth_field(g, 100 + rep, 0.2), 0.2);
        VelocityField z = make_divfree(random_smooth_field(g, 200 + rep, 0.2), 0.2);
        AdvectionAudit a = nonlinear_term_audit(U, z);
        double nU = std::sqrt(l2_sq(U)), gU = std::sqrt(grad_sq(U));
        double nz = std::sqrt(l2_sq(z)), gz = std::sqrt(grad_sq(z));
        CHECK(std::abs(a.cancel_self) <= 1e-12 * std::max(1.0, nU * nU * gU));
        CHECK(std::abs(a.cancel_pair) <= 1e-12 * std::max(1.0, nU * (nU * gz + nz * gU)));
    }
}

TEST_CASE("advective products reduce structurally when z vanishes") {
    ChannelGrid g(16, 16, 1.0);
    VelocityField U = make_divfree(random_smooth_field(g, 3, 0.1), 0.1);
    VelocityField v = make_divfree(random_smooth_field(g, 8, 0.1), 0.1);
    VelocityField zero(g);
    AdvectionAudit a = nonlinear_term_audit(U, zero, v, U);
    CHECK(a.t_Uw > 0.0);
    CHECK(a.t_wv > 0.0);
    CHECK(a.t_Uz == 0.0);
    CHECK(a.t_zU == 0.0);
    CHECK(a.t_zz == 0.0);
}

TEST_CASE("perturbation energy stays under its integrated bound") {
    NseConfig cfg;
    cfg.grid = ChannelGrid(32, 32, 1.0);
    cfg.dt = 2e-3;
    cfg.nt = 50;
    cfg.delta = 0.2;
    FluxSpec spec;
    spec.amplitude = 0.8;
    WallData w = make_test_flux(spec, cfg.grid.nx, cfg.nt, cfg.dt, cfg.grid.lx);
    LinearEvolution z = solve_linear_evolution(cfg.grid, w, cfg.delta, cfg.alpha, cfg.nu,
                                               cfg.dt, cfg.nt);
    VelocityField u0 = z.z[0];
    Trajectory split = solve_split(cfg, u0, w, z);
    GronwallCurves gc = gronwall_bound(split, z, nullptr, 64.0, 0.0);
    CHECK(gc.violations_U == 0);
}

TEST_CASE("identical runs are bit-identical") {
    NseConfig cfg;
    cfg.grid = ChannelGrid(16, 16, 1.0);
    cfg.dt = 1e-3;
    cfg.nt = 12;
    cfg.delta = 0.25;
    FluxSpec spec;
    spec.kind = FluxKind::BandLimitedNoise;
    spec.seed = 9;
    WallData w = make_test_flux(spec, cfg.grid.nx, cfg.nt, cfg.dt, cfg.grid.lx);
    VelocityField u0(cfg.grid);
    Trajectory a = solve_monolithic(cfg, u0, w);
    Trajectory b = solve_monolithic(cfg, u0, w);
    for (int n = 0; n <= cfg.nt; ++n) {
        CHECK(a.diag[n].energy == b.diag[n].energy);
        CHECK(a.diag[n].deform_sq == b.diag[n].deform_sq);
    }
}

TEST_CASE("advective step limit aborts oversized time steps") {
    NseConfig cfg;
    cfg.grid = ChannelGrid(16, 16, 1.0);
    cfg.dt = 5e-2;  // limit is 0.5 h / |u| ~ 0.01 for |u| ~ 3
    cfg.nt = 5;
    VelocityField u0(cfg.grid);
    fill_analytic(u0, [](double, double y) { return 3.0 * std::sin(2.0 * M_PI * y); },
                  [](double, double) { return 0.0; });
    CHECK_THROWS_AS(solve_noslip(cfg, u0), CflError);
}

TEST_SUITE_END();
