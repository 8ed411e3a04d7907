#include "vseed/nse.hpp"

#include <algorithm>
#include <cmath>

#include "vseed/advection.hpp"
#include "vseed/bc.hpp"
#include "vseed/momentum.hpp"
#include "vseed/ops.hpp"

namespace vseed {

void NseConfig::validate() const {
    if (!(dt > 0.0)) throw std::invalid_argument("NseConfig: dt must be positive");
    if (nt < 1) throw std::invalid_argument("NseConfig: nt must be >= 1");
    if (!(nu > 0.0)) throw std::invalid_argument("NseConfig: nu must be positive");
}

double Trajectory::sup_l2_sq() const {
    double s = 0.0;
    for (const auto& d : diag) s = std::max(s, d.l2 * d.l2);
    return s;
}

namespace {

double max_speed(const VelocityField& f) {
    const ChannelGrid& g = f.grid;
    double m = 0.0;
    for (int j = 0; j < g.ny; ++j)
        for (int i = 0; i < g.nx; ++i) m = std::max(m, std::abs(f.u(i, j)));
    for (int j = 0; j <= g.ny; ++j)
        for (int i = 0; i < g.nx; ++i) m = std::max(m, std::abs(f.v(i, j)));
    return m;
}

struct Stepper {
    const NseConfig& cfg;
    NseMode mode;
    const WallData* wall;            // null for no-slip
    const LinearEvolution* ztraj;    // split mode only
    double delta;                    // closure width (0 for no-slip)

    MomentumWaveSolver ainv;
    PoissonSolver poisson;
    MomentumOp aop;

    Stepper(const NseConfig& c, NseMode m, const WallData* w, const LinearEvolution* z)
        : cfg(c), mode(m), wall(w), ztraj(z),
          delta(m == NseMode::NoSlip ? 0.0 : c.delta),
          ainv(c.grid, c.nu, 1.0 / c.dt, m == NseMode::NoSlip ? 0.0 : c.delta),
          poisson(c.grid),
          aop{c.grid, c.nu, 1.0 / c.dt, m == NseMode::NoSlip ? 0.0 : c.delta} {}

    void impose_flux(VelocityField& f, int t_index) const {
        if (mode == NseMode::Monolithic)
            set_wall_flux(f, *wall, t_index, cfg.delta, cfg.alpha);
        else
            set_wall_flux_zero(f);
        close_ghosts(f, delta);
    }

    // one IMEX step of the evolved field (u itself, or the perturbation U in
    // split mode); returns the projection increment for bookkeeping
    void step(int n, VelocityField& u, PressureField& p, StepDiag& d) const {
        const ChannelGrid& g = cfg.grid;
        const double dt = cfg.dt;
        const double t_old = n * dt;

        double sp = max_speed(u);
        if (mode == NseMode::Split && ztraj) sp += max_speed(ztraj->z[n]);
        sp = std::max(1.0, sp);
        double cfl_limit = 0.5 * std::min(g.hx, g.hy) / sp;
        if (dt > cfl_limit)
            throw CflError("time step exceeds the advective limit at step " + std::to_string(n));

        // explicit advection (combined field in split mode)
        VelocityField adv(g);
        if (mode == NseMode::Split) {
            VelocityField c = u;
            c.axpy(1.0, ztraj->z[n]);
            adv = advect(c, c);
        } else {
            adv = advect(u, u);
        }

        VelocityField f(g);
        if (cfg.forcing) cfg.forcing(t_old, f);
        d.f_l2_sq = l2_sq(f);

        VelocityField gp = gradient(p);

        VelocityField rhs = u;
        rhs.scale(1.0 / dt);
        rhs.axpy(-1.0, adv);
        rhs.axpy(-1.0, gp);
        rhs.axpy(1.0, f);
        set_wall_flux_zero(rhs);

        // inhomogeneous wall data at the new time level enters as a
        // right-hand side correction
        VelocityField wdata(g);
        bool has_data = (mode == NseMode::Monolithic);
        if (has_data) {
            impose_flux(wdata, n + 1);
            VelocityField aw;
            aop.apply_closed(wdata, aw);
            rhs.axpy(-1.0, aw);
        }

        VelocityField ustar;
        ainv.solve(rhs, ustar);
        if (has_data) {
            // add the data rows back; ghosts recombine linearly
            for (int i = 0; i < g.nx; ++i) {
                ustar.v(i, 0) = wdata.v(i, 0);
                ustar.v(i, g.ny) = wdata.v(i, g.ny);
            }
            close_ghosts(ustar, delta);
        }

        // budget pieces evaluated on the predictor
        d.adv_work = inner(adv, ustar);
        d.press_work = inner(gp, ustar);
        d.force_work = inner(f, ustar);
        d.visc_deform = cfg.nu * deform_sq(ustar);
        d.visc_slip = slip_dissipation(ustar, delta, cfg.nu);
        {
            VelocityField du = ustar;
            du.axpy(-1.0, u);
            d.step_loss = 0.5 * l2_sq(du);
        }
        double e_old = 0.5 * l2_sq(u);

        // projection
        PressureField rhsp = divergence(ustar);
        for (double& v : rhsp.p) v /= dt;
        poisson.solve(rhsp);  // now the increment phi
        VelocityField gphi = gradient(rhsp);
        VelocityField unew = ustar;
        unew.axpy(-dt, gphi);
        close_ghosts(unew, delta);
        for (size_t k = 0; k < p.p.size(); ++k) p.p[k] += rhsp.p[k];
        p.remove_mean();

        {
            VelocityField du = unew;
            du.axpy(-1.0, ustar);
            d.proj_loss = 0.5 * l2_sq(du);
        }
        double e_new = 0.5 * l2_sq(unew);
        d.imbalance = (e_new - e_old) + d.step_loss + d.proj_loss +
                      cfg.dt * (d.visc_deform + d.visc_slip + d.adv_work + d.press_work -
                                d.force_work);
        u = std::move(unew);
    }
};

void fill_diag(StepDiag& d, const VelocityField& u, double t, double delta, double nu) {
    d.t = t;
    double l2sq = l2_sq(u);
    d.l2 = std::sqrt(l2sq);
    d.energy = 0.5 * l2sq;
    d.deform_sq = deform_sq(u);
    d.boundary_diss = slip_dissipation(u, delta, nu);
    d.div_max = divergence_max(u);
    d.grad_sq = grad_sq(u);
    double lap = laplacian_l2(u);
    double gr = std::sqrt(d.grad_sq);
    d.h2_surr = (lap + gr) * (lap + gr);
}

Trajectory run(const NseConfig& cfg, NseMode mode, const VelocityField& u0, const WallData* w,
               const LinearEvolution* ztraj, const StepObserver& obs) {
    cfg.validate();
    const ChannelGrid& g = cfg.grid;
    if (mode != NseMode::NoSlip) {
        if (!(cfg.delta > 0.0)) throw std::invalid_argument("slip mode needs delta > 0");
        if (!w) throw std::invalid_argument("slip mode needs wall data");
        if (w->nt < cfg.nt) throw std::invalid_argument("wall data shorter than the run");
    }
    if (mode == NseMode::Split) {
        if (!ztraj) throw std::invalid_argument("split mode needs the linear evolution");
        if (!ztraj->grid.same_as(g) || ztraj->nt < cfg.nt || ztraj->dt != cfg.dt)
            throw std::invalid_argument("split mode: z trajectory mismatch");
    }

    Trajectory tr;
    tr.grid = g;
    tr.dt = cfg.dt;
    tr.nt = cfg.nt;
    tr.delta = (mode == NseMode::NoSlip) ? 0.0 : cfg.delta;
    tr.alpha = cfg.alpha;
    tr.nu = cfg.nu;
    tr.mode = mode;
    tr.save_stride = cfg.save_stride;

    Stepper st(cfg, mode, w, ztraj);

    // evolved unknown: u itself, or the perturbation U in split mode
    VelocityField u = u0;
    if (mode == NseMode::Split) u.axpy(-1.0, ztraj->z[0]);
    st.impose_flux(u, 0);
    PressureField p(g);

    auto emit = [&](int n, const VelocityField& evolved, StepDiag d) {
        VelocityField total = evolved;
        if (mode == NseMode::Split) {
            total.axpy(1.0, ztraj->z[n]);
            tr.U_l2_sq.push_back(l2_sq(evolved));
            tr.U_deform_sq.push_back(deform_sq(evolved));
            tr.U_tang_sq.push_back(boundary_tang_sq(evolved));
            tr.U_grad_sq.push_back(grad_sq(evolved));
        }
        fill_diag(d, total, n * cfg.dt, tr.delta, cfg.nu);
        tr.diag.push_back(d);
        if (cfg.save_stride > 0 && (n % cfg.save_stride == 0 || n == cfg.nt)) {
            tr.snaps.push_back(total);
            PressureField ptot = p;
            if (mode == NseMode::Split)
                for (size_t k = 0; k < ptot.p.size(); ++k) ptot.p[k] += ztraj->q[n].p[k];
            ptot.remove_mean();
            tr.psnaps.push_back(ptot);
            tr.snap_steps.push_back(n);
        }
        if (obs) obs(n, total, p);
    };

    emit(0, u, StepDiag{});
    const double e0 = tr.diag[0].energy;

    for (int n = 0; n < cfg.nt; ++n) {
        StepDiag d{};
        st.step(n, u, p, d);
        emit(n + 1, u, d);
        if (tr.diag.back().div_max > cfg.proj_tol)
            throw SolverError("projection left divergence " +
                                  std::to_string(tr.diag.back().div_max) + " at step " +
                                  std::to_string(n + 1),
                              {});
        if (tr.diag.back().energy > 1e6 * (e0 + 1.0))
            throw BlowupError("energy guard tripped at step " + std::to_string(n + 1));
    }
    return tr;
}

}  // namespace

Trajectory solve_noslip(const NseConfig& cfg, const VelocityField& u0, const StepObserver& obs) {
    return run(cfg, NseMode::NoSlip, u0, nullptr, nullptr, obs);
}

Trajectory solve_monolithic(const NseConfig& cfg, const VelocityField& u0, const WallData& w,
                            const StepObserver& obs) {
    return run(cfg, NseMode::Monolithic, u0, &w, nullptr, obs);
}

Trajectory solve_split(const NseConfig& cfg, const VelocityField& u0, const WallData& w,
                       const LinearEvolution& ztraj, const StepObserver& obs) {
    return run(cfg, NseMode::Split, u0, &w, &ztraj, obs);
}

}  // namespace vseed
