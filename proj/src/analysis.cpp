#include "vseed/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "vseed/fourier.hpp"
#include "vseed/ops.hpp"

namespace vseed {

// ---------------------------------------------------------------------------
// fractional norms

namespace {

size_t next_pow2(size_t n) {
    size_t m = 1;
    while (m < n) m <<= 1;
    return m;
}

// spectral weights from autocorrelation lags: for each window frequency,
// ||fhat(xi)||^2 = (dt^2 / 2 pi) (C_0 + 2 sum_d cos(xi d dt) C_d)
struct SpectralSums {
    double l2_part = 0.0;    // sum ||fhat||^2 dxi
    double semi = 0.0;       // sum |xi|^{2a} ||fhat||^2 dxi
    double time_l2_sq = 0.0; // rectangle-rule L2(0,T)^2 for the Parseval check
};

SpectralSums spectral_from_lags(const std::vector<double>& lags, size_t n, double dt,
                                double alpha) {
    const size_t M = next_pow2(std::max<size_t>(4 * n, 32));
    const double dxi = 2.0 * M_PI / (double(M) * dt);
    SpectralSums s;
    s.time_l2_sq = dt * lags[0];
    const double scale = dt * dt / (2.0 * M_PI);
    for (size_t j = 0; j < M; ++j) {
        double js = (j <= M / 2) ? double(j) : double(j) - double(M);
        double xi = 2.0 * M_PI * js / (double(M) * dt);
        double acc = lags[0];
        for (size_t d = 1; d < n; ++d) acc += 2.0 * std::cos(xi * double(d) * dt) * lags[d];
        double mag = std::max(0.0, scale * acc);
        s.l2_part += mag * dxi;
        // alpha = 0 is plain L2: the seminorm degenerates into the L2 part
        // and is not double counted
        if (alpha > 0.0 && js != 0.0)
            s.semi += std::pow(std::abs(xi), 2.0 * alpha) * mag * dxi;
    }
    return s;
}

void check_parseval(const SpectralSums& s) {
    double ref = std::max(s.time_l2_sq, 1e-300);
    if (std::abs(s.l2_part - s.time_l2_sq) > 1e-10 * ref)
        throw std::logic_error("fractional norm: Parseval identity violated");
}

void check_alpha(double alpha) {
    if (!(alpha >= 0.0 && alpha < 1.0))
        throw std::invalid_argument("fractional norm: alpha must be in [0,1)");
}

std::vector<double> scalar_lags(const std::vector<double>& f) {
    const size_t n = f.size();
    std::vector<double> lags(n, 0.0);
    for (size_t d = 0; d < n; ++d)
        for (size_t k = 0; k + d < n; ++k) lags[d] += f[k] * f[k + d];
    return lags;
}

}  // namespace

double fractional_norm(const TimeSeries& s, double alpha) {
    check_alpha(alpha);
    if (s.values.size() < 8) throw std::invalid_argument("fractional norm: need at least 8 samples");
    auto lags = scalar_lags(s.values);
    SpectralSums sp = spectral_from_lags(lags, s.values.size(), s.dt, alpha);
    check_parseval(sp);
    return std::sqrt(sp.l2_part + sp.semi);
}

double fractional_seminorm(const TimeSeries& s, double alpha) {
    check_alpha(alpha);
    if (s.values.size() < 8) throw std::invalid_argument("fractional norm: need at least 8 samples");
    auto lags = scalar_lags(s.values);
    SpectralSums sp = spectral_from_lags(lags, s.values.size(), s.dt, alpha);
    check_parseval(sp);
    return std::sqrt(sp.semi);
}

double field_fractional_norm(const std::vector<VelocityField>& snaps, double dt, double alpha) {
    check_alpha(alpha);
    const size_t n = snaps.size();
    if (n < 8) throw std::invalid_argument("fractional norm: need at least 8 snapshots");
    std::vector<double> lags(n, 0.0);
    for (size_t d = 0; d < n; ++d)
        for (size_t k = 0; k + d < n; ++k) lags[d] += inner(snaps[k], snaps[k + d]);
    SpectralSums sp = spectral_from_lags(lags, n, dt, alpha);
    check_parseval(sp);
    return std::sqrt(sp.l2_part + sp.semi);
}

FractionalAudit estimate_audit_fractional(const std::vector<VelocityField>& Z,
                                          const std::vector<VelocityField>& G, double dt,
                                          double epsilon) {
    FractionalAudit a;
    a.z_norm = field_fractional_norm(Z, dt, 0.5 - epsilon);
    a.g_norm = field_fractional_norm(G, dt, 0.5 + epsilon);
    if (a.g_norm > 0.0) {
        a.ratio = a.z_norm / a.g_norm;
        a.defined = true;
    }
    return a;
}

// ---------------------------------------------------------------------------
// slope fits and error functionals

SlopeFit fit_loglog(const std::vector<double>& x, const std::vector<double>& y) {
    SlopeFit f;
    std::vector<double> lx, ly;
    for (size_t k = 0; k < x.size() && k < y.size(); ++k) {
        if (x[k] > 0.0 && y[k] > 0.0) {
            lx.push_back(std::log(x[k]));
            ly.push_back(std::log(y[k]));
        }
    }
    f.points = int(lx.size());
    if (f.points < 2) return f;
    double n = double(f.points);
    double sx = 0, sy = 0, sxx = 0, sxy = 0, syy = 0;
    for (int k = 0; k < f.points; ++k) {
        sx += lx[k];
        sy += ly[k];
        sxx += lx[k] * lx[k];
        sxy += lx[k] * ly[k];
        syy += ly[k] * ly[k];
    }
    double den = n * sxx - sx * sx;
    f.slope = (n * sxy - sx * sy) / den;
    f.intercept = (sy - f.slope * sx) / n;
    double sst = syy - sy * sy / n;
    double ssr = 0.0;
    for (int k = 0; k < f.points; ++k) {
        double e = ly[k] - (f.intercept + f.slope * lx[k]);
        ssr += e * e;
    }
    f.r2 = (sst > 0.0) ? 1.0 - ssr / sst : 1.0;
    return f;
}

void ErrorAccumulator::add(int step, const VelocityField& a, const VelocityField& b) {
    if (step != last_step_ + 1) throw std::logic_error("ErrorAccumulator: steps out of order");
    last_step_ = step;
    VelocityField d = a;
    d.axpy(-1.0, b);
    double l2sq = l2_sq(d);
    acc_.sup_l2_sq = std::max(acc_.sup_l2_sq, l2sq);
    if (step > 0) {
        acc_.deform_l2_sq += dt_ * deform_sq(d);
        double tang = boundary_tang_sq(d);
        acc_.boundary_term += dt_ * tang / delta_;
        acc_.trace_l2 += dt_ * tang;  // square accumulates; root at finish
    }
}

ErrorRecord ErrorAccumulator::finish() const {
    ErrorRecord r = acc_;
    r.sup_l2 = std::sqrt(r.sup_l2_sq);
    r.total = r.sup_l2_sq + r.deform_l2_sq + r.boundary_term;
    r.trace_l2 = std::sqrt(acc_.trace_l2);
    return r;
}

ErrorRecord error_functionals(const Trajectory& u, const Trajectory& v, double delta) {
    if (!u.grid.same_as(v.grid) || u.nt != v.nt || u.dt != v.dt)
        throw std::invalid_argument("error_functionals: trajectory mismatch");
    if (u.save_stride != 1 || v.save_stride != 1 || int(u.snaps.size()) != u.nt + 1 ||
        int(v.snaps.size()) != v.nt + 1)
        throw std::invalid_argument("error_functionals: need snapshots at every step");
    ErrorAccumulator acc(u.grid, u.dt, delta);
    for (int n = 0; n <= u.nt; ++n) acc.add(n, u.snaps[n], v.snaps[n]);
    return acc.finish();
}

// ---------------------------------------------------------------------------
// Gronwall curves

GronwallCurves gronwall_bound(const Trajectory& split, const LinearEvolution& z,
                              const std::vector<StepDiag>* vdiag, double C,
                              double u0_minus_g0_l2sq) {
    const int nt = split.nt;
    const double dt = split.dt;
    GronwallCurves g;
    g.A.assign(nt + 1, 0.0);
    g.bound_U.assign(nt + 1, 0.0);
    g.psi.assign(nt + 1, 0.0);
    g.phi.assign(nt + 1, 0.0);
    g.chi.assign(nt + 1, 0.0);
    g.bound_w.assign(nt + 1, 0.0);

    double sup_z_sq = 0.0;
    for (int n = 0; n <= nt; ++n) sup_z_sq = std::max(sup_z_sq, z.z_l2[n] * z.z_l2[n]);

    // pointwise coefficient series
    for (int n = 0; n <= nt; ++n) {
        double gz2 = z.z_grad_sq[n];
        double gz = std::sqrt(gz2);
        double zl = z.z_l2[n];
        double gU2 = split.U_grad_sq[n];
        double gU = std::sqrt(gU2);
        double Ul = std::sqrt(split.U_l2_sq[n]);
        g.psi[n] = std::pow(gU, 2.0 / 3.0) * std::pow(gz, 4.0 / 3.0) * Ul +
                   std::pow(gU, 4.0 / 3.0) * std::pow(gz, 2.0 / 3.0) * zl + gz2 * zl;
        g.phi[n] = std::pow(gU, 2.0 / 3.0) * std::pow(gz, 4.0 / 3.0) +
                   std::pow(gU, 4.0 / 3.0) * std::pow(gz, 2.0 / 3.0) + gz2;
        if (vdiag) {
            g.phi[n] += (*vdiag)[n].grad_sq;
            g.chi[n] = (*vdiag)[n].h2_surr;
        }
    }
    for (int n = 0; n < nt; ++n) g.int_psi += dt * g.psi[n];

    // perturbation-energy exponent and bound, left-endpoint quadrature
    for (int n = 1; n <= nt; ++n)
        g.A[n] = g.A[n - 1] + C * dt + C * (1.0 + sup_z_sq) * dt * z.z_grad_sq[n - 1];
    g.bound_U[0] = u0_minus_g0_l2sq;
    double run_sup = split.U_l2_sq[0];
    g.violations_U = (run_sup > g.bound_U[0] * (1.0 + 1e-9) + 1e-14) ? 1 : 0;
    for (int n = 1; n <= nt; ++n) {
        double integral = 0.0;
        for (int m = 0; m < n; ++m) {
            // diag[m+1].f_l2_sq stores the forcing norm at the left endpoint t_m
            double load = split.diag[m + 1].f_l2_sq + z.z_grad_sq[m] * z.z_l2[m];
            integral += dt * load * std::exp(g.A[n] - g.A[m]);
        }
        g.bound_U[n] = u0_minus_g0_l2sq * std::exp(g.A[n]) + C * integral;
        run_sup = std::max(run_sup, split.U_l2_sq[n]);
        if (run_sup > g.bound_U[n] * (1.0 + 1e-9) + 1e-14) ++g.violations_U;
    }

    // comparison-inequality curve with the measured coefficients
    for (int n = 0; n < nt; ++n) {
        double grow = std::exp(dt * C * g.phi[n]);
        g.bound_w[n + 1] =
            (g.bound_w[n] + dt * (split.delta * g.chi[n] + C * g.psi[n])) * grow;
    }
    return g;
}

// ---------------------------------------------------------------------------
// delta sweep

bool RateReport::all_pass() const {
    for (const auto& a : assertions)
        if (!a.conclusive || !a.pass) return false;
    return !partial;
}

std::string RateReport::summary() const {
    std::ostringstream os;
    os << "delta sweep, alpha = " << alpha << (partial ? " [PARTIAL]" : "") << "\n";
    os << "  delta        total(u-v)    sup|u-v|      trace_l2      total(w)      z_energy      int_psi\n";
    char line[256];
    for (const auto& p : points) {
        if (!p.ok) {
            os << "  " << p.delta << "  FAILED: " << p.error << "\n";
            continue;
        }
        std::snprintf(line, sizeof line, "  %-10.4g %-13.6g %-13.6g %-13.6g %-13.6g %-13.6g %-13.6g\n",
                      p.delta, p.err.total, p.err.sup_l2, p.err.trace_l2, p.werr.total,
                      p.z_energy, p.int_psi);
        os << line;
    }
    auto put = [&](const char* name, const SlopeFit& f) {
        std::snprintf(line, sizeof line, "  slope %-18s = %8.4f  (R^2 = %.4f%s)\n", name,
                      f.slope, f.r2, f.conclusive() ? "" : ", inconclusive");
        os << line;
    };
    put("total(u-v)", slope_total);
    put("sup|u-v|", slope_sup_l2);
    put("trace_l2", slope_trace);
    put("total(w)", slope_w_total);
    put("z_energy", slope_z_energy);
    put("int_psi", slope_int_psi);
    for (const auto& a : assertions) {
        std::snprintf(line, sizeof line, "  [%s] %s: slope %.4f vs >= %.4f (R^2 %.4f)\n",
                      !a.conclusive ? "INCONCLUSIVE" : (a.pass ? "PASS" : "FAIL"),
                      a.name.c_str(), a.slope, a.threshold, a.r2);
        os << line;
    }
    return os.str();
}

RateReport rate_sweep(const NseConfig& cfg, const WallData& w,
                      const std::vector<double>& deltas, double alpha, SweepOptions& opt) {
    if (deltas.size() < 4) throw std::invalid_argument("rate_sweep: need at least 4 deltas");
    for (size_t k = 1; k < deltas.size(); ++k)
        if (!(deltas[k] < deltas[k - 1]))
            throw std::invalid_argument("rate_sweep: deltas must be strictly decreasing");
    double dmin = deltas.back();
    if (cfg.grid.hy > dmin / 4.0)
        opt.advisories.push_back("resolution advisory: hy > min(delta)/4; wall layers may be under-resolved");

    RateReport rep;
    rep.alpha = alpha;

    // no-slip reference, snapshots kept at every step
    NseConfig vcfg = cfg;
    vcfg.save_stride = 1;
    VelocityField zerov(cfg.grid);
    Trajectory vtraj = solve_noslip(vcfg, zerov);

    for (double delta : deltas) {
        RatePoint pt;
        pt.delta = delta;
        try {
            EvolutionOptions eopt;
            eopt.tol = cfg.solver_tol;
            LinearEvolution ztraj = solve_linear_evolution(cfg.grid, w, delta, alpha, cfg.nu,
                                                           cfg.dt, cfg.nt, eopt);
            pt.z_energy = ztraj.energy_functional();

            VelocityField u0(cfg.grid);  // zero background
            if (opt.init_total_with_lifting) u0 = ztraj.z[0];  // u(0) = u0 + G(0), u0 = 0

            NseConfig scfg = cfg;
            scfg.delta = delta;
            scfg.alpha = alpha;
            scfg.save_stride = 0;

            ErrorAccumulator err_uv(cfg.grid, cfg.dt, delta);
            ErrorAccumulator err_w(cfg.grid, cfg.dt, delta);
            auto observer = [&](int n, const VelocityField& u, const PressureField&) {
                err_uv.add(n, u, vtraj.snaps[n]);
                VelocityField wfield = u;
                wfield.axpy(-1.0, ztraj.z[n]);
                err_w.add(n, wfield, vtraj.snaps[n]);
            };
            Trajectory straj = solve_split(scfg, u0, w, ztraj, observer);

            pt.err = err_uv.finish();
            pt.werr = err_w.finish();

            double u0mg0 = 0.0;  // U(0) = u0 - G(0) vanishes under the default init
            if (!opt.init_total_with_lifting) u0mg0 = l2_sq(ztraj.z[0]);
            GronwallCurves gc =
                gronwall_bound(straj, ztraj, &vtraj.diag, opt.gronwall_c, u0mg0);
            pt.int_psi = gc.int_psi;
            pt.gronwall_violations = gc.violations_U;
            pt.ok = true;
        } catch (const std::exception& e) {
            pt.ok = false;
            pt.error = e.what();
            rep.partial = true;
        }
        rep.points.push_back(pt);
    }

    std::vector<double> ds, total, supl2, trace, wtotal, zen, ipsi;
    for (const auto& p : rep.points) {
        if (!p.ok) continue;
        ds.push_back(p.delta);
        total.push_back(p.err.total);
        supl2.push_back(p.err.sup_l2);
        trace.push_back(p.err.trace_l2);
        wtotal.push_back(p.werr.total);
        zen.push_back(p.z_energy);
        ipsi.push_back(p.int_psi);
    }
    rep.slope_total = fit_loglog(ds, total);
    rep.slope_sup_l2 = fit_loglog(ds, supl2);
    rep.slope_trace = fit_loglog(ds, trace);
    rep.slope_w_total = fit_loglog(ds, wtotal);
    rep.slope_z_energy = fit_loglog(ds, zen);
    rep.slope_int_psi = fit_loglog(ds, ipsi);

    auto assert_slope = [&](const std::string& name, const SlopeFit& f, double thr) {
        RateAssertion a;
        a.name = name;
        a.slope = f.slope;
        a.threshold = thr;
        a.r2 = f.r2;
        a.conclusive = f.conclusive();
        a.pass = a.conclusive && f.slope >= thr;
        rep.assertions.push_back(a);
    };
    if (alpha == 1.0) {
        assert_slope("total(u-v) vs delta", rep.slope_total, 2.0 / 3.0 - 0.1);
        assert_slope("sup|u-v| vs delta", rep.slope_sup_l2, 1.0 / 3.0 - 0.05);
        assert_slope("trace_l2 vs delta", rep.slope_trace, 5.0 / 6.0 - 0.1);
        assert_slope("z_energy vs delta", rep.slope_z_energy, 1.0 - 0.1);
    } else {
        assert_slope("total(w) vs delta", rep.slope_w_total, 4.0 / 3.0 * (alpha - 0.5) - 0.15);
    }
    return rep;
}

}  // namespace vseed
