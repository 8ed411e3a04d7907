#include "vseed/runner.hpp"

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "vseed/analysis.hpp"
#include "vseed/bc.hpp"
#include "vseed/csvio.hpp"
#include "vseed/manufactured.hpp"
#include "vseed/ops.hpp"

namespace vseed {

namespace fs = std::filesystem;

Forcing make_forcing(const ExperimentConfig& cfg) {
    if (cfg.forcing_kind == "manufactured") return manufactured_forcing(cfg.nu);
    if (cfg.forcing_kind == "none" || cfg.forcing_amplitude == 0.0) return {};
    const double amp = cfg.forcing_amplitude;
    const double lx = cfg.lx;
    // curl of psi = (amp lx / 2 pi) cos(2 pi x / lx) sin^2(pi y): smooth,
    // divergence-free, nonzero in both components
    return [amp, lx](double, VelocityField& f) {
        const ChannelGrid& g = f.grid;
        for (int j = 0; j < g.ny; ++j)
            for (int i = 0; i < g.nx; ++i) {
                double x = g.xu(i), y = g.yu(j);
                f.u(i, j) = amp * lx / 2.0 * std::cos(2.0 * M_PI * x / lx) * std::sin(2.0 * M_PI * y);
            }
        for (int j = 1; j < g.ny; ++j)
            for (int i = 0; i < g.nx; ++i) {
                double x = g.xc(i), y = g.yv(j);
                double s = std::sin(M_PI * y);
                f.v(i, j) = amp * std::sin(2.0 * M_PI * x / lx) * s * s;
            }
    };
}

std::string effective_output_dir(const ExperimentConfig& cfg) {
    const char* root = std::getenv("VSEED_OUT");
    if (root && *root) return std::string(root) + "/" + cfg.output_dir;
    return cfg.output_dir;
}

namespace {

NseConfig to_nse_config(const ExperimentConfig& c) {
    NseConfig n;
    n.grid = ChannelGrid(c.nx, c.ny, c.lx);
    n.delta = c.delta;
    n.alpha = c.alpha;
    n.nu = c.nu;
    n.dt = c.dt;
    n.nt = c.nt;
    n.solver_tol = c.tol_solver;
    n.proj_tol = c.tol_projection;
    n.save_stride = c.save_stride;
    n.forcing = make_forcing(c);
    return n;
}

void write_manifest(const std::string& dir, const ExperimentConfig& cfg,
                    const std::string& diag_csv_path, double seconds) {
    std::ofstream f(dir + "/manifest.txt", std::ios::binary);
    f << "version=" << kVersion << "\n";
    f << "config_hash=" << fnv1a64(cfg.raw_text) << "\n";
    if (!diag_csv_path.empty()) {
        std::ifstream d(diag_csv_path, std::ios::binary);
        std::stringstream ss;
        ss << d.rdbuf();
        f << "diagnostics_hash=" << fnv1a64(ss.str()) << "\n";
    }
    f << "wallclock_s=" << seconds << "\n";
    f << "lx=" << cfg.lx << "\n";
    f << "delta=" << cfg.delta << "\n";
    f << "alpha=" << cfg.alpha << "\n";
    f << "nu=" << cfg.nu << "\n";
    f << "dt=" << cfg.dt << "\n";
    f << "nt=" << cfg.nt << "\n";
    f << "save_stride=" << cfg.save_stride << "\n";
    f << "init_both_at_u0=" << (cfg.init_both_at_u0 ? "true" : "false") << "\n";
}

std::map<std::string, std::string> read_manifest(const std::string& dir) {
    std::ifstream f(dir + "/manifest.txt");
    if (!f) throw std::runtime_error("audit: cannot read " + dir + "/manifest.txt");
    std::map<std::string, std::string> kv;
    std::string line;
    while (std::getline(f, line)) {
        size_t eq = line.find('=');
        if (eq != std::string::npos) kv[line.substr(0, eq)] = line.substr(eq + 1);
    }
    return kv;
}

int run_single(const ExperimentConfig& cfg, const std::string& dir) {
    NseConfig ncfg = to_nse_config(cfg);
    VelocityField u0(ncfg.grid);
    Trajectory tr;
    auto t0 = std::chrono::steady_clock::now();
    if (cfg.mode == RunMode::NoSlip) {
        tr = solve_noslip(ncfg, u0);
    } else {
        WallData w = cfg.make_flux();
        if (cfg.mode == RunMode::Monolithic) {
            if (!cfg.init_both_at_u0) {
                StokesSolution g0 = solve_stationary(ncfg.grid, w, 0, cfg.delta, cfg.alpha,
                                                     cfg.nu, cfg.tol_solver);
                u0 = g0.velocity;
            }
            tr = solve_monolithic(ncfg, u0, w);
        } else {
            EvolutionOptions eopt;
            eopt.tol = cfg.tol_solver;
            LinearEvolution z = solve_linear_evolution(ncfg.grid, w, cfg.delta, cfg.alpha,
                                                       cfg.nu, cfg.dt, cfg.nt, eopt);
            if (!cfg.init_both_at_u0) u0 = z.z[0];
            tr = solve_split(ncfg, u0, w, z);
        }
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    write_diagnostics_csv(tr, dir + "/diagnostics.csv");
    if (cfg.save_stride > 0) write_snapshots(tr, dir + "/snapshots.bin");
    std::ofstream sum(dir + "/summary.txt", std::ios::binary);
    const StepDiag& last = tr.diag.back();
    sum << "steps=" << tr.nt << " T=" << tr.nt * tr.dt << "\n";
    sum << "final_energy=" << last.energy << "\n";
    sum << "max_energy=" << 0.5 * tr.sup_l2_sq() << "\n";
    sum << "final_div_max=" << last.div_max << "\n";
    write_manifest(dir, cfg, dir + "/diagnostics.csv", secs);
    std::cout << "run complete: " << dir << " (" << secs << " s)\n";
    return 0;
}

int run_sweep(const ExperimentConfig& cfg, const std::string& dir) {
    NseConfig ncfg = to_nse_config(cfg);
    WallData w = cfg.make_flux();
    SweepOptions opt;
    opt.init_total_with_lifting = !cfg.init_both_at_u0;
    auto t0 = std::chrono::steady_clock::now();
    RateReport rep = rate_sweep(ncfg, w, cfg.sweep_deltas, cfg.alpha, opt);
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    write_rate_csv(rep, dir + "/rate.csv");
    std::ofstream sum(dir + "/summary.txt", std::ios::binary);
    sum << rep.summary();
    for (const auto& a : opt.advisories) sum << "advisory: " << a << "\n";
    write_manifest(dir, cfg, "", secs);
    std::cout << rep.summary();
    if (rep.partial) {
        std::cerr << "sweep incomplete: solver failures recorded in rate.csv/summary\n";
        return 1;
    }
    return rep.all_pass() ? 0 : 2;
}

}  // namespace

int run_config(const std::string& config_path, bool force_sweep) {
    ExperimentConfig cfg;
    try {
        cfg = ExperimentConfig::parse_file(config_path);
        if (force_sweep) cfg.mode = RunMode::Sweep;
        auto errs = cfg.validation_errors();
        if (!errs.empty()) {
            std::string msg = "invalid config:";
            for (const auto& e : errs) msg += "\n  " + e;
            throw ConfigError(msg);
        }
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return 1;
    }

    try {
        std::string dir = effective_output_dir(cfg);
        fs::create_directories(dir);
        if (cfg.mode == RunMode::Audit) return audit_rundir(dir);
        if (cfg.mode == RunMode::Sweep) return run_sweep(cfg, dir);
        return run_single(cfg, dir);
    } catch (const SolverError& e) {
        std::cerr << "solver failure: " << e.what() << "\n";
        return 1;
    } catch (const CflError& e) {
        std::cerr << "aborted: " << e.what() << "\n";
        return 1;
    } catch (const BlowupError& e) {
        std::cerr << "aborted: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return 1;
    }
}

int validate_config(const std::string& config_path) {
    try {
        ExperimentConfig cfg = ExperimentConfig::parse_file(config_path);
        auto errs = cfg.validation_errors();
        auto adv = cfg.advisories();
        if (!errs.empty()) {
            std::cout << "invalid\n";
            for (const auto& e : errs) std::cout << "  error: " << e << "\n";
            for (const auto& a : adv) std::cout << "  advisory: " << a << "\n";
            return 1;
        }
        std::cout << "valid\n";
        for (const auto& a : adv) std::cout << "  advisory: " << a << "\n";
        return 0;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return 1;
    }
}

int audit_rundir(const std::string& rundir) {
    try {
        auto kv = read_manifest(rundir);
        double lx = std::stod(kv.at("lx"));
        double delta = std::stod(kv.at("delta"));
        double nu = std::stod(kv.at("nu"));
        SnapshotFile sf = read_snapshots(rundir + "/snapshots.bin", lx);
        auto rows = read_diagnostics_csv(rundir + "/diagnostics.csv");
        int stride = std::stoi(kv.at("save_stride"));
        int nt = std::stoi(kv.at("nt"));

        int mismatches = 0;
        for (size_t s = 0; s < sf.velocity.size(); ++s) {
            int step = std::min<int>(int(s) * std::max(1, stride), nt);
            if (step >= int(rows.size())) break;
            const VelocityField& u = sf.velocity[s];
            double energy = 0.5 * l2_sq(u);
            double dsq = deform_sq(u);
            double bd = slip_dissipation(u, delta, nu);
            double dmax = divergence_max(u);
            const DiagRow& r = rows[step];
            auto close = [](double a, double b) {
                return std::abs(a - b) <= 1e-9 * std::max({std::abs(a), std::abs(b), 1e-12});
            };
            if (!close(energy, r.energy) || !close(dsq, r.deform_sq) ||
                !close(bd, r.boundary_diss) || !close(dmax, r.div_max)) {
                ++mismatches;
                std::cout << "mismatch at step " << step << ": recomputed energy=" << energy
                          << " csv=" << r.energy << "\n";
            }
        }
        if (mismatches == 0) {
            std::cout << "audit pass: " << sf.velocity.size()
                      << " snapshots match the diagnostics\n";
            return 0;
        }
        std::cout << "audit fail: " << mismatches << " mismatching snapshots\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "audit error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace vseed
