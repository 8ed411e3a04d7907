#include "vseed/config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

namespace vseed {

namespace {

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r");
    size_t b = s.find_last_not_of(" \t\r");
    if (a == std::string::npos) return "";
    return s.substr(a, b - a + 1);
}

std::vector<double> parse_list(const std::string& s) {
    std::vector<double> out;
    std::istringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        tok = trim(tok);
        if (!tok.empty()) out.push_back(std::stod(tok));
    }
    return out;
}

}  // namespace

ExperimentConfig ExperimentConfig::parse_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw ConfigError("cannot read config file: " + path);
    std::stringstream ss;
    ss << f.rdbuf();
    return parse_text(ss.str());
}

ExperimentConfig ExperimentConfig::parse_text(const std::string& text) {
    ExperimentConfig c;
    c.raw_text = text;
    std::istringstream ss(text);
    std::string line;
    int lineno = 0;
    std::vector<std::string> bad;
    while (std::getline(ss, line)) {
        ++lineno;
        std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        size_t eq = t.find('=');
        if (eq == std::string::npos) {
            bad.push_back("line " + std::to_string(lineno) + ": expected key=value");
            continue;
        }
        std::string key = trim(t.substr(0, eq));
        std::string val = trim(t.substr(eq + 1));
        try {
            if (key == "grid.nx") c.nx = std::stoi(val);
            else if (key == "grid.ny") c.ny = std::stoi(val);
            else if (key == "grid.lx") c.lx = std::stod(val);
            else if (key == "time.dt") c.dt = std::stod(val);
            else if (key == "time.nt") c.nt = std::stoi(val);
            else if (key == "physics.nu") c.nu = std::stod(val);
            else if (key == "physics.delta") c.delta = std::stod(val);
            else if (key == "physics.alpha") c.alpha = std::stod(val);
            else if (key == "flux.kind") c.flux_kind = val;
            else if (key == "flux.amplitude") c.flux_amplitude = std::stod(val);
            else if (key == "flux.kappa") c.flux_kappa = std::stoi(val);
            else if (key == "flux.omega") c.flux_omega = std::stod(val);
            else if (key == "flux.modes") c.flux_modes = std::stoi(val);
            else if (key == "flux.s") c.flux_s = std::stod(val);
            else if (key == "flux.seed") c.flux_seed = std::stoull(val);
            else if (key == "flux.path") c.flux_path = val;
            else if (key == "forcing.kind") c.forcing_kind = val;
            else if (key == "forcing.amplitude") c.forcing_amplitude = std::stod(val);
            else if (key == "mode") {
                if (val == "noslip") c.mode = RunMode::NoSlip;
                else if (val == "split") c.mode = RunMode::Split;
                else if (val == "monolithic") c.mode = RunMode::Monolithic;
                else if (val == "sweep") c.mode = RunMode::Sweep;
                else if (val == "audit") c.mode = RunMode::Audit;
                else bad.push_back("line " + std::to_string(lineno) + ": unknown mode '" + val + "'");
            } else if (key == "sweep.deltas") c.sweep_deltas = parse_list(val);
            else if (key == "output.dir") c.output_dir = val;
            else if (key == "output.save_stride") c.save_stride = std::stoi(val);
            else if (key == "tol.solver") c.tol_solver = std::stod(val);
            else if (key == "tol.projection") c.tol_projection = std::stod(val);
            else if (key == "experiment.init_both_at_u0")
                c.init_both_at_u0 = (val == "true" || val == "1");
            else bad.push_back("line " + std::to_string(lineno) + ": unknown key '" + key + "'");
        } catch (const std::exception&) {
            bad.push_back("line " + std::to_string(lineno) + ": cannot parse value '" + val + "'");
        }
    }
    if (!bad.empty()) {
        std::string msg = "config parse errors:";
        for (const auto& b : bad) msg += "\n  " + b;
        throw ConfigError(msg);
    }
    return c;
}

std::vector<std::string> ExperimentConfig::validation_errors() const {
    std::vector<std::string> e;
    if (nx < 4) e.push_back("grid.nx must be >= 4");
    if (ny < 4) e.push_back("grid.ny must be >= 4");
    if (!(lx > 0.0)) e.push_back("grid.lx must be positive");
    if (!(dt > 0.0)) e.push_back("time.dt must be positive");
    if (nt < 1) e.push_back("time.nt must be >= 1");
    if (!(nu > 0.0)) e.push_back("physics.nu must be positive");
    if (mode != RunMode::NoSlip && mode != RunMode::Sweep) {
        if (!(delta > 0.0 && delta <= 1.0)) e.push_back("physics.delta must lie in (0,1]");
    }
    if (alpha < 1.0 && mode != RunMode::NoSlip)
        e.push_back("physics.alpha must be >= 1");
    if (flux_kind != "tone" && flux_kind != "multitone" && flux_kind != "band_limited_noise" &&
        flux_kind != "csv" && flux_kind != "none")
        e.push_back("flux.kind must be tone|multitone|band_limited_noise|csv|none");
    if (flux_kind == "csv" && flux_path.empty()) e.push_back("flux.kind=csv needs flux.path");
    if (flux_kind == "tone" && flux_kappa == 0)
        e.push_back("flux.kappa=0 (spatially constant tone) is rejected: per-wall net through-flow");
    if (forcing_kind != "none" && forcing_kind != "vortex" && forcing_kind != "manufactured")
        e.push_back("forcing.kind must be none|vortex|manufactured");
    if (mode == RunMode::Sweep) {
        if (sweep_deltas.size() < 4) e.push_back("sweep.deltas needs at least 4 values");
        for (size_t k = 1; k < sweep_deltas.size(); ++k)
            if (!(sweep_deltas[k] < sweep_deltas[k - 1])) {
                e.push_back("sweep.deltas must be strictly decreasing");
                break;
            }
        for (double d : sweep_deltas)
            if (!(d > 0.0 && d <= 1.0)) {
                e.push_back("sweep.deltas values must lie in (0,1]");
                break;
            }
    }
    if (save_stride < 0) e.push_back("output.save_stride must be >= 0");
    if (!(tol_solver > 0.0)) e.push_back("tol.solver must be positive");
    if (!(tol_projection > 0.0)) e.push_back("tol.projection must be positive");
    if (output_dir.empty()) e.push_back("output.dir must not be empty");
    return e;
}

std::vector<std::string> ExperimentConfig::advisories() const {
    std::vector<std::string> a;
    double h = std::min(lx / nx, 1.0 / ny);
    if (dt > 0.5 * h)
        a.push_back("CFL advisory: dt > 0.5*min(hx,hy); the advective limit will abort once |u| reaches 1");
    double dmin = delta;
    if (mode == RunMode::Sweep && !sweep_deltas.empty()) dmin = sweep_deltas.back();
    if (mode != RunMode::NoSlip && 1.0 / ny > dmin / 4.0)
        a.push_back("resolution advisory: hy exceeds min(delta)/4; refine ny or raise delta (h <= delta/4 rule)");
    if (flux_kind == "csv" && !flux_path.empty()) {
        try {
            WallData w = read_wall_csv(flux_path, nx, nt, dt, lx);
            int worst = 0;
            double defect = w.compatibility_defect(&worst);
            if (defect > 1e-12 * std::max(1.0, w.max_abs()) * lx)
                a.push_back("flux CSV violates the compatibility condition: worst slice t_index=" +
                            std::to_string(worst) + ", defect=" + std::to_string(defect));
        } catch (const std::exception& ex) {
            a.push_back(std::string("flux CSV unreadable: ") + ex.what());
        }
    }
    return a;
}

WallData ExperimentConfig::make_flux() const {
    if (flux_kind == "none") {
        WallData w(nx, nt, dt, lx);
        return w;
    }
    if (flux_kind == "csv") {
        WallData w = read_wall_csv(flux_path, nx, nt, dt, lx);
        int worst = 0;
        double defect = w.compatibility_defect(&worst);
        if (defect > 1e-12 * std::max(1.0, w.max_abs()) * lx)
            throw ConfigError("flux CSV violates the compatibility condition at t_index=" +
                              std::to_string(worst));
        return w;
    }
    FluxSpec spec;
    if (flux_kind == "tone") spec.kind = FluxKind::Tone;
    else if (flux_kind == "multitone") spec.kind = FluxKind::Multitone;
    else spec.kind = FluxKind::BandLimitedNoise;
    spec.amplitude = flux_amplitude;
    spec.kappa = flux_kappa;
    spec.omega = flux_omega;
    spec.modes = flux_modes;
    spec.sobolev_s = flux_s;
    spec.seed = flux_seed;
    return make_test_flux(spec, nx, nt, dt, lx);
}

}  // namespace vseed
