// Flat key=value experiment configuration with section prefixes
// (grid.nx=128). Every field is checked up front; an invalid file produces a
// single aggregated error listing all violations.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "vseed/wall_data.hpp"

namespace vseed {

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class RunMode { NoSlip, Split, Monolithic, Sweep, Audit };

struct ExperimentConfig {
    // grid
    int nx = 64, ny = 64;
    double lx = 1.0;
    // time
    double dt = 1e-3;
    int nt = 100;
    // physics
    double nu = 1.0, delta = 0.1, alpha = 1.0;
    // flux
    std::string flux_kind = "tone";  // tone|multitone|band_limited_noise|csv|none
    double flux_amplitude = 1.0;
    int flux_kappa = 1;
    double flux_omega = 6.283185307179586;
    int flux_modes = 3;
    double flux_s = 0.6;
    std::uint64_t flux_seed = 1;
    std::string flux_path;
    // forcing
    std::string forcing_kind = "none";  // none|vortex
    double forcing_amplitude = 0.0;
    // mode & sweep
    RunMode mode = RunMode::NoSlip;
    std::vector<double> sweep_deltas;
    // output
    std::string output_dir = "out";
    int save_stride = 0;
    // tolerances
    double tol_solver = 1e-10;
    double tol_projection = 1e-10;
    // experiment flags
    bool init_both_at_u0 = false;  // start u_delta at u0 instead of u0 + G(0)

    std::string raw_text;  // canonical text for hashing

    static ExperimentConfig parse_file(const std::string& path);
    static ExperimentConfig parse_text(const std::string& text);

    /// All violations at once; empty means valid.
    std::vector<std::string> validation_errors() const;
    /// Soft warnings (CFL estimate, wall-layer resolution, flux compatibility).
    std::vector<std::string> advisories() const;

    WallData make_flux() const;
    double T() const { return dt * nt; }
};

}  // namespace vseed
