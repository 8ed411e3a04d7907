// Run artifacts: diagnostics CSV, rate-report CSV, and the flat binary
// snapshot format (magic "VSEED1"; nx, ny, stored-step count minus one, and
// the snapshot spacing as little-endian 64-bit values; then per stored step
// the row-major u, v, p arrays including ghost/wall rows).

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "vseed/analysis.hpp"
#include "vseed/nse.hpp"

namespace vseed {

void write_diagnostics_csv(const Trajectory& tr, const std::string& path);

struct DiagRow {
    int step = 0;
    double t = 0, energy = 0, deform_sq = 0, boundary_diss = 0, div_max = 0;
};
std::vector<DiagRow> read_diagnostics_csv(const std::string& path);

void write_snapshots(const Trajectory& tr, const std::string& path);

struct SnapshotFile {
    std::uint64_t nx = 0, ny = 0, nt = 0;
    double dt = 0.0;  // spacing between stored snapshots
    std::vector<VelocityField> velocity;
    std::vector<PressureField> pressure;
};
/// lx is not part of the header; pass it when the fields feed grid operators.
SnapshotFile read_snapshots(const std::string& path, double lx = 1.0);

void write_rate_csv(const RateReport& rep, const std::string& path);

std::uint64_t fnv1a64(const std::string& text);

}  // namespace vseed
