#include "vseed/csvio.hpp"

#include <cstring>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace vseed {

namespace {

void put_u64(std::ofstream& f, std::uint64_t v) {
    unsigned char b[8];
    for (int k = 0; k < 8; ++k) b[k] = (v >> (8 * k)) & 0xff;
    f.write(reinterpret_cast<char*>(b), 8);
}

std::uint64_t get_u64(std::ifstream& f) {
    unsigned char b[8];
    f.read(reinterpret_cast<char*>(b), 8);
    std::uint64_t v = 0;
    for (int k = 0; k < 8; ++k) v |= std::uint64_t(b[k]) << (8 * k);
    return v;
}

void put_f64(std::ofstream& f, double x) {
    std::uint64_t v;
    std::memcpy(&v, &x, 8);
    put_u64(f, v);
}

double get_f64(std::ifstream& f) {
    std::uint64_t v = get_u64(f);
    double x;
    std::memcpy(&x, &v, 8);
    return x;
}

void put_array(std::ofstream& f, const std::vector<double>& a) {
    for (double x : a) put_f64(f, x);
}

void get_array(std::ifstream& f, std::vector<double>& a) {
    for (double& x : a) x = get_f64(f);
}

}  // namespace

void write_diagnostics_csv(const Trajectory& tr, const std::string& path) {
    std::ofstream f(path, std::ios::binary);  // binary: LF endings everywhere
    if (!f) throw std::runtime_error("write_diagnostics_csv: cannot open " + path);
    f << "step,t,energy,deform_sq,boundary_diss,div_max\n";
    char line[256];
    for (size_t n = 0; n < tr.diag.size(); ++n) {
        const StepDiag& d = tr.diag[n];
        std::snprintf(line, sizeof line, "%zu,%.17g,%.17g,%.17g,%.17g,%.17g\n", n, d.t,
                      d.energy, d.deform_sq, d.boundary_diss, d.div_max);
        f << line;
    }
}

std::vector<DiagRow> read_diagnostics_csv(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("read_diagnostics_csv: cannot open " + path);
    std::string line;
    if (!std::getline(f, line) || line.rfind("step,t,energy", 0) != 0)
        throw std::runtime_error("read_diagnostics_csv: bad header in " + path);
    std::vector<DiagRow> rows;
    while (std::getline(f, line)) {
        if (line.empty()) continue;
        DiagRow r;
        std::istringstream ss(line);
        std::string tok;
        std::getline(ss, tok, ',');
        r.step = std::stoi(tok);
        std::getline(ss, tok, ',');
        r.t = std::stod(tok);
        std::getline(ss, tok, ',');
        r.energy = std::stod(tok);
        std::getline(ss, tok, ',');
        r.deform_sq = std::stod(tok);
        std::getline(ss, tok, ',');
        r.boundary_diss = std::stod(tok);
        std::getline(ss, tok, ',');
        r.div_max = std::stod(tok);
        rows.push_back(r);
    }
    return rows;
}

void write_snapshots(const Trajectory& tr, const std::string& path) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("write_snapshots: cannot open " + path);
    f.write("VSEED1", 6);
    put_u64(f, std::uint64_t(tr.grid.nx));
    put_u64(f, std::uint64_t(tr.grid.ny));
    put_u64(f, std::uint64_t(tr.snaps.empty() ? 0 : tr.snaps.size() - 1));
    put_f64(f, tr.dt * std::max(1, tr.save_stride));
    for (size_t s = 0; s < tr.snaps.size(); ++s) {
        put_array(f, tr.snaps[s].u_);
        put_array(f, tr.snaps[s].v_);
        put_array(f, tr.psnaps[s].p);
    }
}

SnapshotFile read_snapshots(const std::string& path, double lx) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("read_snapshots: cannot open " + path);
    char magic[6];
    f.read(magic, 6);
    if (!f || std::strncmp(magic, "VSEED1", 6) != 0)
        throw std::runtime_error("read_snapshots: bad magic in " + path);
    SnapshotFile sf;
    sf.nx = get_u64(f);
    sf.ny = get_u64(f);
    sf.nt = get_u64(f);
    sf.dt = get_f64(f);
    ChannelGrid g(int(sf.nx), int(sf.ny), lx);
    for (std::uint64_t s = 0; s <= sf.nt; ++s) {
        VelocityField v(g);
        get_array(f, v.u_);
        get_array(f, v.v_);
        PressureField p(g);
        get_array(f, p.p);
        if (!f) throw std::runtime_error("read_snapshots: truncated file " + path);
        sf.velocity.push_back(std::move(v));
        sf.pressure.push_back(std::move(p));
    }
    return sf;
}

void write_rate_csv(const RateReport& rep, const std::string& path) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("write_rate_csv: cannot open " + path);
    f << "delta,supL2sq,deformL2sq,boundary_term,total,trace_l2\n";
    char line[256];
    for (const auto& p : rep.points) {
        if (!p.ok) continue;
        std::snprintf(line, sizeof line, "%.17g,%.17g,%.17g,%.17g,%.17g,%.17g\n", p.delta,
                      p.err.sup_l2_sq, p.err.deform_l2_sq, p.err.boundary_term, p.err.total,
                      p.err.trace_l2);
        f << line;
    }
}

std::uint64_t fnv1a64(const std::string& text) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

}  // namespace vseed
