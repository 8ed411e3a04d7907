// Command-line front end: run <config>, validate <config>, sweep <config>,
// audit <rundir>. Exit codes: 0 pass, 2 assertion failure, 1 error.

#include <cstring>
#include <iostream>

#include "vseed/runner.hpp"

namespace {

void usage() {
    std::cout << "usage: vseed <verb> <arg>\n"
                 "  run <config>       execute the mode requested by the config\n"
                 "  validate <config>  check a config (no simulation)\n"
                 "  sweep <config>     force-run the delta sweep of the config\n"
                 "  audit <rundir>     recompute diagnostics from stored snapshots\n"
                 "environment: VSEED_OUT overrides the output root\n";
}

}  // namespace

int main(int argc, char** argv) {
    if (argc >= 2 && (std::strcmp(argv[1], "--help") == 0 || std::strcmp(argv[1], "-h") == 0)) {
        usage();
        return 0;
    }
    if (argc != 3) {
        usage();
        return 1;
    }
    std::string verb = argv[1];
    std::string arg = argv[2];
    if (verb == "run") return vseed::run_config(arg);
    if (verb == "validate") return vseed::validate_config(arg);
    if (verb == "sweep") return vseed::run_config(arg, /*force_sweep=*/true);
    if (verb == "audit") return vseed::audit_rundir(arg);
    std::cerr << "unknown verb: " << verb << "\n";
    usage();
    return 1;
}
