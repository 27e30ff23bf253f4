#pragma once

#include <string>
#include <vector>

#include "rmt/grid.hpp"

namespace rmt {

// Entry point behind the `rmt` binary; args exclude the program name.
// Returns the process exit code (0 success, 1 runtime failure, 2 usage).
int dispatch(const std::vector<std::string>& args);

struct OverlayStats {
    double sup_distance = 0.0;
    double ks_distance = 0.0;
};

// CSV with columns x, hist, theory plus a JSON sidecar (path + ".json") with
// sup-distance and KS statistics.
OverlayStats emit_overlay(const GridFunction& histogram,
                          const GridFunction& curve, const std::string& path);

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

// Every module invariant from the spec sheet, one named check each.
std::vector<CheckResult> run_all_checks(std::uint64_t seed);

}  // namespace rmt
