#pragma once

#include <string>
#include <vector>

namespace nt {

// One named reproduction script: re-derives a pinned numeric claim and
// reports pass/fail with the measured and expected values side by side.
struct ReproResult {
    std::string name;
    bool pass = false;
    std::string detail;  // "measured ... expected ..." summary
};

const std::vector<std::string>& repro_names();

// Runs one script by name; throws std::invalid_argument for unknown names.
ReproResult run_repro(const std::string& name);

std::vector<ReproResult> run_all_repro();

}  // namespace nt
