#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace omegasum {

struct VerifyCheck {
    std::string name;
    bool ok;
    std::string detail;
};

// Runs the cross-module invariant suite (exhaustive on small ranges).
// quick=true trims the ranges.  Prints one line per check; returns true iff
// all checks pass.  Output is deterministic for a given configuration.
bool run_verify(bool quick, std::ostream& os, int threads = 0);

std::vector<VerifyCheck> verify_checks(bool quick, int threads = 0);

}  // namespace omegasum
