#pragma once

#include <string>
#include <vector>

namespace vgp {

struct CheckResult {
    std::string name;
    bool passed = false;
    double measured = 0.0;
    double limit = 0.0;
    std::string detail;
};

// Module-level invariants: reflection, unimodality, CF symmetry, CDF/PDF consistency,
// dual-path equality, reduction identities, normalisation and tail ratios.
std::vector<CheckResult> run_invariant_suite(bool quick = false);

}  // namespace vgp
