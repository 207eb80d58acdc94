#pragma once

#include <string>
#include <vector>

namespace icosa {

// One named self-check with its outcome and a short measurement note.
struct CheckResult {
    std::string name;
    bool pass;
    std::string detail;
};

// Runs the full pipeline of internal consistency checks: group
// construction, irrep matrices, algebra reduction, symmetry-adapted
// bases, and both Hueckel models. Failures are reported, not thrown.
std::vector<CheckResult> run_all(double tol = 1e-9);

} // namespace icosa
