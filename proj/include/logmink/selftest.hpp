#pragma once

#include <string>
#include <vector>

namespace logmink {

// One acceptance criterion: a pass/fail verdict plus the measured numbers
// backing it, suitable for a one-line report.
struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
};

struct AcceptanceReport {
    std::vector<CriterionResult> results;

    bool all_pass() const;
    // One line per criterion: "criterion NN PASS|FAIL  name  detail  [t]".
    std::string table() const;
};

// Runs the acceptance suite.  The oracle-backed property criteria (4-11)
// always run; include_solves additionally runs the three scripted
// log-Minkowski reproductions (1-3).  Deterministic: fixed seeds throughout.
AcceptanceReport run_acceptance(bool include_solves);

}  // namespace logmink
