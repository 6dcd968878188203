#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sandpile::selftest {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    double seconds = 0.0;
    double budget_seconds = 0.0;
    std::string detail;  // first failing check, empty on success
};

/// Runs the full verification suite (exact reproduction of the library's
/// reference values plus the exhaustive cross-checks). Each criterion also
/// fails if it overruns its time budget.
std::vector<CriterionResult> run_all();

/// Prints one PASS/FAIL line per criterion; returns true iff all passed.
bool run_all(std::ostream& out);

}  // namespace sandpile::selftest
