#pragma once

#include <string>
#include <vector>

namespace gl2::selftest {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    std::string detail;  // filled on failure (first mismatch found)
};

/// Runs the full acceptance suite (exact checks, no tolerances) and returns
/// one result per criterion.
std::vector<CriterionResult> run_all();

/// Convenience: print one line per criterion to stdout, return true iff all
/// passed.
bool run_and_print();

}  // namespace gl2::selftest
