#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qsl {

struct InvariantResult {
    std::string group;
    bool passed = true;
    std::size_t cases = 0;
    // Inputs and values of the first failing case.
    std::string counterexample;
};

// Runs the built-in invariant groups with fixed seeds.
std::vector<InvariantResult> run_invariant_suite();

// Prints one PASS/FAIL line per group; returns true iff all pass.
bool print_invariant_suite(const std::vector<InvariantResult>& results, std::ostream& out);

}  // namespace qsl
