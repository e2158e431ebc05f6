#pragma once

#include "qp/golden_tables.hpp"

#include <string>
#include <vector>

namespace qp {

// Outcome of one verification suite. `failures` holds counterexample
// descriptions (non-empty forces pass == false); `notes` holds informational
// observations that do not affect the verdict; `errata` is populated by the
// tables suite with printed-vs-recomputed discrepancies, which by design do
// not fail the suite.
struct SuiteResult {
    std::string suite;
    bool pass = true;
    std::vector<std::string> failures;
    std::vector<std::string> notes;
    std::vector<Erratum> errata;
};

const std::vector<std::string>& suite_names(); // bisnomial, quasi, rays, q, gf, tables

// runs one named suite at acceptance-grid scale; throws std::invalid_argument
// for an unknown name ("all" is not a suite here, see run_suites)
SuiteResult run_suite(const std::string& name);

// expands "all" into every suite, otherwise runs the single named suite
std::vector<SuiteResult> run_suites(const std::string& name);

} // namespace qp
