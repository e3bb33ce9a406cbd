#pragma once

#include <string>
#include <vector>

namespace vincyc {

/// Outcome of one verification suite. detail carries per-size progress lines
/// and, on failure, the first counterexample (permutation, pattern, witness
/// positions). Suites marked informational in their description never set
/// ok = false for the phenomena they merely record.
struct SuiteResult {
    std::string suite;
    bool ok = false;
    std::string detail;
};

/// The suites run_suite accepts, in canonical order.
const std::vector<std::string>& suite_names();

/// The size bound a suite runs at when the caller does not pick one.
int suite_default_max_n(const std::string& name);

/// Runs one suite up to max_n (0 picks the suite's default). Unknown names
/// throw std::invalid_argument.
SuiteResult run_suite(const std::string& name, int max_n = 0);

}  // namespace vincyc
