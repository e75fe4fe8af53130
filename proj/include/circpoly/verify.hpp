#pragma once

// Named verification suites over one weight.  Each suite evaluates a family
// of identities at seeded sample points and reports per-identity worst
// residuals; a suite passes when every check meets its contract.  Checks are
// usually "residual < threshold"; a few are lower bounds (e.g. zero
// separation) or pure diagnostics (always-pass, value reported in the note).

#include <cstdint>
#include <string>
#include <vector>

#include "circpoly/weights.hpp"

namespace circpoly {

struct CheckResult {
    std::string name;
    double residual = 0.0;
    double threshold = 0.0;
    bool lower_bound = false;  // pass means residual > threshold
    bool pass = false;
    std::string note;
};

struct SuiteResult {
    std::string suite;
    std::string weight_name;
    std::vector<CheckResult> checks;
    bool pass = true;
};

struct RunParams {
    int n_max = 6;              // trigonometric order driven by the suite
    double tol = 1e-9;          // residual contract for algebraic identities
    std::size_t quad_cap = std::size_t{1} << 20;
    std::uint64_t seed = 12345; // sample-point generator seed
};

// Suites runnable individually; "all" concatenates them in this order.
const std::vector<std::string>& suite_names();

// Throws std::invalid_argument for an unknown suite name.
SuiteResult run_suite(const std::string& suite, const WeightSpec& weight,
                      const RunParams& params);

} // namespace circpoly
