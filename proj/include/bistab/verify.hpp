#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "bistab/index.hpp"

namespace bistab {

struct CheckResult {
    std::string name;
    bool pass = false;
    nlohmann::json details;
};

struct VerifyOptions {
    std::uint64_t samples = 1'000'000;
    std::uint64_t seed = 42;
    double dt = 1e-3;
    int n = 512;
    double tolerance = 0.01;
};

// Exact invariants of the spectrum module: multiplicity sum identity,
// product convolution against a brute-force merge, cutoff-prefix stability,
// eigenvalue monotonicity.
std::vector<CheckResult> verify_spectrum();

// Exact invariants of the forms and index machinery: the closed-form sweep
// for p+q <= 200, threshold sharpness, the minimal-family indices and
// nullities, cutoff safety, biharmonicity round-trips, and the space-form
// stability certificate on randomized nonpositive-curvature data.
std::vector<CheckResult> verify_forms(ExecutionPolicy policy = ExecutionPolicy::Parallel);

// Monte-Carlo quadrature of the second-variation integrand against the exact
// eigenspace values, plus the 1/sqrt(N) error-scaling contract.
std::vector<CheckResult> verify_quadrature(const VerifyOptions& options,
                                           ExecutionPolicy policy = ExecutionPolicy::Parallel);

// Finite-difference second variation of the bienergy for the circle against
// the spectral form, criticality of the circle, and the constant-shift
// expansion property.
std::vector<CheckResult> verify_variation(const VerifyOptions& options);

bool all_pass(const std::vector<CheckResult>& checks);

}  // namespace bistab
