#pragma once

#include <cstdint>

#include "bistab/index.hpp"
#include "bistab/sampling.hpp"

namespace bistab {

// Surface volume of S^dim(radius): 2 pi^{(dim+1)/2} / Gamma((dim+1)/2) * radius^dim.
double sphere_volume(int dim, double radius);

// Running sums of a Monte-Carlo integrand.
struct McAccumulation {
    double sum = 0.0;
    double sum_sq = 0.0;
    std::uint64_t count = 0;
};

// Pointwise second-variation integrand of the biharmonic torus for the
// coordinate eigenfunction on one factor: f = x_1 (factor = 1) or y_1
// (factor = 2), r^2 = 1/2 on both factors. Closed pointwise forms:
// Delta f = -2*dim*f, |grad f|^2 = 1 - 2 f^2, and the integrand is
// (Delta f)^2 + 4 |grad f|^2 - 4 (q-p)^2 f^2.
struct TorusIntegrandConfig {
    int p = 1;
    int q = 2;
    int factor = 1;  // 1 or 2

    TorusIntegrandConfig(int p_, int q_, int factor_);
};

// Chunked accumulation: per-chunk partial sums combined in chunk order, so the
// OpenMP path reproduces the serial reference bit for bit.
McAccumulation accumulate_torus_integrand(const TorusIntegrandConfig& config,
                                          std::uint64_t samples, std::uint64_t seed,
                                          ExecutionPolicy policy);

// Monte-Carlo check of one eigenspace value against the exact form.
struct QuadratureCheck {
    double analytic = 0.0;      // evaluate_form(lambda) * Vol1 * Vol2 * r^2/(dim+1)
    double estimate = 0.0;
    double std_error = 0.0;     // standard error of the estimate
    std::uint64_t samples = 0;
    bool converged = false;     // std_error / |analytic| within bound
};

QuadratureCheck verify_torus_form(int p, int q, int factor, std::uint64_t samples,
                                  std::uint64_t seed, double max_relative_stderr = 0.02,
                                  ExecutionPolicy policy = ExecutionPolicy::Parallel);

}  // namespace bistab
