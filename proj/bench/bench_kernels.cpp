// Timing comparison of the serial reference kernels against the OpenMP ones.
// Both paths must produce identical results; the unit tests assert that, this
// target only reports throughput.

#include <chrono>
#include <cstdint>
#include <iostream>

#include <omp.h>

#include "bistab/index.hpp"
#include "bistab/quadrature.hpp"

namespace {

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

int main() {
    using bistab::ExecutionPolicy;
    std::cout << "threads: " << omp_get_max_threads() << "\n\n";

    {
        const bistab::TorusIntegrandConfig config(2, 3, 1);
        const std::uint64_t samples = 4'000'000;
        auto t0 = std::chrono::steady_clock::now();
        const auto serial =
            accumulate_torus_integrand(config, samples, 42, ExecutionPolicy::Serial);
        const double serial_s = seconds_since(t0);
        t0 = std::chrono::steady_clock::now();
        const auto parallel =
            accumulate_torus_integrand(config, samples, 42, ExecutionPolicy::Parallel);
        const double parallel_s = seconds_since(t0);
        std::cout << "monte-carlo integrand, " << samples << " samples\n";
        std::cout << "  serial:   " << serial_s << " s\n";
        std::cout << "  openmp:   " << parallel_s << " s  (speedup " << serial_s / parallel_s
                  << "x)\n";
        std::cout << "  identical: " << (serial.sum == parallel.sum ? "yes" : "NO") << "\n\n";
    }

    {
        const int max_sum = 160;
        auto t0 = std::chrono::steady_clock::now();
        const auto serial = bistab::torus_index_disagreements(max_sum, ExecutionPolicy::Serial);
        const double serial_s = seconds_since(t0);
        t0 = std::chrono::steady_clock::now();
        const auto parallel =
            bistab::torus_index_disagreements(max_sum, ExecutionPolicy::Parallel);
        const double parallel_s = seconds_since(t0);
        std::cout << "torus index sweep, p+q <= " << max_sum << "\n";
        std::cout << "  serial:   " << serial_s << " s\n";
        std::cout << "  openmp:   " << parallel_s << " s  (speedup " << serial_s / parallel_s
                  << "x)\n";
        std::cout << "  identical: " << (serial == parallel ? "yes" : "NO") << "\n";
    }

    return 0;
}
