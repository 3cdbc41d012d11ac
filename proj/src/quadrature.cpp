#include "bistab/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace bistab {

double sphere_volume(int dim, double radius) {
    if (dim < 1) throw std::invalid_argument("sphere_volume: dim must be >= 1");
    const double half = 0.5 * (dim + 1);
    return 2.0 * std::pow(std::numbers::pi, half) / std::tgamma(half) * std::pow(radius, dim);
}

TorusIntegrandConfig::TorusIntegrandConfig(int p_, int q_, int factor_)
    : p(p_), q(q_), factor(factor_) {
    if (p < 1 || q <= p)
        throw std::invalid_argument("TorusIntegrandConfig: requires 1 <= p < q");
    if (factor != 1 && factor != 2)
        throw std::invalid_argument("TorusIntegrandConfig: factor must be 1 or 2");
}

namespace {

constexpr std::uint64_t kChunk = 8192;

struct ChunkSums {
    double sum = 0.0;
    double sum_sq = 0.0;
};

ChunkSums torus_chunk(const TorusIntegrandConfig& config, const ProductSampler& sampler,
                      std::uint64_t begin, std::uint64_t end) {
    const int dim_sel = config.factor == 1 ? config.p : config.q;
    const double lam = -2.0 * dim_sel;
    const double d2 = static_cast<double>(config.q - config.p) * (config.q - config.p);
    ChunkSums sums;
    for (std::uint64_t i = begin; i < end; ++i) {
        const SamplePoint point = sampler.at(i);
        const double f = config.factor == 1 ? point.x[0] : point.y[0];
        const double f2 = f * f;
        const double grad_sq = 1.0 - 2.0 * f2;  // r^2 = 1/2
        const double g = (lam * lam) * f2 + 4.0 * grad_sq - 4.0 * d2 * f2;
        sums.sum += g;
        sums.sum_sq += g * g;
    }
    return sums;
}

}  // namespace

McAccumulation accumulate_torus_integrand(const TorusIntegrandConfig& config,
                                          std::uint64_t samples, std::uint64_t seed,
                                          ExecutionPolicy policy) {
    if (samples == 0) throw std::invalid_argument("accumulate_torus_integrand: samples >= 1");
    const Rational half(1, 2);
    const ProductSampler sampler(SphereFactor(config.p, half), SphereFactor(config.q, half),
                                 seed);

    const std::uint64_t chunks = (samples + kChunk - 1) / kChunk;
    std::vector<ChunkSums> partials(chunks);

    const long n_chunks = static_cast<long>(chunks);
    if (policy == ExecutionPolicy::Parallel) {
#pragma omp parallel for schedule(dynamic)
        for (long c = 0; c < n_chunks; ++c) {
            const std::uint64_t begin = static_cast<std::uint64_t>(c) * kChunk;
            const std::uint64_t end = std::min(begin + kChunk, samples);
            partials[c] = torus_chunk(config, sampler, begin, end);
        }
    } else {
        for (long c = 0; c < n_chunks; ++c) {
            const std::uint64_t begin = static_cast<std::uint64_t>(c) * kChunk;
            const std::uint64_t end = std::min(begin + kChunk, samples);
            partials[c] = torus_chunk(config, sampler, begin, end);
        }
    }

    McAccumulation total;
    total.count = samples;
    for (const ChunkSums& part : partials) {  // fixed order, thread-count independent
        total.sum += part.sum;
        total.sum_sq += part.sum_sq;
    }
    return total;
}

QuadratureCheck verify_torus_form(int p, int q, int factor, std::uint64_t samples,
                                  std::uint64_t seed, double max_relative_stderr,
                                  ExecutionPolicy policy) {
    const TorusIntegrandConfig config(p, q, factor);
    const McAccumulation acc = accumulate_torus_integrand(config, samples, seed, policy);

    const double r = 1.0 / std::sqrt(2.0);
    const double volume = sphere_volume(p, r) * sphere_volume(q, r);
    const double n = static_cast<double>(acc.count);
    const double mean = acc.sum / n;
    const double var = std::max(0.0, (acc.sum_sq / n - mean * mean) * (n / (n - 1.0)));

    const int dim_sel = factor == 1 ? p : q;
    const StabilityForm form = stability_form(HypersurfaceModel(BiharmonicTorus(p, q)));
    const Rational lambda(-2L * dim_sel);
    const double form_value = evaluate_form(form, lambda).to_double();
    const double f_sq_integral = volume * 0.5 / (dim_sel + 1);  // Vol * r^2/(dim+1)

    QuadratureCheck check;
    check.samples = acc.count;
    check.analytic = form_value * f_sq_integral;
    check.estimate = volume * mean;
    check.std_error = volume * std::sqrt(var / n);
    const double scale = std::max(std::abs(check.analytic), 1e-12);
    check.converged = check.std_error / scale <= max_relative_stderr;
    return check;
}

}  // namespace bistab
