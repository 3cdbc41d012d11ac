#include "bistab/sampling.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace bistab {

namespace {

constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

inline std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace

SampleRng::SampleRng(std::uint64_t seed, std::uint64_t sample_index)
    : base_(mix64(seed ^ 0x6a09e667f3bcc909ULL) + sample_index * kDrawsPerSample * kGolden) {}

std::uint64_t SampleRng::next_u64() {
    if (draw_ >= kDrawsPerSample)
        throw std::runtime_error("SampleRng: per-sample draw budget exhausted");
    return mix64(base_ + (draw_++) * kGolden);
}

double SampleRng::next_unit() {
    // (0, 1]: keeps log() finite in Box-Muller
    return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
}

double SampleRng::next_normal() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    const double u1 = next_unit();
    const double u2 = next_unit();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(a);
    has_spare_ = true;
    return r * std::cos(a);
}

void sphere_point(SampleRng& rng, int dim, double radius, std::vector<double>& out) {
    out.resize(static_cast<std::size_t>(dim) + 1);
    for (;;) {
        double norm_sq = 0.0;
        for (double& c : out) {
            c = rng.next_normal();
            norm_sq += c * c;
        }
        if (norm_sq > 1e-280) {
            const double scale = radius / std::sqrt(norm_sq);
            for (double& c : out) c *= scale;
            return;
        }
        // probability-zero degenerate draw; take fresh values from the stream
    }
}

ProductSampler::ProductSampler(SphereFactor f1, SphereFactor f2, std::uint64_t seed)
    : dim1_(f1.dim), dim2_(f2.dim),
      radius1_(std::sqrt(f1.radius_squared.to_double())),
      radius2_(std::sqrt(f2.radius_squared.to_double())), seed_(seed) {
    if (dim1_ + dim2_ + 2 > 500)
        throw std::invalid_argument("ProductSampler: total ambient dimension too large "
                                    "for the per-sample draw budget");
}

SamplePoint ProductSampler::at(std::uint64_t index) const {
    SampleRng rng(seed_, index);
    SamplePoint point;
    sphere_point(rng, dim1_, radius1_, point.x);
    sphere_point(rng, dim2_, radius2_, point.y);
    return point;
}

}  // namespace bistab
