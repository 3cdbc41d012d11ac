#pragma once

#include <cstdint>
#include <vector>

#include "bistab/spectrum.hpp"

namespace bistab {

// Counter-based per-sample random stream: draw t of sample i reads the
// splitmix64 sequence at global counter i*kDrawsPerSample + t, so a sample's
// values depend only on (seed, i) and never on chunking or thread count.
class SampleRng {
public:
    static constexpr std::uint64_t kDrawsPerSample = 1024;

    SampleRng(std::uint64_t seed, std::uint64_t sample_index);

    std::uint64_t next_u64();
    double next_unit();    // uniform in (0, 1]
    double next_normal();  // standard normal, Box-Muller

private:
    std::uint64_t base_;
    std::uint64_t draw_ = 0;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

// One uniform sample on S^p(r1) x S^q(r2): |x| = r1, |y| = r2, weight 1.
struct SamplePoint {
    std::vector<double> x;
    std::vector<double> y;
    double weight = 1.0;
};

// Isotropic normalized-Gaussian point on S^dim(radius), written into `out`
// (dim+1 coordinates). Zero-norm draws are redrawn.
void sphere_point(SampleRng& rng, int dim, double radius, std::vector<double>& out);

// Reproducible uniform sampling on a product of round spheres. at(i) is a
// pure function of (seed, i).
class ProductSampler {
public:
    ProductSampler(SphereFactor f1, SphereFactor f2, std::uint64_t seed);

    SamplePoint at(std::uint64_t index) const;

    int dim1() const { return dim1_; }
    int dim2() const { return dim2_; }
    double radius1() const { return radius1_; }
    double radius2() const { return radius2_; }

private:
    int dim1_;
    int dim2_;
    double radius1_;
    double radius2_;
    std::uint64_t seed_;
};

}  // namespace bistab
