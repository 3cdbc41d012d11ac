#include <doctest.h>

#include <cmath>

#include "bistab/sampling.hpp"

using bistab::ProductSampler;
using bistab::Rational;
using bistab::SamplePoint;
using bistab::SphereFactor;

TEST_CASE("streams are deterministic and chunk-independent") {
    const ProductSampler a(SphereFactor(2, Rational(1)), SphereFactor(3, Rational(1, 2)), 99);
    const ProductSampler b(SphereFactor(2, Rational(1)), SphereFactor(3, Rational(1, 2)), 99);
    for (const std::uint64_t i : {0ULL, 1ULL, 17ULL, 4096ULL, 999'999ULL}) {
        const SamplePoint pa = a.at(i);
        const SamplePoint pb = b.at(i);
        CHECK(pa.x == pb.x);  // bit identical
        CHECK(pa.y == pb.y);
        CHECK(pa.weight == 1.0);
    }
    const ProductSampler c(SphereFactor(2, Rational(1)), SphereFactor(3, Rational(1, 2)), 100);
    CHECK(c.at(0).x != a.at(0).x);
}

TEST_CASE("samples land on the spheres") {
    const ProductSampler sampler(SphereFactor(4, Rational(9, 4)), SphereFactor(1, Rational(1, 2)),
                                 7);
    for (std::uint64_t i = 0; i < 200; ++i) {
        const SamplePoint point = sampler.at(i);
        REQUIRE(point.x.size() == 5);
        REQUIRE(point.y.size() == 2);
        double nx = 0.0, ny = 0.0;
        for (double v : point.x) nx += v * v;
        for (double v : point.y) ny += v * v;
        CHECK(std::abs(nx - 2.25) <= 1e-12 * 2.25);
        CHECK(std::abs(ny - 0.5) <= 1e-12 * 0.5);
    }
}

TEST_CASE("coordinate means vanish by symmetry (4 sigma)") {
    const std::uint64_t n = 1'000'000;
    const ProductSampler sampler(SphereFactor(2, Rational(1)), SphereFactor(1, Rational(1)), 42);
    double sums[3] = {0.0, 0.0, 0.0};
    for (std::uint64_t i = 0; i < n; ++i) {
        const SamplePoint point = sampler.at(i);
        for (int c = 0; c < 3; ++c) sums[c] += point.x[c];
    }
    // Var(x_c) = 1/3 on the unit 2-sphere
    const double sigma = std::sqrt(1.0 / 3.0 / static_cast<double>(n));
    for (double s : sums) CHECK(std::abs(s / static_cast<double>(n)) < 4.0 * sigma);
}

TEST_CASE("second moment of one coordinate is r^2/(p+1) (4 sigma)") {
    const int p = 3;
    const double r2 = 4.0;
    const std::uint64_t n = 400'000;
    const ProductSampler sampler(SphereFactor(p, Rational(4)), SphereFactor(1, Rational(1)), 5);
    double sum = 0.0, sum_sq = 0.0;
    for (std::uint64_t i = 0; i < n; ++i) {
        const double v = sampler.at(i).x[0];
        sum += v * v;
        sum_sq += v * v * v * v;
    }
    const double mean = sum / static_cast<double>(n);
    const double var = sum_sq / static_cast<double>(n) - mean * mean;
    const double sigma = std::sqrt(var / static_cast<double>(n));
    CHECK(std::abs(mean - r2 / (p + 1)) < 4.0 * sigma);
}

TEST_CASE("per-sample draw budget is enforced") {
    bistab::SampleRng rng(1, 0);
    for (int i = 0; i < 1024; ++i) rng.next_u64();
    CHECK_THROWS_AS(rng.next_u64(), std::runtime_error);
}
