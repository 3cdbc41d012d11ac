#pragma once

#include <vector>

#include "bistab/rational.hpp"

namespace bistab {

// One round-sphere factor S^dim of radius r, stored through r^2 so that every
// eigenvalue -k(k+dim-1)/r^2 stays rational.
struct SphereFactor {
    int dim;
    Rational radius_squared;

    SphereFactor(int dim_, Rational r2);
    bool operator==(const SphereFactor&) const = default;
};

// Laplace-Beltrami eigenvalue (geometer sign: <= 0) with its multiplicity.
struct EigenLevel {
    Rational eigenvalue;
    BigInt multiplicity;

    bool operator==(const EigenLevel&) const = default;
};

// All eigenvalues strictly greater than `cutoff`, strictly decreasing,
// multiplicities merged. Nonempty iff cutoff < 0, and then starts at (0, 1).
class Spectrum {
public:
    Spectrum(std::vector<EigenLevel> levels, Rational cutoff);

    const std::vector<EigenLevel>& levels() const { return levels_; }
    const Rational& cutoff() const { return cutoff_; }

    bool operator==(const Spectrum&) const = default;

private:
    std::vector<EigenLevel> levels_;
    Rational cutoff_;
};

// -k(k+dim-1)/r^2; zero iff k = 0, strictly decreasing in k.
Rational sphere_eigenvalue(int k, const SphereFactor& factor);

// Dimension of the space of degree-k spherical harmonics on S^dim:
// C(dim+k, k) - C(dim+k-2, k-2), with 1 for k=0 and dim+1 for k=1.
BigInt harmonic_multiplicity(int k, int dim);

Spectrum sphere_spectrum(const SphereFactor& factor, const Rational& cutoff);

// Spectrum of S^p(r1) x S^q(r2): sums lambda+mu over factor levels, with
// multiplicity sum(m_lambda * m_mu) over all pairs producing the same value.
Spectrum product_spectrum(const SphereFactor& f1, const SphereFactor& f2,
                          const Rational& cutoff);

}  // namespace bistab
