#include "bistab/spectrum.hpp"

#include <map>
#include <utility>

namespace bistab {

SphereFactor::SphereFactor(int dim_, Rational r2) : dim(dim_), radius_squared(std::move(r2)) {
    if (dim < 1) throw std::invalid_argument("SphereFactor: dim must be >= 1");
    if (radius_squared.sign() <= 0)
        throw std::invalid_argument("SphereFactor: radius_squared must be > 0");
}

Spectrum::Spectrum(std::vector<EigenLevel> levels, Rational cutoff)
    : levels_(std::move(levels)), cutoff_(std::move(cutoff)) {
    if (cutoff_.sign() > 0) throw std::invalid_argument("Spectrum: cutoff must be <= 0");
    for (std::size_t i = 0; i < levels_.size(); ++i) {
        const EigenLevel& lv = levels_[i];
        if (lv.eigenvalue.sign() > 0)
            throw std::invalid_argument("Spectrum: eigenvalue must be <= 0");
        if (lv.multiplicity < 1)
            throw std::invalid_argument("Spectrum: multiplicity must be >= 1");
        if (!(lv.eigenvalue > cutoff_))
            throw std::invalid_argument("Spectrum: eigenvalue not above cutoff");
        if (i > 0 && !(lv.eigenvalue < levels_[i - 1].eigenvalue))
            throw std::invalid_argument("Spectrum: levels must be strictly decreasing");
    }
    if (!levels_.empty() && !(levels_.front().eigenvalue.is_zero() && levels_.front().multiplicity == 1))
        throw std::invalid_argument("Spectrum: must start at eigenvalue 0 with multiplicity 1");
}

Rational sphere_eigenvalue(int k, const SphereFactor& factor) {
    if (k < 0) throw std::invalid_argument("sphere_eigenvalue: k must be >= 0");
    const BigInt kk(k);
    return Rational(-(kk * (kk + factor.dim - 1))) / factor.radius_squared;
}

BigInt harmonic_multiplicity(int k, int dim) {
    if (k < 0) throw std::invalid_argument("harmonic_multiplicity: k must be >= 0");
    if (dim < 1) throw std::invalid_argument("harmonic_multiplicity: dim must be >= 1");
    if (k == 0) return 1;
    if (k == 1) return BigInt(dim) + 1;
    const unsigned long n = static_cast<unsigned long>(dim) + static_cast<unsigned long>(k);
    return binomial(n, k) - binomial(n - 2, k - 2);
}

Spectrum sphere_spectrum(const SphereFactor& factor, const Rational& cutoff) {
    if (cutoff.sign() > 0) throw std::invalid_argument("sphere_spectrum: cutoff must be <= 0");
    std::vector<EigenLevel> levels;
    for (int k = 0;; ++k) {
        Rational lam = sphere_eigenvalue(k, factor);
        if (!(lam > cutoff)) break;  // strictly decreasing in k, so done
        levels.push_back({std::move(lam), harmonic_multiplicity(k, factor.dim)});
    }
    return Spectrum(std::move(levels), cutoff);
}

Spectrum product_spectrum(const SphereFactor& f1, const SphereFactor& f2,
                          const Rational& cutoff) {
    if (cutoff.sign() > 0) throw std::invalid_argument("product_spectrum: cutoff must be <= 0");
    // Exact-keyed accumulation: equal sums from different (k, l) pairs merge.
    std::map<Rational, BigInt> acc;
    for (int k = 0;; ++k) {
        const Rational lam = sphere_eigenvalue(k, f1);
        if (!(lam > cutoff)) break;
        const BigInt mk = harmonic_multiplicity(k, f1.dim);
        for (int l = 0;; ++l) {
            Rational nu = lam + sphere_eigenvalue(l, f2);
            if (!(nu > cutoff)) break;
            acc[std::move(nu)] += mk * harmonic_multiplicity(l, f2.dim);
        }
    }
    std::vector<EigenLevel> levels;
    levels.reserve(acc.size());
    for (auto it = acc.rbegin(); it != acc.rend(); ++it)
        levels.push_back({it->first, it->second});
    return Spectrum(std::move(levels), cutoff);
}

}  // namespace bistab
