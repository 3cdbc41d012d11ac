#include "bistab/index.hpp"

namespace bistab {

Rational negative_region_cutoff(const StabilityForm& form) {
    if (form.a2.sign() > 0) {
        // smaller root (a1 - sqrt(D))/(2 a2), D = a1^2 - 4 a2 a0 > 0 since a0 < 0
        const Rational discriminant = form.a1 * form.a1 - Rational(4) * form.a2 * form.a0;
        const Rational root_bound = (form.a1 - sqrt_upper_bound(discriminant)) / (Rational(2) * form.a2);
        return root_bound - Rational(1);
    }
    // linear: a1 < 0, root at -a0/a1
    return (-form.a0 / form.a1) - Rational(1);
}

namespace {

Spectrum model_spectrum(const HypersurfaceModel& model, const Rational& cutoff) {
    struct Visitor {
        const Rational& cutoff;
        Spectrum operator()(const BiharmonicTorus& t) const {
            const Rational half(1, 2);
            return product_spectrum(SphereFactor(t.p, half), SphereFactor(t.q, half), cutoff);
        }
        Spectrum operator()(const BiharmonicSmallSphere& s) const {
            return sphere_spectrum(SphereFactor(s.m, Rational(1, 2)), cutoff);
        }
        Spectrum operator()(const MinimalEquator& e) const {
            return sphere_spectrum(SphereFactor(e.m, Rational(1)), cutoff);
        }
        Spectrum operator()(const MinimalCliffordTorus& t) const {
            const int m = t.m();
            return product_spectrum(SphereFactor(t.p, Rational(t.p, m)),
                                    SphereFactor(t.q, Rational(t.q, m)), cutoff);
        }
        Spectrum operator()(const SpaceFormCMC&) const {
            throw std::invalid_argument("compute_index: generic space-form CMC data "
                                        "has no enumerable spectrum");
        }
    };
    return std::visit(Visitor{cutoff}, model);
}

std::optional<BigInt> model_closed_form(const HypersurfaceModel& model) {
    struct Visitor {
        std::optional<BigInt> operator()(const BiharmonicTorus& t) const {
            return closed_form_index(t.p, t.q);
        }
        std::optional<BigInt> operator()(const BiharmonicSmallSphere&) const {
            return BigInt(1);
        }
        std::optional<BigInt> operator()(const MinimalEquator&) const { return BigInt(1); }
        std::optional<BigInt> operator()(const MinimalCliffordTorus& t) const {
            return BigInt(t.m() + 3);
        }
        std::optional<BigInt> operator()(const SpaceFormCMC&) const { return std::nullopt; }
    };
    return std::visit(Visitor{}, model);
}

}  // namespace

IndexReport compute_index(const HypersurfaceModel& model) {
    const StabilityForm form = stability_form(model);
    IndexReport report;
    report.cutoff_used = negative_region_cutoff(form);

    const Spectrum spectrum = model_spectrum(model, report.cutoff_used);
    report.index = 0;
    for (const EigenLevel& level : spectrum.levels()) {
        Rational value = evaluate_form(form, level.eigenvalue);
        const int sign = value.sign();
        if (sign < 0) {
            report.index += level.multiplicity;
            report.contributing.emplace_back(level, std::move(value));
        } else if (sign == 0) {
            report.nullity_levels.push_back(level);
        }
    }

    report.closed_form_index = model_closed_form(model);
    report.agreement =
        report.closed_form_index.has_value() && *report.closed_form_index == report.index;
    return report;
}

BigInt closed_form_index(int p, int q) {
    if (p < 1 || q <= p)
        throw std::invalid_argument("closed_form_index: requires 1 <= p < q");
    return q <= 2 * p ? BigInt(1) : BigInt(p) + 2;
}

std::optional<HypersurfaceModel> inverse_index(int k) {
    if (k < 1) throw std::invalid_argument("inverse_index: requires k >= 1");
    if (k == 1) return HypersurfaceModel(BiharmonicSmallSphere(1));
    if (k == 2) return std::nullopt;
    return HypersurfaceModel(BiharmonicTorus(k - 2, 2 * k - 3));
}

std::vector<std::pair<int, int>> torus_index_disagreements(int max_sum, ExecutionPolicy policy) {
    std::vector<std::pair<int, int>> pairs;
    for (int p = 1; 2 * p < max_sum; ++p)
        for (int q = p + 1; p + q <= max_sum; ++q) pairs.emplace_back(p, q);

    std::vector<unsigned char> agrees(pairs.size(), 0);
    const long n = static_cast<long>(pairs.size());
    if (policy == ExecutionPolicy::Parallel) {
#pragma omp parallel for schedule(dynamic, 16)
        for (long i = 0; i < n; ++i) {
            const IndexReport r = compute_index(BiharmonicTorus(pairs[i].first, pairs[i].second));
            agrees[i] = r.agreement ? 1 : 0;
        }
    } else {
        for (long i = 0; i < n; ++i) {
            const IndexReport r = compute_index(BiharmonicTorus(pairs[i].first, pairs[i].second));
            agrees[i] = r.agreement ? 1 : 0;
        }
    }

    std::vector<std::pair<int, int>> failures;
    for (long i = 0; i < n; ++i)
        if (!agrees[i]) failures.push_back(pairs[i]);
    return failures;
}

}  // namespace bistab
