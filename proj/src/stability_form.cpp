#include "bistab/stability_form.hpp"

#include <optional>

namespace bistab {

StabilityForm::StabilityForm(Rational a2_, Rational a1_, Rational a0_, std::string note)
    : a2(std::move(a2_)), a1(std::move(a1_)), a0(std::move(a0_)),
      hypothesis_note(std::move(note)) {
    const bool quadratic = a2.sign() > 0;
    const bool linear = a2.is_zero() && a1.sign() < 0;
    if (!quadratic && !linear)
        throw std::invalid_argument("StabilityForm: requires a2 > 0, or a2 = 0 and a1 < 0");
}

bool is_biharmonic(const SpaceFormCMC& model) {
    if (model.mean_curvature.is_zero()) return true;
    return model.norm_a_squared == model.c * Rational(model.m);
}

StabilityForm stability_form(const HypersurfaceModel& model) {
    struct Visitor {
        StabilityForm operator()(const BiharmonicTorus& t) const {
            const long d = t.q - t.p;
            return StabilityForm(1, -4, Rational(-4 * d * d),
                                 "|A|^2 = m, grad H = 0, |A(grad f)|^2 = |grad f|^2 "
                                 "(principal curvatures -1 and +1)");
        }
        StabilityForm operator()(const BiharmonicSmallSphere& s) const {
            const long m = s.m;
            return StabilityForm(1, -4, Rational(-4 * m * m),
                                 "|A|^2 = m, grad H = 0, A(grad f) = -grad f "
                                 "(totally umbilical, principal curvature -1)");
        }
        StabilityForm operator()(const MinimalEquator& e) const {
            // area-functional Jacobi form per unit L^2: -lambda - (|A|^2 + m)
            return StabilityForm(0, -1, Rational(-e.m),
                                 "minimal: Jacobi form -f(Delta f + (|A|^2 + m) f), |A|^2 = 0");
        }
        StabilityForm operator()(const MinimalCliffordTorus& t) const {
            return StabilityForm(0, -1, Rational(-2 * t.m()),
                                 "minimal: Jacobi form -f(Delta f + (|A|^2 + m) f), |A|^2 = m");
        }
        StabilityForm operator()(const SpaceFormCMC&) const {
            throw std::invalid_argument(
                "stability_form: no spectral reduction for generic space-form CMC data");
        }
    };
    return std::visit(Visitor{}, model);
}

Rational evaluate_form(const StabilityForm& form, const Rational& lambda) {
    if (lambda.sign() > 0)
        throw std::invalid_argument("evaluate_form: lambda must be <= 0");
    return (form.a2 * lambda + form.a1) * lambda + form.a0;
}

namespace {

// Recover a unit-sphere biharmonic family from (m, H, |A|^2), if any.
std::optional<HypersurfaceModel> match_unit_sphere_family(const SpaceFormCMC& d) {
    if (d.norm_a_squared != Rational(d.m)) return std::nullopt;
    Rational abs_h = d.mean_curvature;
    if (abs_h.sign() < 0) abs_h = -abs_h;
    if (abs_h == Rational(1)) return HypersurfaceModel(BiharmonicSmallSphere(d.m));
    // torus: |H| = (q-p)/m with p+q = m, 1 <= p < q
    const Rational dm = abs_h * Rational(d.m);
    if (!dm.is_integer()) return std::nullopt;
    const BigInt diff = dm.numerator();
    if (diff < 1 || diff >= d.m || (d.m - diff) % 2 != 0) return std::nullopt;
    const int p = static_cast<int>(BigInt((d.m - diff) / 2).get_si());
    return HypersurfaceModel(BiharmonicTorus(p, d.m - p));
}

}  // namespace

StabilityCertificate stability_certificate(const SpaceFormCMC& model) {
    StabilityCertificate cert;
    cert.term_breakdown.push_back(
        {"[f (|A|^2 - c m) - Delta f]^2", TermSign::Nonnegative});
    cert.term_breakdown.push_back(
        {"|m f grad H + 2 A(grad f)|^2", TermSign::Nonnegative});

    const bool third_vanishes = model.c.is_zero() || model.mean_curvature.is_zero();
    TermSign third = TermSign::Nonpositive;
    if (third_vanishes)
        third = TermSign::Zero;
    else if (model.c.sign() < 0)
        third = TermSign::Nonnegative;
    cert.term_breakdown.push_back({"-4 c m^2 H^2 f^2", third});

    if (third != TermSign::Nonpositive) {
        cert.verdict = StabilityVerdict::StableAllVariations;
    } else if (model.c == Rational(1) && match_unit_sphere_family(model).has_value()) {
        cert.verdict = StabilityVerdict::ReducesToSpectralForm;
    } else {
        cert.verdict = StabilityVerdict::Indeterminate;
    }
    return cert;
}

std::string to_string(StabilityVerdict verdict) {
    switch (verdict) {
        case StabilityVerdict::StableAllVariations: return "StableAllVariations";
        case StabilityVerdict::ReducesToSpectralForm: return "ReducesToSpectralForm";
        case StabilityVerdict::Indeterminate: return "Indeterminate";
    }
    return "Indeterminate";
}

std::string to_string(TermSign sign) {
    switch (sign) {
        case TermSign::Nonnegative: return "nonnegative";
        case TermSign::Zero: return "zero";
        case TermSign::Nonpositive: return "nonpositive";
    }
    return "nonpositive";
}

}  // namespace bistab
