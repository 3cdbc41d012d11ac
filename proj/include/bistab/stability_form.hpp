#pragma once

#include <string>
#include <vector>

#include "bistab/hypersurface.hpp"
#include "bistab/rational.hpp"

namespace bistab {

// Second-variation value per unit L^2 norm on a Laplacian eigenspace:
// lambda -> a2*lambda^2 + a1*lambda + a0. Quadratic (a2 > 0) for the proper
// biharmonic families, linear (a2 = 0, a1 < 0) for the minimal ones; both
// guarantee positivity as lambda -> -inf, so the negative region is finite.
struct StabilityForm {
    Rational a2;
    Rational a1;
    Rational a0;
    std::string hypothesis_note;

    StabilityForm(Rational a2_, Rational a1_, Rational a0_, std::string note);
    bool operator==(const StabilityForm&) const = default;
};

enum class StabilityVerdict { StableAllVariations, ReducesToSpectralForm, Indeterminate };

enum class TermSign { Nonnegative, Zero, Nonpositive };

struct CertificateTerm {
    std::string term;
    TermSign sign = TermSign::Nonpositive;

    bool operator==(const CertificateTerm&) const = default;
};

// Pointwise sign analysis of the three second-variation integrand terms for
// CMC data in a space form. StableAllVariations only when every term is
// pointwise nonnegative.
struct StabilityCertificate {
    StabilityVerdict verdict = StabilityVerdict::Indeterminate;
    std::vector<CertificateTerm> term_breakdown;

    bool operator==(const StabilityCertificate&) const = default;
};

// Constant-H, constant-|A|^2 data in a space form is biharmonic iff H = 0
// (minimal) or |A|^2 = m*c. The tangential equation holds automatically:
// grad H = 0 and the Ricci operator of a space form has no tangential part.
bool is_biharmonic(const SpaceFormCMC& model);

// Spectral restriction of the second-variation form for the four concrete
// sphere families. Rejects generic SpaceFormCMC data: without a pointwise
// identity for |A(grad f)|^2 there is no single-variable reduction.
StabilityForm stability_form(const HypersurfaceModel& model);

Rational evaluate_form(const StabilityForm& form, const Rational& lambda);

StabilityCertificate stability_certificate(const SpaceFormCMC& model);

std::string to_string(StabilityVerdict verdict);
std::string to_string(TermSign sign);

}  // namespace bistab
