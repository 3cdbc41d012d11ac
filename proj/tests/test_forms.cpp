#include <doctest.h>

#include "bistab/stability_form.hpp"

using bistab::BiharmonicSmallSphere;
using bistab::BiharmonicTorus;
using bistab::HypersurfaceModel;
using bistab::MinimalCliffordTorus;
using bistab::MinimalEquator;
using bistab::Rational;
using bistab::SpaceFormCMC;
using bistab::StabilityForm;
using bistab::StabilityVerdict;
using bistab::TermSign;

TEST_CASE("torus form coefficients") {
    const StabilityForm form = bistab::stability_form(HypersurfaceModel(BiharmonicTorus(1, 2)));
    CHECK(form.a2 == Rational(1));
    CHECK(form.a1 == Rational(-4));
    CHECK(form.a0 == Rational(-4));
    for (int p = 1; p <= 7; ++p)
        for (int q = p + 1; q <= 10; ++q) {
            const long d = q - p;
            const StabilityForm f = bistab::stability_form(HypersurfaceModel(BiharmonicTorus(p, q)));
            CHECK(f.a0 == Rational(-4 * d * d));
        }
}

TEST_CASE("small-sphere form at its first nonzero eigenvalue gives 8m") {
    for (long m = 1; m <= 30; ++m) {
        const StabilityForm form =
            bistab::stability_form(HypersurfaceModel(BiharmonicSmallSphere(static_cast<int>(m))));
        CHECK(bistab::evaluate_form(form, Rational(-2 * m)) == Rational(8 * m));
    }
}

TEST_CASE("constants are destabilizing for both proper biharmonic families") {
    for (int p = 1; p <= 5; ++p)
        for (int q = p + 1; q <= 8; ++q) {
            const StabilityForm form =
                bistab::stability_form(HypersurfaceModel(BiharmonicTorus(p, q)));
            CHECK(bistab::evaluate_form(form, Rational(0)).sign() < 0);
            CHECK(bistab::evaluate_form(form, Rational(0)) ==
                  Rational(-4L * (q - p) * (q - p)));
        }
    for (int m = 1; m <= 8; ++m) {
        const StabilityForm form =
            bistab::stability_form(HypersurfaceModel(BiharmonicSmallSphere(m)));
        CHECK(bistab::evaluate_form(form, Rational(0)) == Rational(-4L * m * m));
    }
}

TEST_CASE("torus eigenspace values") {
    const StabilityForm f12 = bistab::stability_form(HypersurfaceModel(BiharmonicTorus(1, 2)));
    CHECK(bistab::evaluate_form(f12, Rational(-2)) == Rational(8));
    CHECK(bistab::evaluate_form(f12, Rational(-4)) == Rational(28));
    const StabilityForm f14 = bistab::stability_form(HypersurfaceModel(BiharmonicTorus(1, 4)));
    CHECK(bistab::evaluate_form(f14, Rational(-2)) == Rational(-24));
    // the two factor eigenspaces in closed form
    for (long p = 1; p <= 9; ++p)
        for (long q = p + 1; q <= 12; ++q) {
            const StabilityForm form = bistab::stability_form(
                HypersurfaceModel(BiharmonicTorus(static_cast<int>(p), static_cast<int>(q))));
            const long d2 = (q - p) * (q - p);
            CHECK(bistab::evaluate_form(form, Rational(-2 * p)) ==
                  Rational(4 * p * p + 8 * p - 4 * d2));
            CHECK(bistab::evaluate_form(form, Rational(-2 * q)) ==
                  Rational(4 * q * q + 8 * q - 4 * d2));
        }
}

TEST_CASE("minimal families carry the linear Jacobi form") {
    const StabilityForm equator = bistab::stability_form(HypersurfaceModel(MinimalEquator(4)));
    CHECK(equator.a2 == Rational(0));
    CHECK(equator.a1 == Rational(-1));
    CHECK(equator.a0 == Rational(-4));
    const StabilityForm clifford =
        bistab::stability_form(HypersurfaceModel(MinimalCliffordTorus(2, 3)));
    CHECK(clifford.a0 == Rational(-10));  // -(|A|^2 + m) = -2m
}

TEST_CASE("form validation and rejections") {
    CHECK_THROWS_AS(BiharmonicTorus(2, 2), std::invalid_argument);
    CHECK_THROWS_AS(BiharmonicTorus(3, 1), std::invalid_argument);
    CHECK_THROWS_AS(BiharmonicTorus(0, 2), std::invalid_argument);
    CHECK_THROWS_AS(BiharmonicSmallSphere(0), std::invalid_argument);
    CHECK_THROWS_AS(
        bistab::stability_form(HypersurfaceModel(SpaceFormCMC(Rational(1), 3, Rational(0), Rational(0)))),
        std::invalid_argument);
    CHECK_THROWS_AS(StabilityForm(Rational(0), Rational(0), Rational(-1), ""),
                    std::invalid_argument);
    CHECK_THROWS_AS(StabilityForm(Rational(-1), Rational(0), Rational(0), ""),
                    std::invalid_argument);
    const StabilityForm form = bistab::stability_form(HypersurfaceModel(BiharmonicTorus(1, 2)));
    CHECK_THROWS_AS(bistab::evaluate_form(form, Rational(1)), std::invalid_argument);
}

TEST_CASE("biharmonicity of constant-curvature data") {
    CHECK(bistab::is_biharmonic(SpaceFormCMC(Rational(1), 3, Rational(-1), Rational(3))));
    CHECK(bistab::is_biharmonic(SpaceFormCMC(Rational(1), 4, Rational(1, 2), Rational(4))));
    CHECK_FALSE(bistab::is_biharmonic(SpaceFormCMC(Rational(0), 2, Rational(1), Rational(2))));
    // minimal data is always biharmonic
    CHECK(bistab::is_biharmonic(SpaceFormCMC(Rational(-3), 5, Rational(0), Rational(7, 2))));

    for (int p = 1; p <= 4; ++p)
        for (int q = p + 1; q <= 7; ++q) {
            const SpaceFormCMC data =
                bistab::to_space_form_cmc(HypersurfaceModel(BiharmonicTorus(p, q)));
            CHECK(bistab::is_biharmonic(data));
            CHECK_FALSE(bistab::is_biharmonic(
                SpaceFormCMC(data.c, data.m, data.mean_curvature,
                             data.norm_a_squared + Rational(1, 9))));
        }
    for (int m = 1; m <= 7; ++m)
        CHECK(bistab::is_biharmonic(
            bistab::to_space_form_cmc(HypersurfaceModel(BiharmonicSmallSphere(m)))));
}

TEST_CASE("space-form data validation") {
    CHECK_THROWS_AS(SpaceFormCMC(Rational(1), 2, Rational(2), Rational(1)),
                    std::invalid_argument);  // |A|^2 < m H^2
    CHECK_THROWS_AS(SpaceFormCMC(Rational(1), 0, Rational(0), Rational(0)),
                    std::invalid_argument);
    CHECK_THROWS_AS(SpaceFormCMC(Rational(1), 2, Rational(0), Rational(-1)),
                    std::invalid_argument);
}

TEST_CASE("stability certificate in nonpositive curvature") {
    const auto check_stable = [](const SpaceFormCMC& model) {
        const auto cert = bistab::stability_certificate(model);
        CHECK(cert.verdict == StabilityVerdict::StableAllVariations);
        REQUIRE(cert.term_breakdown.size() == 3);
        for (const auto& term : cert.term_breakdown)
            CHECK(term.sign != TermSign::Nonpositive);
    };
    check_stable(SpaceFormCMC(Rational(0), 3, Rational(5, 2), Rational(20)));
    check_stable(SpaceFormCMC(Rational(-1), 2, Rational(1), Rational(2)));
    check_stable(SpaceFormCMC(Rational(-7, 3), 6, Rational(-2), Rational(25)));
}

TEST_CASE("stability certificate in the unit sphere") {
    // generic positive-curvature data gives no conclusion
    const auto generic = bistab::stability_certificate(
        SpaceFormCMC(Rational(1), 3, Rational(1, 7), Rational(5)));
    CHECK(generic.verdict == StabilityVerdict::Indeterminate);
    CHECK(generic.term_breakdown[2].sign == TermSign::Nonpositive);

    // recognized proper biharmonic families route to the spectral form
    const auto torus = bistab::stability_certificate(
        bistab::to_space_form_cmc(HypersurfaceModel(BiharmonicTorus(1, 3))));
    CHECK(torus.verdict == StabilityVerdict::ReducesToSpectralForm);
    const auto sphere = bistab::stability_certificate(
        bistab::to_space_form_cmc(HypersurfaceModel(BiharmonicSmallSphere(4))));
    CHECK(sphere.verdict == StabilityVerdict::ReducesToSpectralForm);

    // minimal data in the sphere: the curvature term vanishes pointwise
    const auto minimal = bistab::stability_certificate(
        bistab::to_space_form_cmc(HypersurfaceModel(MinimalCliffordTorus(2, 2))));
    CHECK(minimal.verdict == StabilityVerdict::StableAllVariations);
    CHECK(minimal.term_breakdown[2].sign == TermSign::Zero);
}

TEST_CASE("forms stay positive at sampled rationals beyond the negative region") {
    for (const HypersurfaceModel& model :
         {HypersurfaceModel(BiharmonicTorus(1, 2)), HypersurfaceModel(BiharmonicTorus(2, 9)),
          HypersurfaceModel(BiharmonicSmallSphere(6))}) {
        const StabilityForm form = bistab::stability_form(model);
        // rational just below the smaller root 2 - sqrt(4 - a0)
        const Rational bound =
            (form.a1 - bistab::sqrt_upper_bound(form.a1 * form.a1 - Rational(4) * form.a0)) /
                Rational(2) -
            Rational(1, 3);
        for (long j = 0; j < 25; ++j)
            CHECK(bistab::evaluate_form(form, bound - Rational(5 * j, 7)).sign() > 0);
    }
}
