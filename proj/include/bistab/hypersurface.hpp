#pragma once

#include <string>
#include <variant>

#include "bistab/rational.hpp"

namespace bistab {

// The supported hypersurface families. The biharmonic families live in the
// unit sphere S^{m+1}; the minimal families are the classical comparison cases.

// S^p(1/sqrt2) x S^q(1/sqrt2) -> S^{p+q+1}, proper biharmonic; needs p < q
// (p = q would be minimal, and p < q fixes the orientation of H).
struct BiharmonicTorus {
    int p = 0;
    int q = 0;

    BiharmonicTorus(int p_, int q_);
    int m() const { return p + q; }
    bool operator==(const BiharmonicTorus&) const = default;
};

// S^m(1/sqrt2) -> S^{m+1}, the totally umbilical proper biharmonic hypersphere.
struct BiharmonicSmallSphere {
    int m = 0;

    explicit BiharmonicSmallSphere(int m_);
    bool operator==(const BiharmonicSmallSphere&) const = default;
};

// S^m(1) -> S^{m+1}, the totally geodesic equator.
struct MinimalEquator {
    int m = 0;

    explicit MinimalEquator(int m_);
    bool operator==(const MinimalEquator&) const = default;
};

// S^p(sqrt(p/m)) x S^q(sqrt(q/m)) -> S^{m+1}, m = p+q, minimal; p <= q canonical.
struct MinimalCliffordTorus {
    int p = 0;
    int q = 0;

    MinimalCliffordTorus(int p_, int q_);
    int m() const { return p + q; }
    bool operator==(const MinimalCliffordTorus&) const = default;
};

// Generic constant-mean-curvature hypersurface data in a space form of
// sectional curvature c. |A|^2 >= m H^2 by Cauchy-Schwarz on the shape operator.
struct SpaceFormCMC {
    Rational c;
    int m = 0;
    Rational mean_curvature;
    Rational norm_a_squared;

    SpaceFormCMC(Rational c_, int m_, Rational mean_curvature_, Rational norm_a_squared_);
    bool operator==(const SpaceFormCMC&) const = default;
};

using HypersurfaceModel = std::variant<BiharmonicTorus, BiharmonicSmallSphere,
                                       MinimalEquator, MinimalCliffordTorus, SpaceFormCMC>;

// Hypersurface dimension m; the ambient space form has dimension m+1.
int hypersurface_dim(const HypersurfaceModel& model);
inline int ambient_dim(const HypersurfaceModel& model) { return hypersurface_dim(model) + 1; }

// Constant-curvature data (c, m, H, |A|^2) of a concrete sphere family.
// Only H^2 ever enters the implemented formulas, so the stored sign of H
// follows the outward conventions H = (q-p)/m (torus) and H = -1 (small sphere).
SpaceFormCMC to_space_form_cmc(const HypersurfaceModel& model);

// Human rendering, e.g. "S^1(1/√2) x S^2(1/√2)".
std::string family_label(const HypersurfaceModel& model);

}  // namespace bistab
