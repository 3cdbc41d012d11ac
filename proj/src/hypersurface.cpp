#include "bistab/hypersurface.hpp"

namespace bistab {

BiharmonicTorus::BiharmonicTorus(int p_, int q_) : p(p_), q(q_) {
    if (p < 1 || q <= p)
        throw std::invalid_argument("BiharmonicTorus: requires 1 <= p < q");
}

BiharmonicSmallSphere::BiharmonicSmallSphere(int m_) : m(m_) {
    if (m < 1) throw std::invalid_argument("BiharmonicSmallSphere: requires m >= 1");
}

MinimalEquator::MinimalEquator(int m_) : m(m_) {
    if (m < 1) throw std::invalid_argument("MinimalEquator: requires m >= 1");
}

MinimalCliffordTorus::MinimalCliffordTorus(int p_, int q_) : p(p_), q(q_) {
    if (p < 1 || q < p)
        throw std::invalid_argument("MinimalCliffordTorus: requires 1 <= p <= q");
}

SpaceFormCMC::SpaceFormCMC(Rational c_, int m_, Rational mean_curvature_, Rational norm_a_squared_)
    : c(std::move(c_)), m(m_), mean_curvature(std::move(mean_curvature_)),
      norm_a_squared(std::move(norm_a_squared_)) {
    if (m < 1) throw std::invalid_argument("SpaceFormCMC: requires m >= 1");
    if (norm_a_squared.sign() < 0)
        throw std::invalid_argument("SpaceFormCMC: |A|^2 must be >= 0");
    if (norm_a_squared < Rational(m) * mean_curvature * mean_curvature)
        throw std::invalid_argument("SpaceFormCMC: |A|^2 >= m H^2 violated");
}

int hypersurface_dim(const HypersurfaceModel& model) {
    return std::visit(
        [](const auto& fam) -> int {
            using T = std::decay_t<decltype(fam)>;
            if constexpr (std::is_same_v<T, BiharmonicTorus> ||
                          std::is_same_v<T, MinimalCliffordTorus>)
                return fam.m();
            else
                return fam.m;
        },
        model);
}

SpaceFormCMC to_space_form_cmc(const HypersurfaceModel& model) {
    struct Visitor {
        SpaceFormCMC operator()(const BiharmonicTorus& t) const {
            const int m = t.m();
            // principal curvatures -1 (x p) and +1 (x q): H = (q-p)/m, |A|^2 = m
            return SpaceFormCMC(1, m, Rational(t.q - t.p, m), Rational(m));
        }
        SpaceFormCMC operator()(const BiharmonicSmallSphere& s) const {
            // totally umbilical with principal curvature -1
            return SpaceFormCMC(1, s.m, Rational(-1), Rational(s.m));
        }
        SpaceFormCMC operator()(const MinimalEquator& e) const {
            return SpaceFormCMC(1, e.m, Rational(0), Rational(0));
        }
        SpaceFormCMC operator()(const MinimalCliffordTorus& t) const {
            // curvatures sqrt(q/p) (x p) and -sqrt(p/q) (x q): H = 0, |A|^2 = q + p
            return SpaceFormCMC(1, t.m(), Rational(0), Rational(t.m()));
        }
        SpaceFormCMC operator()(const SpaceFormCMC& d) const { return d; }
    };
    return std::visit(Visitor{}, model);
}

std::string family_label(const HypersurfaceModel& model) {
    struct Visitor {
        std::string operator()(const BiharmonicTorus& t) const {
            return "S^" + std::to_string(t.p) + "(1/√2) x S^" + std::to_string(t.q) +
                   "(1/√2)";
        }
        std::string operator()(const BiharmonicSmallSphere& s) const {
            return "S^" + std::to_string(s.m) + "(1/√2)";
        }
        std::string operator()(const MinimalEquator& e) const {
            return "S^" + std::to_string(e.m) + "(1)";
        }
        std::string operator()(const MinimalCliffordTorus& t) const {
            const std::string m = std::to_string(t.m());
            return "S^" + std::to_string(t.p) + "(√(" + std::to_string(t.p) + "/" + m +
                   ")) x S^" + std::to_string(t.q) + "(√(" + std::to_string(t.q) + "/" + m +
                   "))";
        }
        std::string operator()(const SpaceFormCMC& d) const {
            return "CMC hypersurface (c=" + d.c.str() + ", m=" + std::to_string(d.m) +
                   ", H=" + d.mean_curvature.str() + ", |A|^2=" + d.norm_a_squared.str() + ")";
        }
    };
    return std::visit(Visitor{}, model);
}

}  // namespace bistab
