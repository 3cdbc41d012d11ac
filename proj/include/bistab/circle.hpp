#pragma once

#include <array>
#include <vector>

namespace bistab {

// Circumference of the reference circle S^1(1/sqrt2).
double reference_circle_length();

// Closed curve on the unit 2-sphere sampled at the n equispaced nodes
// s_i = i * sqrt2*pi / n of the reference circle. n must be a power of two
// and every point unit length to 1e-12.
class DiscreteCircleMap {
public:
    explicit DiscreteCircleMap(std::vector<std::array<double, 3>> points);

    int nodes() const { return static_cast<int>(points_.size()); }
    double mesh_parameter() const;  // sqrt2*pi / n
    const std::vector<std::array<double, 3>>& points() const { return points_; }

private:
    std::vector<std::array<double, 3>> points_;
};

// Parallel circle at the given colatitude, traversed with angular speed
// sqrt2 so the reference circle wraps it exactly once.
DiscreteCircleMap parallel_circle(int n, double colatitude);

// Bienergy 1/2 * sum |tau_i|^2 * ds over the FIXED reference measure, where
// tau_i = phi''_i + |phi'_i|^2 phi_i with spectral (trigonometric) derivatives.
// The domain metric never varies with the curve; this is the bienergy of maps,
// under which the colatitude-pi/4 circle is critical. Rejects n < 16.
double bienergy(const DiscreteCircleMap& curve);

// Trigonometric polynomial on the reference circle:
// f(s) = constant + sum_k a_k cos(sqrt2 k s) + b_k sin(sqrt2 k s),
// an eigenfunction combination with eigenvalues -2k^2.
struct CircleFunction {
    double constant = 0.0;
    std::vector<std::array<double, 2>> modes;  // {a_k, b_k}, k = 1..K

    double operator()(double s) const;
    int max_degree() const { return static_cast<int>(modes.size()); }
};

// Geodesic normal flow of the biharmonic circle (colatitude pi/4):
// phi_t(s) = cos(t f(s)) x(s) + sin(t f(s)) xi(s), xi the unit normal in S^2.
DiscreteCircleMap normal_flow(const CircleFunction& f, double t, int n);

// Spectral value of the second-variation form at m = 1:
// integral of (Delta f)^2 - 4 f Delta f - 4 f^2 over the reference circle.
double analytic_circle_q(const CircleFunction& f);

struct VariationResult {
    double second_derivative_estimate = 0.0;
    double analytic_q = 0.0;
    double relative_error = 0.0;
    double first_difference = 0.0;  // (E(dt) - E(-dt)) / (2 dt); ~0 at a critical point
    double step_t = 0.0;
    int nodes = 0;
    bool converged = false;
};

// Central second difference of the bienergy along the normal flow against the
// spectral form value. dt must lie in [1e-4, 1e-2] and f must be band-limited
// below n/4. With richardson, combines steps dt and dt/2 to cancel the O(dt^2)
// term of the plain estimate.
VariationResult second_variation_fd(const CircleFunction& f, int n, double dt,
                                    double tolerance = 0.01, bool richardson = false);

}  // namespace bistab
