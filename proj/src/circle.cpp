#include "bistab/circle.hpp"

#include <fftw3.h>

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace bistab {

namespace {

constexpr double kSqrt2 = std::numbers::sqrt2;

bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

// First and second s-derivatives of periodic samples over a circle of the
// given circumference, by Fourier multipliers. The Nyquist mode is zeroed in
// the odd-order derivative and kept in the even one.
void spectral_derivatives(const std::vector<double>& values, double circumference,
                          std::vector<double>& d1, std::vector<double>& d2) {
    const int n = static_cast<int>(values.size());
    const int nc = n / 2 + 1;
    const double omega0 = 2.0 * std::numbers::pi / circumference;

    std::vector<double> in(values);
    fftw_complex* spec = fftw_alloc_complex(nc);
    fftw_complex* work = fftw_alloc_complex(nc);
    fftw_plan forward = fftw_plan_dft_r2c_1d(n, in.data(), spec, FFTW_ESTIMATE);
    fftw_execute(forward);
    fftw_destroy_plan(forward);

    d1.resize(n);
    d2.resize(n);

    // d/ds: multiply mode k by i*omega0*k
    for (int k = 0; k < nc; ++k) {
        const double w = (k == n / 2) ? 0.0 : omega0 * k;
        work[k][0] = -w * spec[k][1];
        work[k][1] = w * spec[k][0];
    }
    fftw_plan inv1 = fftw_plan_dft_c2r_1d(n, work, d1.data(), FFTW_ESTIMATE);
    fftw_execute(inv1);
    fftw_destroy_plan(inv1);

    // d^2/ds^2: multiply mode k by -(omega0*k)^2
    for (int k = 0; k < nc; ++k) {
        const double w2 = (omega0 * k) * (omega0 * k);
        work[k][0] = -w2 * spec[k][0];
        work[k][1] = -w2 * spec[k][1];
    }
    fftw_plan inv2 = fftw_plan_dft_c2r_1d(n, work, d2.data(), FFTW_ESTIMATE);
    fftw_execute(inv2);
    fftw_destroy_plan(inv2);

    fftw_free(spec);
    fftw_free(work);

    const double scale = 1.0 / n;
    for (double& v : d1) v *= scale;
    for (double& v : d2) v *= scale;
}

}  // namespace

double reference_circle_length() { return kSqrt2 * std::numbers::pi; }

DiscreteCircleMap::DiscreteCircleMap(std::vector<std::array<double, 3>> points)
    : points_(std::move(points)) {
    const int n = static_cast<int>(points_.size());
    if (!is_power_of_two(n) || n < 4)
        throw std::invalid_argument("DiscreteCircleMap: node count must be a power of two >= 4");
    for (const auto& point : points_) {
        const double norm_sq =
            point[0] * point[0] + point[1] * point[1] + point[2] * point[2];
        if (std::abs(norm_sq - 1.0) > 2e-12)
            throw std::invalid_argument("DiscreteCircleMap: points must lie on the unit sphere");
    }
}

double DiscreteCircleMap::mesh_parameter() const {
    return reference_circle_length() / nodes();
}

DiscreteCircleMap parallel_circle(int n, double colatitude) {
    std::vector<std::array<double, 3>> points(static_cast<std::size_t>(n));
    const double sr = std::sin(colatitude);
    const double cr = std::cos(colatitude);
    for (int i = 0; i < n; ++i) {
        const double theta = 2.0 * std::numbers::pi * i / n;  // sqrt2 * s_i
        points[i] = {sr * std::cos(theta), sr * std::sin(theta), cr};
    }
    return DiscreteCircleMap(std::move(points));
}

double bienergy(const DiscreteCircleMap& curve) {
    const int n = curve.nodes();
    if (n < 16) throw std::invalid_argument("bienergy: requires n >= 16");

    std::vector<double> coord(n), d1, d2;
    std::vector<std::array<double, 3>> vel(n), acc(n);
    for (int c = 0; c < 3; ++c) {
        for (int i = 0; i < n; ++i) coord[i] = curve.points()[i][c];
        spectral_derivatives(coord, reference_circle_length(), d1, d2);
        for (int i = 0; i < n; ++i) {
            vel[i][c] = d1[i];
            acc[i][c] = d2[i];
        }
    }

    double sum = 0.0;
    for (int i = 0; i < n; ++i) {
        const double speed_sq =
            vel[i][0] * vel[i][0] + vel[i][1] * vel[i][1] + vel[i][2] * vel[i][2];
        double tau_sq = 0.0;
        for (int c = 0; c < 3; ++c) {
            const double tau_c = acc[i][c] + speed_sq * curve.points()[i][c];
            tau_sq += tau_c * tau_c;
        }
        sum += tau_sq;
    }
    return 0.5 * sum * curve.mesh_parameter();
}

double CircleFunction::operator()(double s) const {
    double value = constant;
    for (std::size_t k = 0; k < modes.size(); ++k) {
        const double arg = kSqrt2 * static_cast<double>(k + 1) * s;
        value += modes[k][0] * std::cos(arg) + modes[k][1] * std::sin(arg);
    }
    return value;
}

DiscreteCircleMap normal_flow(const CircleFunction& f, double t, int n) {
    const double c = 1.0 / kSqrt2;
    const double ds = reference_circle_length() / n;
    std::vector<std::array<double, 3>> points(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        const double theta = 2.0 * std::numbers::pi * i / n;
        const double ct = std::cos(theta);
        const double st = std::sin(theta);
        // base point and unit normal of the colatitude-pi/4 circle in S^2
        const std::array<double, 3> x = {c * ct, c * st, c};
        const std::array<double, 3> xi = {c * ct, c * st, -c};
        const double angle = t * f(ds * i);
        const double ca = std::cos(angle);
        const double sa = std::sin(angle);
        points[i] = {ca * x[0] + sa * xi[0], ca * x[1] + sa * xi[1], ca * x[2] + sa * xi[2]};
    }
    return DiscreteCircleMap(std::move(points));
}

double analytic_circle_q(const CircleFunction& f) {
    const double length = reference_circle_length();
    double q = -4.0 * f.constant * f.constant * length;
    for (std::size_t k = 0; k < f.modes.size(); ++k) {
        const double lam = -2.0 * static_cast<double>((k + 1) * (k + 1));
        const double coeff_sq =
            f.modes[k][0] * f.modes[k][0] + f.modes[k][1] * f.modes[k][1];
        q += (lam * lam - 4.0 * lam - 4.0) * coeff_sq * 0.5 * length;
    }
    return q;
}

namespace {

double central_second_difference(const CircleFunction& f, int n, double dt, double e0,
                                 double& first_difference) {
    const double ep = bienergy(normal_flow(f, dt, n));
    const double em = bienergy(normal_flow(f, -dt, n));
    first_difference = (ep - em) / (2.0 * dt);
    return (ep - 2.0 * e0 + em) / (dt * dt);
}

}  // namespace

VariationResult second_variation_fd(const CircleFunction& f, int n, double dt,
                                    double tolerance, bool richardson) {
    if (dt < 1e-4 || dt > 1e-2)
        throw std::invalid_argument("second_variation_fd: dt must lie in [1e-4, 1e-2]");
    if (4 * f.max_degree() >= n)
        throw std::invalid_argument("second_variation_fd: f must be band-limited below n/4");

    const double e0 = bienergy(normal_flow(f, 0.0, n));

    VariationResult result;
    result.step_t = dt;
    result.nodes = n;
    double first_full = 0.0;
    const double full = central_second_difference(f, n, dt, e0, first_full);
    if (richardson) {
        double first_half = 0.0;
        const double half = central_second_difference(f, n, dt / 2.0, e0, first_half);
        result.second_derivative_estimate = (4.0 * half - full) / 3.0;
        result.first_difference = first_half;
    } else {
        result.second_derivative_estimate = full;
        result.first_difference = first_full;
    }

    result.analytic_q = analytic_circle_q(f);
    result.relative_error = std::abs(result.second_derivative_estimate - result.analytic_q) /
                            std::max(std::abs(result.analytic_q), 1e-12);
    result.converged = result.relative_error <= tolerance;
    return result;
}

}  // namespace bistab
