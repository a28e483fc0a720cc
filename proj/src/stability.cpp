#include "swarmseek/stability.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>

namespace swarmseek {

namespace {

// Roots within this distance of the point z = 1 on the zero-gain extreme are
// the structural hold-position root and do not count against stability.
constexpr double kUnitRootBand = 1e-9;

std::array<std::complex<double>, 3> cubic_roots(const ThirdOrderCoeffs& c) {
    Eigen::Matrix3d companion;
    companion << -c.a1, -c.a2, -c.a3,  //
        1.0, 0.0, 0.0,                 //
        0.0, 1.0, 0.0;
    Eigen::EigenSolver<Eigen::Matrix3d> solver(companion, /*computeEigenvectors=*/false);
    const auto vals = solver.eigenvalues();
    return {vals(0), vals(1), vals(2)};
}

std::array<double, 3> sorted_magnitudes(const std::array<std::complex<double>, 3>& roots) {
    std::array<double, 3> mags{std::abs(roots[0]), std::abs(roots[1]), std::abs(roots[2])};
    std::sort(mags.begin(), mags.end(), std::greater<>());
    return mags;
}

bool strictly_inside(const std::array<std::complex<double>, 3>& roots, bool skip_unit_point) {
    for (const auto& z : roots) {
        if (skip_unit_point && std::abs(z - std::complex<double>(1.0, 0.0)) <= kUnitRootBand)
            continue;
        if (!(std::abs(z) < 1.0)) return false;
    }
    return true;
}

}  // namespace

ThirdOrderCoeffs coeffs_from_params(double w1, double w2, double r1, double r2, double T) {
    ThirdOrderCoeffs c;
    c.a1 = -1.0 - w1 - w2 + (r1 + r2) * T;
    c.a2 = w1 + w2 + w1 * w2;
    c.a3 = -w1 * w2;
    return c;
}

std::array<double, 3> root_magnitudes(const ThirdOrderCoeffs& c) {
    return sorted_magnitudes(cubic_roots(c));
}

const char* condition_name(Condition c) {
    switch (c) {
        case Condition::C13: return "C13";
        case Condition::C14: return "C14";
        case Condition::C15: return "C15";
        case Condition::C16: return "C16";
        case Condition::RootOracle: return "RootOracle";
    }
    return "?";
}

StabilityVerdict jury_check(double w1, double w2, double c1, double c2, double T) {
    if (!(c1 > 0.0) || !(c2 > 0.0)) throw std::invalid_argument("jury_check: c1, c2 must be > 0");
    if (!(T > 0.0)) throw std::invalid_argument("jury_check: T must be > 0");

    StabilityVerdict v;
    const double p = w1 * w2;
    const double s = w1 + w2;

    v.margins[0] = (2.0 / T) * (1.0 + s + p) - (c1 + c2);
    v.margins[1] = 1.0 - std::abs(p);
    v.margins[2] = std::abs(1.0 - p * p) - std::abs((1.0 - p) * s + p * (c1 + c2) * T);
    v.margins[3] = std::abs(1.0 + p) - std::abs(s);

    const Condition order[4] = {Condition::C13, Condition::C14, Condition::C15, Condition::C16};
    for (int i = 0; i < 4; ++i)
        if (!(v.margins[i] > 0.0)) v.failed.push_back(order[i]);
    const bool closed_form = v.failed.empty();

    const auto lower = cubic_roots(coeffs_from_params(w1, w2, 0.0, 0.0, T));
    const auto upper = cubic_roots(coeffs_from_params(w1, w2, c1, c2, T));
    v.lower_extreme_roots = sorted_magnitudes(lower);
    v.upper_extreme_roots = sorted_magnitudes(upper);
    v.oracle_stable =
        strictly_inside(lower, /*skip_unit_point=*/true) && strictly_inside(upper, false);

    if (v.oracle_stable != closed_form) v.failed.push_back(Condition::RootOracle);
    v.stable = v.failed.empty();
    return v;
}

double steady_state(double r1c, double r2c, double x_ib_ss, double x_gb_ss) {
    if (r1c + r2c == 0.0) throw std::invalid_argument("steady_state: r1c + r2c must be nonzero");
    if (x_ib_ss == x_gb_ss) return x_ib_ss;
    return (r1c * x_ib_ss + r2c * x_gb_ss) / (r1c + r2c);
}

std::vector<double> simulate_recurrence(double w1, double w2, double T,
                                        const std::function<RecurrenceInput(int)>& input,
                                        double x0, double x1, double x2, int steps) {
    if (steps < 0) throw std::invalid_argument("simulate_recurrence: steps must be >= 0");
    std::vector<double> x;
    x.reserve(static_cast<std::size_t>(steps) + 1);
    const double seeds[3] = {x0, x1, x2};
    for (int i = 0; i <= std::min(steps, 2); ++i) x.push_back(seeds[i]);
    for (int k = 2; k < steps; ++k) {
        const RecurrenceInput in = input(k);
        const double next = (1.0 + w1 + w2 - (in.r1 + in.r2) * T) * x[k] -
                            (w1 + w2 + w1 * w2) * x[k - 1] + w1 * w2 * x[k - 2] +
                            T * (in.r1 * in.x_ib + in.r2 * in.x_gb);
        x.push_back(next);
    }
    return x;
}

std::vector<double> simulate_recurrence(double w1, double w2, double T,
                                        const RecurrenceInput& constant_input, double x0,
                                        double x1, double x2, int steps) {
    return simulate_recurrence(
        w1, w2, T, [&](int) { return constant_input; }, x0, x1, x2, steps);
}

}  // namespace swarmseek
