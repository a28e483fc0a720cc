#pragma once

#include <array>
#include <functional>
#include <vector>

namespace swarmseek {

/// Coefficients of the characteristic polynomial of the third-order update,
/// H(z) = 1 + a1 z^-1 + a2 z^-2 + a3 z^-3, equivalently z^3 + a1 z^2 + a2 z + a3.
struct ThirdOrderCoeffs {
    double a1 = 0.0;
    double a2 = 0.0;
    double a3 = 0.0;
};

/// a1 = -1 - w1 - w2 + (r1 + r2) T,  a2 = w1 + w2 + w1 w2,  a3 = -w1 w2.
ThirdOrderCoeffs coeffs_from_params(double w1, double w2, double r1, double r2, double T);

/// Magnitudes of the three roots of z^3 + a1 z^2 + a2 z + a3, via companion
/// matrix eigenvalues, sorted descending.
std::array<double, 3> root_magnitudes(const ThirdOrderCoeffs& c);

enum class Condition { C13, C14, C15, C16, RootOracle };

const char* condition_name(Condition c);

/// Outcome of the closed-form stability test plus the independent root check.
/// stable <=> failed empty. The margins are (pass side) - (fail side): a
/// condition holds iff its margin is strictly positive.
struct StabilityVerdict {
    bool stable = false;
    std::vector<Condition> failed;
    std::array<double, 4> margins{};           // C13, C14, C15, C16
    std::array<double, 3> lower_extreme_roots{};  // |roots| of H(z, a1 at -1-w1-w2)
    std::array<double, 3> upper_extreme_roots{};  // |roots| of H(z, a1 at -1-w1-w2+T(c1+c2))
    bool oracle_stable = false;
};

/// Closed-form stability conditions on (w1, w2, c1, c2, T), strict
/// inequalities throughout:
///   C13: (2/T)(1 + w1 + w2 + w1 w2) > c1 + c2
///   C14: |w1 w2| < 1
///   C15: |(1 - w1 w2)(w1 + w2) + w1 w2 (c1 + c2) T| < |1 - (w1 w2)^2|
///   C16: |w1 + w2| < |1 + w1 w2|
/// Independently, the two extreme polynomials (random gains pinned at 0 and
/// at c1, c2) are handed to the root oracle. The zero-gain extreme always
/// carries a root at exactly z = 1 (the update has no input drive there and
/// holds position); the oracle skips roots within 1e-9 of that point and
/// requires every other root strictly inside the unit circle. RootOracle is
/// reported in `failed` only when the oracle disagrees with the closed form.
StabilityVerdict jury_check(double w1, double w2, double c1, double c2, double T);

/// Steady-state value of the recurrence under constant gains r1c, r2c:
/// (r1c x_ib + r2c x_gb) / (r1c + r2c). Exact (bitwise) when x_ib == x_gb.
/// Throws when r1c + r2c == 0.
double steady_state(double r1c, double r2c, double x_ib_ss, double x_gb_ss);

/// Per-step drive of the scalar recurrence: the gains and the best positions
/// seen at step k.
struct RecurrenceInput {
    double r1 = 0.0;
    double r2 = 0.0;
    double x_ib = 0.0;
    double x_gb = 0.0;
};

/// Iterates the combined scalar recurrence
///   x(k+1) = (1 + w1 + w2 - (r1 + r2) T) x(k) - (w1 + w2 + w1 w2) x(k-1)
///            + w1 w2 x(k-2) + T (r1 x_ib + r2 x_gb)
/// from seeds x(0)=x0, x(1)=x1, x(2)=x2 up to x(steps) inclusive and returns
/// the whole trajectory (size steps+1, truncated for steps < 2). input(k) is
/// queried for each computed step, k from 2 to steps-1. This is the scalar
/// oracle behind the third-order update's equivalence test.
std::vector<double> simulate_recurrence(double w1, double w2, double T,
                                        const std::function<RecurrenceInput(int)>& input,
                                        double x0, double x1, double x2, int steps);

/// Constant-input convenience overload.
std::vector<double> simulate_recurrence(double w1, double w2, double T,
                                        const RecurrenceInput& constant_input, double x0,
                                        double x1, double x2, int steps);

}  // namespace swarmseek
