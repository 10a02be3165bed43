#pragma once

#include <functional>
#include <stdexcept>
#include <string>

namespace hardy::numerics {

using ScalarFn = std::function<double(double)>;

struct NumericsError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// No sign change found within the expansion limit / probe budget.
struct NoSignChange : NumericsError {
    using NumericsError::NumericsError;
};

/// Root solver exhausted max_iter without meeting either tolerance.
struct MaxIterations : NumericsError {
    using NumericsError::NumericsError;
};

/// Integrand evaluated to NaN or infinity at a quadrature node.
struct NonFinite : NumericsError {
    using NumericsError::NumericsError;
};

/// Adaptive quadrature exhausted its recursion-depth budget.
struct NoConvergence : NumericsError {
    using NumericsError::NumericsError;
};

/// A sign-changing interval: lo < hi, f_lo and f_hi nonzero with opposite signs.
struct Bracket {
    double lo;
    double hi;
    double f_lo;
    double f_hi;

    bool valid() const {
        return lo < hi && f_lo != 0.0 && f_hi != 0.0 &&
               ((f_lo < 0.0) != (f_hi < 0.0));
    }
};

struct Tolerance {
    double abs_x = 1e-12;
    double abs_f = 1e-12;
    int max_iter = 200;
};

/// Searches for a sign change starting from [seed_lo, seed_hi]: first expands
/// hi geometrically (factor 2) up to expand_limit, then moves lo toward the
/// lower domain edge. Throws NoSignChange if the probe budget runs out.
Bracket find_bracket(const ScalarFn& f, double seed_lo, double seed_hi,
                     double expand_limit);

/// Bisection hardened with interpolation acceleration: secant/regula-falsi
/// steps are accepted only when they land strictly inside the current
/// bracket, otherwise the step falls back to bisection. Stops when
/// |f(x)| <= tol.abs_f or the bracket width drops below tol.abs_x.
double solve_root(const ScalarFn& f, Bracket bracket, Tolerance tol = {},
                  bool interpolate = true);

/// Adaptive composite Simpson quadrature with interval halving; estimated
/// absolute error <= tol. Returns exactly 0 when a == b.
double integrate(const ScalarFn& f, double a, double b, double tol,
                 int max_depth = 60);

}  // namespace hardy::numerics
