#include "hardy/numerics.hpp"

#include <cmath>
#include <cstdlib>

#include "strformat.hpp"

namespace hardy::numerics {

namespace {

double checked_eval(const ScalarFn& f, double x) {
    double v = f(x);
    if (!std::isfinite(v)) {
        throw NonFinite(detail::strformat(
            "function value is not finite at x=%g", x));
    }
    return v;
}

bool opposite_signs(double a, double b) {
    return (a < 0.0 && b > 0.0) || (a > 0.0 && b < 0.0);
}

}  // namespace

Bracket find_bracket(const ScalarFn& f, double seed_lo, double seed_hi,
                     double expand_limit) {
    if (!(seed_lo < seed_hi)) {
        throw NumericsError("find_bracket: seed_lo must be < seed_hi");
    }
    constexpr int kProbeBudget = 200;
    int probes = 0;

    double lo = seed_lo;
    double hi = seed_hi;
    double f_lo = checked_eval(f, lo);
    double f_hi = checked_eval(f, hi);
    ++probes;
    ++probes;

    auto done = [&] { return opposite_signs(f_lo, f_hi); };

    // Exact zeros at probe points: nudge to a genuine sign change by
    // returning a tight interval around the zero.
    auto tighten_zero = [&](double x) {
        double eps = 1e-9 * (std::abs(x) + 1.0);
        Bracket b{x - eps, x + eps, checked_eval(f, x - eps),
                  checked_eval(f, x + eps)};
        if (!b.valid()) {
            throw NoSignChange("find_bracket: probe landed on a zero with no "
                               "sign change around it");
        }
        return b;
    };
    if (f_lo == 0.0) return tighten_zero(lo);
    if (f_hi == 0.0) return tighten_zero(hi);

    // Phase 1: grow hi geometrically.
    double width = seed_hi - seed_lo;
    while (!done() && hi < expand_limit && probes < kProbeBudget) {
        width *= 2.0;
        hi = std::min(seed_lo + width, expand_limit);
        f_hi = checked_eval(f, hi);
        ++probes;
        if (f_hi == 0.0) return tighten_zero(hi);
    }

    // Phase 2: move lo toward the lower edge of the domain. For lo > 0 the
    // edge is 0 (all our targets live on (0, inf)); otherwise step downward
    // geometrically.
    double step = seed_hi - seed_lo;
    while (!done() && probes < kProbeBudget) {
        if (lo > 0.0) {
            lo /= 2.0;
            if (lo < 1e-300) break;
        } else {
            lo -= step;
            step *= 2.0;
            if (lo < -expand_limit) break;
        }
        f_lo = checked_eval(f, lo);
        ++probes;
        if (f_lo == 0.0) return tighten_zero(lo);
    }

    if (!done()) {
        throw NoSignChange(detail::strformat(
            "find_bracket: no sign change in [%g, %g] after %d probes", lo,
            hi, probes));
    }
    return Bracket{lo, hi, f_lo, f_hi};
}

double solve_root(const ScalarFn& f, Bracket b, Tolerance tol,
                  bool interpolate) {
    if (!b.valid()) {
        throw NumericsError("solve_root: invalid bracket");
    }
    double lo = b.lo, hi = b.hi, f_lo = b.f_lo, f_hi = b.f_hi;

    for (int iter = 0; iter < tol.max_iter; ++iter) {
        double mid = 0.5 * (lo + hi);
        double x = mid;
        // Secant steps can stagnate against one endpoint; forcing a plain
        // bisection on every other iteration keeps the bracket width
        // halving at a guaranteed rate.
        if (interpolate && iter % 2 == 0 && f_hi != f_lo) {
            // Secant through the bracket endpoints; keep it only if it lands
            // strictly inside.
            double s = hi - f_hi * (hi - lo) / (f_hi - f_lo);
            if (s > lo && s < hi) x = s;
        }
        double fx = checked_eval(f, x);
        if (std::abs(fx) <= tol.abs_f) return x;
        if (opposite_signs(f_lo, fx)) {
            hi = x;
            f_hi = fx;
        } else {
            lo = x;
            f_lo = fx;
        }
        if (hi - lo <= tol.abs_x) return 0.5 * (lo + hi);
    }
    throw MaxIterations(detail::strformat(
        "solve_root: no convergence in %d iterations (bracket [%g, %g])",
        tol.max_iter, lo, hi));
}

namespace {

// Classic adaptive Simpson: accept when the halved estimate agrees with the
// whole-interval estimate to 15*tol, with Richardson correction.
double adaptive_simpson(const ScalarFn& f, double a, double b, double fa,
                        double fm, double fb, double whole, double tol,
                        int depth) {
    if (depth <= 0) {
        throw NoConvergence(detail::strformat(
            "integrate: recursion depth exhausted on [%g, %g]", a, b));
    }
    double m = 0.5 * (a + b);
    double lm = 0.5 * (a + m);
    double rm = 0.5 * (m + b);
    double flm = checked_eval(f, lm);
    double frm = checked_eval(f, rm);
    double h = b - a;
    double left = h / 12.0 * (fa + 4.0 * flm + fm);
    double right = h / 12.0 * (fm + 4.0 * frm + fb);
    double delta = left + right - whole;
    if (std::abs(delta) <= 15.0 * tol) {
        return left + right + delta / 15.0;
    }
    return adaptive_simpson(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           adaptive_simpson(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

}  // namespace

double integrate(const ScalarFn& f, double a, double b, double tol,
                 int max_depth) {
    if (a > b) {
        throw NumericsError("integrate: requires a <= b");
    }
    if (a == b) return 0.0;
    double fa = checked_eval(f, a);
    double fb = checked_eval(f, b);
    double m = 0.5 * (a + b);
    double fm = checked_eval(f, m);
    double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return adaptive_simpson(f, a, b, fa, fm, fb, whole, tol, max_depth);
}

}  // namespace hardy::numerics
