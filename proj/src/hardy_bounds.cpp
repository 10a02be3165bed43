#include "hardy/hardy_bounds.hpp"

#include <cmath>
#include <numbers>

#include "strformat.hpp"

namespace hardy::bounds {

namespace {

// Bounds below are stated for ordered parameters; the mean is symmetric in
// (p, q) so ordering first makes every bound exactly symmetric.
GiniParams ordered_desc(GiniParams params) {
    if (params.p < params.q) std::swap(params.p, params.q);
    return params;
}

void require_negative_quadrant(GiniParams params, const char* who) {
    if (!params.is_negative_quadrant()) {
        throw DomainError(detail::strformat(
            "%s: requires max(p,q) < 0 (got p=%g, q=%g)", who, params.p,
            params.q));
    }
}

}  // namespace

double hardy_lower_limit(GiniParams params) {
    if (!params.is_hardy()) {
        throw DomainError(detail::strformat(
            "hardy_lower_limit: (p,q)=(%g,%g) is not a Hardy pair", params.p,
            params.q));
    }
    auto [p, q] = ordered_desc(params);
    if (p == q) {
        return std::exp(1.0 / (1.0 - p));
    }
    return std::pow((1.0 - p) / (1.0 - q), 1.0 / (q - p));
}

double trivial_upper(GiniParams params) {
    require_negative_quadrant(params, "trivial_upper");
    double m = std::min(params.p, params.q);
    return std::pow(1.0 - m, -1.0 / m);
}

double pas_upper(GiniParams params) {
    require_negative_quadrant(params, "pas_upper");
    auto [p, q] = ordered_desc(params);
    if (p == q) {
        return (std::numbers::e - p) / (1.0 - p);
    }
    double r = std::pow((1.0 - q) / (1.0 - p), (1.0 - p) / (p - q));
    return (r - p) / (1.0 - p);
}

double residual_algebraic(GiniParams params, double c) {
    require_negative_quadrant(params, "residual_algebraic");
    auto [p, q] = ordered_desc(params);
    if (p == q) {
        double cp = std::pow(c, 1.0 - p);
        return cp * (1.0 - std::log(cp)) - p * std::exp((1.0 - p) / p);
    }
    // |q|^{(1-p)/(q-p)} |p|^{(1-q)/(p-q)} in log space: the two factors
    // overflow/underflow in opposite directions near the diagonal.
    double log_mag = ((1.0 - q) * std::log(-p) - (1.0 - p) * std::log(-q)) /
                     (p - q);
    double rhs =
        std::exp(log_mag) * (1.0 / (1.0 - p) - 1.0 / (1.0 - q));
    return std::pow(c, 1.0 - q) / (1.0 - q) -
           std::pow(c, 1.0 - p) / (1.0 - p) - rhs;
}

double c_upper(GiniParams params, numerics::Tolerance tol) {
    require_negative_quadrant(params, "c_upper");
    auto pq = ordered_desc(params);
    // Near the diagonal the residual scales like (p - q); dividing it out
    // keeps the abs_f stop meaningful there. Same root either way.
    double scale = pq.p == pq.q ? 1.0 : pq.p - pq.q;
    auto phi = [pq, scale](double c) {
        return residual_algebraic(pq, c) / scale;
    };
    double hi_seed = pas_upper(pq) + 1.0;
    auto bracket = numerics::find_bracket(phi, 1.0 + 1e-9, hi_seed, 1e6);
    return numerics::solve_root(phi, bracket, tol);
}

double residual_integral(GiniParams params, double c, double quad_tol) {
    require_negative_quadrant(params, "residual_integral");
    double tau = tau_pq(params);
    if (c < 1.0 / tau) {
        throw DomainError("residual_integral: requires c >= 1/tau");
    }
    double head = g_pq(params, tau) / tau;
    auto integrand = [params](double t) { return g_pq(params, 1.0 / t); };
    return head + numerics::integrate(integrand, 1.0 / tau, c, quad_tol);
}

ConcaveHardyQuery make_concave_query(const Generator& f, double quad_tol) {
    if (f.kind == Generator::Kind::Concavized) {
        // Constant tail beyond tau: int_0^{1/tau} f(1/t) dt = g(tau)/tau in
        // closed form, quadrature only on [1/tau, 1].
        GiniParams params = *f.params;
        double tau = *f.tau;
        double probe =
            g_pq(params, tau) / tau +
            numerics::integrate([&f](double t) { return f(1.0 / t); },
                                1.0 / tau, 1.0, quad_tol);
        return {f, probe};
    }

    auto integrand = [&f](double t) { return f(1.0 / t); };
    double total = numerics::integrate(integrand, 1e-2, 1.0, quad_tol);
    double prev_piece = 0.0;
    for (int k = 2; k <= 8; ++k) {
        double a = std::pow(10.0, -(k + 1));
        double b = std::pow(10.0, -k);
        double piece = numerics::integrate(integrand, a, b, quad_tol);
        total += piece;
        // Convergent tails shrink geometrically decade over decade; a
        // stagnating piece signals logarithmic (or worse) divergence.
        if (k == 8 && std::abs(piece) > 1e-12 &&
            std::abs(piece) > 0.5 * std::abs(prev_piece)) {
            throw NotIntegrable(detail::strformat(
                "int_0^1 f(1/t) dt does not converge near 0 (decade piece "
                "%g after %g)",
                piece, prev_piece));
        }
        prev_piece = piece;
    }
    return {f, total};
}

double concave_hardy_constant(const ConcaveHardyQuery& query,
                              numerics::Tolerance tol, double quad_tol) {
    const Generator& f = query.generator;

    numerics::ScalarFn accumulated;
    if (f.kind == Generator::Kind::Concavized) {
        GiniParams params = *f.params;
        accumulated = [params, quad_tol](double c) {
            return residual_integral(params, c, quad_tol);
        };
    } else {
        // F(c) = int_0^1 f(1/t) dt + int_1^c f(1/t) dt; the first term is
        // the probe, already computed with the near-0 cutoff.
        double probe = query.integrability_probe;
        accumulated = [&f, probe, quad_tol](double c) {
            return probe +
                   numerics::integrate([&f](double t) { return f(1.0 / t); },
                                       1.0, c, quad_tol);
        };
    }

    auto bracket = numerics::find_bracket(accumulated, 1.0 + 1e-9, 4.0, 1e6);
    return numerics::solve_root(accumulated, bracket, tol);
}

BoundsReport bounds_report(GiniParams params, numerics::Tolerance tol,
                           double quad_tol) {
    BoundsReport r;
    r.params = params;
    r.is_hardy = params.is_hardy();
    r.h_is_exact = params.is_concave_region();

    if (r.is_hardy) {
        r.lower_H = hardy_lower_limit(params);
    } else {
        r.lower_H_reason = "not a Hardy mean";
    }

    if (params.is_negative_quadrant()) {
        r.trivial_upper = trivial_upper(params);
        r.pas_upper = pas_upper(params);
        r.c_upper = c_upper(params, tol);
        r.residual_algebraic = residual_algebraic(params, *r.c_upper);
        r.residual_integral = residual_integral(params, *r.c_upper, quad_tol);
    } else {
        std::string why = r.h_is_exact
                              ? "exact constant available (concave region)"
                              : "not a Hardy mean";
        r.trivial_upper_reason = why;
        r.pas_upper_reason = why;
        r.c_upper_reason = why;
    }
    return r;
}

}  // namespace hardy::bounds
