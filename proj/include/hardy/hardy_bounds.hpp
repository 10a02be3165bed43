#pragma once

#include <optional>
#include <string>

#include "hardy/core_means.hpp"
#include "hardy/numerics.hpp"

namespace hardy::bounds {

/// The divergence probe on int_0^1 f(1/t) dt failed: the quasideviation mean
/// of this generator is not a Hardy mean.
struct NotIntegrable : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Limit of n * G_{p,q}(1, 1/2, ..., 1/n): the exact Hardy constant in the
/// concave parameter region, a lower bound in the negative quadrant.
double hardy_lower_limit(GiniParams params);

/// Hardy constant of G_{min(p,q),0}, which dominates G_{p,q}. Requires
/// max(p,q) < 0.
double trivial_upper(GiniParams params);

/// The 2020 upper estimate for the negative quadrant.
double pas_upper(GiniParams params);

/// Residual of the closed-form equation whose unique root in (1, inf) is the
/// concavization bound c_{p,q}; parameters are pre-ordered so p > q.
double residual_algebraic(GiniParams params, double c);

/// The concavization upper bound: root of residual_algebraic on (1, inf).
double c_upper(GiniParams params, numerics::Tolerance tol = {});

/// Integral-form residual g(tau)/tau + int_{1/tau}^{c} g(1/t) dt, evaluated
/// by quadrature. Independent oracle for c_upper.
double residual_integral(GiniParams params, double c, double quad_tol = 1e-9);

struct ConcaveHardyQuery {
    Generator generator;
    double integrability_probe;  // finite estimate of int_0^1 f(1/t) dt
};

/// Probes int_0^1 f(1/t) dt for convergence near 0 and builds the query.
/// Built-in concavized generators skip the probe (constant tail, integral in
/// closed form). Throws NotIntegrable when the probe diverges.
ConcaveHardyQuery make_concave_query(const Generator& f,
                                     double quad_tol = 1e-9);

/// Hardy constant of a concave quasideviation mean: the unique c > 1/tau
/// solving int_0^c f(1/t) dt = 0.
double concave_hardy_constant(const ConcaveHardyQuery& query,
                              numerics::Tolerance tol = {},
                              double quad_tol = 1e-9);

/// All four Hardy-constant estimates for one parameter pair, with residual
/// diagnostics. Fields whose preconditions fail stay empty with a reason.
struct BoundsReport {
    GiniParams params{0.0, 0.0};
    bool is_hardy = false;
    bool h_is_exact = false;  // concave region: lower_H is the exact constant

    std::optional<double> lower_H;
    std::optional<double> trivial_upper;
    std::optional<double> pas_upper;
    std::optional<double> c_upper;
    std::optional<double> residual_integral;
    std::optional<double> residual_algebraic;

    std::string lower_H_reason;
    std::string trivial_upper_reason;
    std::string pas_upper_reason;
    std::string c_upper_reason;
};

BoundsReport bounds_report(GiniParams params, numerics::Tolerance tol = {},
                           double quad_tol = 1e-9);

}  // namespace hardy::bounds
