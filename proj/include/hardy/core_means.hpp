#pragma once

#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "hardy/numerics.hpp"

namespace hardy {

struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// e_{f,x} has the wrong sign at a bracket endpoint: the generator does not
/// satisfy the sign condition on the data at hand.
struct SignConditionViolated : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// The closed-form index scan found no consistent breakpoint (implementation
/// bug if it ever fires; one always exists mathematically).
struct Inconsistent : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidInput : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Ordered exponent pair (p, q) of a Gini mean, with the derived region flags
/// every other module keys on.
struct GiniParams {
    double p;
    double q;

    bool is_diagonal() const { return p == q; }
    bool is_negative_quadrant() const { return std::max(p, q) < 0.0; }
    bool is_concave_region() const {
        return std::min(p, q) <= 0.0 && 0.0 <= std::max(p, q) &&
               std::max(p, q) < 1.0;
    }
    bool is_hardy() const {
        return std::min(p, q) <= 0.0 && std::max(p, q) < 1.0;
    }
};

/// Strictly positive finite vector; validated on construction.
class PositiveVector {
  public:
    explicit PositiveVector(std::vector<double> entries);

    std::span<const double> entries() const { return entries_; }
    std::size_t size() const { return entries_.size(); }
    double operator[](std::size_t i) const { return entries_[i]; }
    operator std::span<const double>() const { return entries_; }

  private:
    std::vector<double> entries_;
};

/// A scalar generator t -> f(t) on (0, inf) carrying declared structural
/// facts used by the solvers. The sign condition sign(f(t)) = sign(t-1) is
/// guaranteed analytically for the built-in kinds; for Custom generators it
/// is the caller's contract (as is being side-effect free).
struct Generator {
    enum class Kind { Gini, Concavized, Custom };

    std::function<double(double)> eval;
    Kind kind = Kind::Custom;
    std::optional<GiniParams> params;
    std::optional<double> tau;  // argmax, for the concavized kind

    double operator()(double t) const { return eval(t); }

    static Generator gini(GiniParams params);
    static Generator custom(std::function<double(double)> eval);
};

/// g_{p,q}(t) = (t^p - t^q)/(p - q), or t^p ln t on the diagonal.
double g_pq(GiniParams params, double t);

/// Global maximum point of g_{p,q} on (0, inf); requires max(p,q) < 0.
double tau_pq(GiniParams params);

/// The concave majorant of g_{p,q}: equal to g_{p,q} up to tau and frozen at
/// the maximum value beyond it. Requires max(p,q) < 0.
Generator concavized_generator(GiniParams params);

/// Gini mean via the explicit ratio-of-power-sums form. Entries are scaled
/// by max(x) before the power sums (legitimate by homogeneity) to keep
/// intermediate values in range.
double gini_mean(GiniParams params, const PositiveVector& x);

/// The unique y in [min(x), max(x)] with sum_i f(x_i / y) = 0.
double quasideviation_mean(const Generator& f, const PositiveVector& x,
                           numerics::Tolerance tol = {});

struct SpecialMeanResult {
    double value;
    std::size_t k;  // breakpoint index, 1-based, over the sorted entries
};

/// Closed form of the concavized (-1,-2) quasideviation mean: descending scan
/// over the breakpoint index k with a consistency check.
SpecialMeanResult special_mean_m12(const PositiveVector& x);

/// True iff sign(f(t)) = sign(t-1) at every grid point (|f(1)| <= abs_f).
bool check_sign_condition(const Generator& f, std::span<const double> grid,
                          double abs_f = 1e-12);

}  // namespace hardy
