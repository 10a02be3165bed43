#include "hardy/core_means.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "strformat.hpp"

namespace hardy {

PositiveVector::PositiveVector(std::vector<double> entries)
    : entries_(std::move(entries)) {
    if (entries_.empty()) {
        throw InvalidInput("PositiveVector: needs at least one entry");
    }
    for (double v : entries_) {
        if (!(v > 0.0) || !std::isfinite(v)) {
            throw InvalidInput(detail::strformat(
                "PositiveVector: entry %g is not a positive finite real",
                v));
        }
    }
}

double g_pq(GiniParams params, double t) {
    if (!(t > 0.0)) {
        throw DomainError("g_pq: requires t > 0");
    }
    double v;
    if (params.is_diagonal()) {
        v = std::pow(t, params.p) * std::log(t);
    } else {
        v = (std::pow(t, params.p) - std::pow(t, params.q)) /
            (params.p - params.q);
    }
    if (!std::isfinite(v)) {
        throw numerics::NonFinite(detail::strformat(
            "g_pq overflowed at t=%g (p=%g, q=%g)", t, params.p, params.q));
    }
    return v;
}

double tau_pq(GiniParams params) {
    if (!params.is_negative_quadrant()) {
        throw DomainError("tau_pq: requires max(p,q) < 0");
    }
    if (params.is_diagonal()) {
        return std::exp(-1.0 / params.p);
    }
    return std::pow(params.p / params.q, 1.0 / (params.q - params.p));
}

Generator Generator::gini(GiniParams params) {
    Generator g;
    g.eval = [params](double t) { return g_pq(params, t); };
    g.kind = Kind::Gini;
    g.params = params;
    return g;
}

Generator Generator::custom(std::function<double(double)> eval) {
    Generator g;
    g.eval = std::move(eval);
    g.kind = Kind::Custom;
    return g;
}

Generator concavized_generator(GiniParams params) {
    double tau = tau_pq(params);  // throws DomainError outside the quadrant
    double plateau = g_pq(params, tau);
    Generator g;
    g.eval = [params, tau, plateau](double t) {
        return t <= tau ? g_pq(params, t) : plateau;
    };
    g.kind = Generator::Kind::Concavized;
    g.params = params;
    g.tau = tau;
    return g;
}

double gini_mean(GiniParams params, const PositiveVector& x) {
    // Pre-order the exponents so G_{p,q} and G_{q,p} are bit-identical.
    if (params.p < params.q) std::swap(params.p, params.q);
    auto xs = x.entries();
    double scale = *std::max_element(xs.begin(), xs.end());
    if (params.is_diagonal()) {
        double sum_p = 0.0, sum_plog = 0.0;
        for (double v : xs) {
            double t = v / scale;
            double tp = std::pow(t, params.p);
            sum_p += tp;
            sum_plog += tp * std::log(t);
        }
        return scale * std::exp(sum_plog / sum_p);
    }
    double sum_p = 0.0, sum_q = 0.0;
    for (double v : xs) {
        double t = v / scale;
        sum_p += std::pow(t, params.p);
        sum_q += std::pow(t, params.q);
    }
    return scale * std::pow(sum_p / sum_q, 1.0 / (params.p - params.q));
}

double quasideviation_mean(const Generator& f, const PositiveVector& x,
                           numerics::Tolerance tol) {
    auto xs = x.entries();
    auto [mn_it, mx_it] = std::minmax_element(xs.begin(), xs.end());
    double mn = *mn_it, mx = *mx_it;
    if (mn == mx) return mn;

    auto residual = [&](double y) {
        double s = 0.0;
        for (double v : xs) s += f(v / y);
        return s;
    };

    // Shrink endpoints slightly so rounding where e_{f,x} touches 0 does not
    // flip the endpoint signs.
    double lo = mn * (1.0 - 1e-15);
    double hi = mx * (1.0 + 1e-15);
    double e_lo = residual(lo);
    double e_hi = residual(hi);
    if (std::abs(e_lo) <= tol.abs_f) return mn;
    if (std::abs(e_hi) <= tol.abs_f) return mx;
    if (e_lo < 0.0 || e_hi > 0.0) {
        throw SignConditionViolated(detail::strformat(
            "quasideviation_mean: e(min)=%g, e(max)=%g", e_lo, e_hi));
    }
    return numerics::solve_root(residual, {lo, hi, e_lo, e_hi}, tol);
}

SpecialMeanResult special_mean_m12(const PositiveVector& x) {
    std::vector<double> s(x.entries().begin(), x.entries().end());
    std::sort(s.begin(), s.end());
    std::size_t n = s.size();

    std::vector<double> pre1(n + 1, 0.0), pre2(n + 1, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        pre1[i + 1] = pre1[i] + 1.0 / s[i];
        pre2[i + 1] = pre2[i] + 1.0 / (s[i] * s[i]);
    }

    for (std::size_t k = n; k >= 1; --k) {
        double s1 = pre1[k];
        double s2 = pre2[k];
        double m =
            (s1 + std::sqrt(s1 * s1 + s2 * static_cast<double>(n - k))) /
            (2.0 * s2);
        bool consistent =
            s[k - 1] <= 2.0 * m && (k == n || s[k] > 2.0 * m);
        if (consistent) return {m, k};
    }
    throw Inconsistent("special_mean_m12: no consistent breakpoint index");
}

bool check_sign_condition(const Generator& f, std::span<const double> grid,
                          double abs_f) {
    if (grid.empty()) {
        throw InvalidInput("check_sign_condition: empty grid");
    }
    for (double t : grid) {
        double v = f(t);
        if (t == 1.0) {
            if (std::abs(v) > abs_f) return false;
        } else if (t > 1.0) {
            if (!(v > 0.0)) return false;
        } else {
            if (!(v < 0.0)) return false;
        }
    }
    return true;
}

}  // namespace hardy
