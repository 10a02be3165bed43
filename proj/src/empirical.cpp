#include "hardy/empirical.hpp"

#include <cmath>
#include <random>

#include "strformat.hpp"

namespace hardy::empirical {

SequenceSpec SequenceSpec::harmonic(std::size_t n) {
    SequenceSpec s;
    s.kind = Kind::Harmonic;
    s.n = n;
    return s;
}

SequenceSpec SequenceSpec::geometric(double ratio, std::size_t n) {
    SequenceSpec s;
    s.kind = Kind::Geometric;
    s.ratio = ratio;
    s.n = n;
    return s;
}

SequenceSpec SequenceSpec::constant(double value, std::size_t n) {
    SequenceSpec s;
    s.kind = Kind::Constant;
    s.value = value;
    s.n = n;
    return s;
}

SequenceSpec SequenceSpec::random_lognormal(std::uint64_t seed, double sigma,
                                            std::size_t n) {
    SequenceSpec s;
    s.kind = Kind::RandomLognormal;
    s.seed = seed;
    s.sigma = sigma;
    s.n = n;
    return s;
}

SequenceSpec SequenceSpec::explicit_values(std::vector<double> values) {
    SequenceSpec s;
    s.kind = Kind::Explicit;
    s.n = values.size();
    s.values = std::move(values);
    return s;
}

PositiveVector generate(const SequenceSpec& spec) {
    if (spec.n < 1) throw InvalidSpec("generate: length must be >= 1");
    std::vector<double> out;
    out.reserve(spec.n);
    switch (spec.kind) {
        case SequenceSpec::Kind::Harmonic:
            for (std::size_t k = 1; k <= spec.n; ++k) {
                out.push_back(1.0 / static_cast<double>(k));
            }
            break;
        case SequenceSpec::Kind::Geometric: {
            if (!(spec.ratio > 0.0) || !std::isfinite(spec.ratio)) {
                throw InvalidSpec("generate: geometric ratio must be > 0");
            }
            double v = 1.0;
            for (std::size_t k = 0; k < spec.n; ++k) {
                out.push_back(v);
                v *= spec.ratio;
            }
            break;
        }
        case SequenceSpec::Kind::Constant:
            if (!(spec.value > 0.0) || !std::isfinite(spec.value)) {
                throw InvalidSpec("generate: constant value must be > 0");
            }
            out.assign(spec.n, spec.value);
            break;
        case SequenceSpec::Kind::RandomLognormal: {
            if (!(spec.sigma > 0.0) || !std::isfinite(spec.sigma)) {
                throw InvalidSpec("generate: sigma must be > 0");
            }
            std::mt19937_64 rng(spec.seed);
            std::lognormal_distribution<double> dist(0.0, spec.sigma);
            for (std::size_t k = 0; k < spec.n; ++k) out.push_back(dist(rng));
            break;
        }
        case SequenceSpec::Kind::Explicit:
            if (spec.values.size() != spec.n) {
                throw InvalidSpec("generate: explicit list length mismatch");
            }
            out = spec.values;
            break;
    }
    return PositiveVector(std::move(out));
}

MeanEvaluator gini_evaluator(GiniParams params) {
    return {detail::strformat("gini(%g,%g)", params.p, params.q),
            [params](std::span<const double> prefix) {
                return gini_mean(params, PositiveVector(std::vector<double>(
                                             prefix.begin(), prefix.end())));
            }};
}

MeanEvaluator quasideviation_evaluator(std::string id, Generator f,
                                       numerics::Tolerance tol) {
    return {std::move(id), [f = std::move(f), tol](
                               std::span<const double> prefix) {
                return quasideviation_mean(
                    f,
                    PositiveVector(
                        std::vector<double>(prefix.begin(), prefix.end())),
                    tol);
            }};
}

namespace {

RatioResult ratio_over(std::span<const double> xs,
                       const std::function<double(std::span<const double>)>&
                           mean,
                       std::string id, bool trace) {
    RatioResult r;
    r.n = xs.size();
    r.mean_id = std::move(id);
    if (trace) r.partial_trace.emplace();
    double num = 0.0, den = 0.0;
    for (std::size_t k = 1; k <= xs.size(); ++k) {
        num += mean(xs.subspan(0, k));
        den += xs[k - 1];
        if (trace) r.partial_trace->push_back(num / den);
    }
    r.ratio = num / den;
    return r;
}

}  // namespace

RatioResult hardy_ratio(const MeanEvaluator& mean, const SequenceSpec& spec,
                        bool trace) {
    PositiveVector xs = generate(spec);
    return ratio_over(xs.entries(), mean.eval, mean.id, trace);
}

RatioResult hardy_ratio_gini(GiniParams params, const SequenceSpec& spec,
                             bool trace) {
    PositiveVector xv = generate(spec);
    auto xs = xv.entries();
    // Same exponent pre-ordering as gini_mean, so both paths agree exactly.
    double p = std::max(params.p, params.q);
    double q = std::min(params.p, params.q);

    RatioResult r;
    r.n = xs.size();
    r.mean_id = detail::strformat("gini(%g,%g)", p, q);
    if (trace) r.partial_trace.emplace();

    // Running prefix power sums over entries scaled by the running max; on a
    // new max the sums are rescaled in place.
    double scale = xs[0];
    double sum_p = 0.0;
    double sum_q = 0.0;   // p != q
    double sum_pl = 0.0;  // diagonal: sum t^p ln t
    bool diag = params.is_diagonal();

    double num = 0.0, den = 0.0;
    for (std::size_t k = 0; k < xs.size(); ++k) {
        double v = xs[k];
        if (v > scale) {
            double r0 = scale / v;
            double rp = std::pow(r0, p);
            if (diag) {
                sum_pl = rp * (sum_pl + std::log(r0) * sum_p);
                sum_p *= rp;
            } else {
                sum_p *= rp;
                sum_q *= std::pow(r0, q);
            }
            scale = v;
        }
        double t = v / scale;
        double tp = std::pow(t, p);
        if (diag) {
            sum_p += tp;
            sum_pl += tp * std::log(t);
        } else {
            sum_p += tp;
            sum_q += std::pow(t, q);
        }
        double mean_k = diag
                            ? scale * std::exp(sum_pl / sum_p)
                            : scale * std::pow(sum_p / sum_q, 1.0 / (p - q));
        num += mean_k;
        den += v;
        if (trace) r.partial_trace->push_back(num / den);
    }
    r.ratio = num / den;
    return r;
}

double hardy_limit_empirical(GiniParams params, std::size_t n) {
    if (!params.is_hardy()) {
        throw DomainError("hardy_limit_empirical: not a Hardy pair");
    }
    if (n < 1) throw DomainError("hardy_limit_empirical: n must be >= 1");
    PositiveVector xs = generate(SequenceSpec::harmonic(n));
    return static_cast<double>(n) * gini_mean(params, xs);
}

SearchResult adversarial_search(const MeanEvaluator& mean, std::size_t n,
                                int budget, std::uint64_t seed) {
    if (n < 1 || budget < 1) {
        throw InvalidSpec("adversarial_search: n and budget must be >= 1");
    }
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> coord(0, n - 1);
    std::normal_distribution<double> delta(0.0, 1.0);

    std::vector<double> logs(n);
    for (std::size_t i = 0; i < n; ++i) {
        logs[i] = -std::log(static_cast<double>(i + 1));
    }
    std::vector<double> xs(n);
    auto realize = [&] {
        for (std::size_t i = 0; i < n; ++i) xs[i] = std::exp(logs[i]);
    };
    realize();
    double best = ratio_over(xs, mean.eval, mean.id, false).ratio;

    double step = 0.5;
    const double decay = std::pow(0.02 / step, 1.0 / std::max(1, budget));
    for (int it = 0; it < budget; ++it) {
        std::size_t i = coord(rng);
        double old = logs[i];
        logs[i] += step * delta(rng);
        realize();
        double ratio = ratio_over(xs, mean.eval, mean.id, false).ratio;
        if (ratio > best) {
            best = ratio;
        } else {
            logs[i] = old;
        }
        step *= decay;
    }
    realize();
    return {std::move(xs), best};
}

}  // namespace hardy::empirical
