#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hardy/core_means.hpp"

namespace hardy::empirical {

struct InvalidSpec : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Recipe for a deterministic positive sequence of length n.
struct SequenceSpec {
    enum class Kind { Harmonic, Geometric, Constant, RandomLognormal, Explicit };

    Kind kind = Kind::Harmonic;
    std::size_t n = 1;
    double ratio = 0.5;              // Geometric
    double value = 1.0;              // Constant
    std::uint64_t seed = 0;          // RandomLognormal
    double sigma = 1.0;              // RandomLognormal
    std::vector<double> values;      // Explicit

    static SequenceSpec harmonic(std::size_t n);
    static SequenceSpec geometric(double ratio, std::size_t n);
    static SequenceSpec constant(double value, std::size_t n);
    static SequenceSpec random_lognormal(std::uint64_t seed, double sigma,
                                         std::size_t n);
    static SequenceSpec explicit_values(std::vector<double> values);
};

PositiveVector generate(const SequenceSpec& spec);

/// A mean as the empirical harness sees it: an id for reports plus an
/// evaluator over prefixes.
struct MeanEvaluator {
    std::string id;
    std::function<double(std::span<const double>)> eval;
};

MeanEvaluator gini_evaluator(GiniParams params);
MeanEvaluator quasideviation_evaluator(std::string id, Generator f,
                                       numerics::Tolerance tol = {});

struct RatioResult {
    double ratio = 0.0;  // sum_k M(x_1..x_k) / sum_k x_k
    std::size_t n = 0;
    std::string mean_id;
    std::optional<std::vector<double>> partial_trace;
};

/// Truncated Hardy ratio by generic prefix re-evaluation (O(n) mean solves).
RatioResult hardy_ratio(const MeanEvaluator& mean, const SequenceSpec& spec,
                        bool trace = false);

/// Same ratio for a Gini mean via incremental prefix power sums, O(n) total.
/// Prefix sums are rescaled against the running max to stay in range.
RatioResult hardy_ratio_gini(GiniParams params, const SequenceSpec& spec,
                             bool trace = false);

/// n * G_{p,q}(1, 1/2, ..., 1/n); converges to the H_{p,q} limit.
double hardy_limit_empirical(GiniParams params, std::size_t n);

struct SearchResult {
    std::vector<double> best;
    double ratio = 0.0;
};

/// Hill climb in log-space over length-n sequences, started from the
/// harmonic sequence, coordinate perturbations with geometric step decay.
/// Deterministic given the seed; never returns less than the starting ratio.
SearchResult adversarial_search(const MeanEvaluator& mean, std::size_t n,
                                int budget, std::uint64_t seed);

}  // namespace hardy::empirical
