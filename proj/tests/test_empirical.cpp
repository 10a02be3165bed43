#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "hardy/empirical.hpp"
#include "hardy/hardy_bounds.hpp"

using namespace hardy;
using namespace hardy::empirical;

TEST_CASE("generate: harmonic") {
    auto v = generate(SequenceSpec::harmonic(4));
    REQUIRE(v.size() == 4);
    CHECK(v[0] == 1.0);
    CHECK(v[1] == 0.5);
    CHECK(v[2] == doctest::Approx(1.0 / 3.0));
    CHECK(v[3] == 0.25);
}

TEST_CASE("generate: constant and geometric") {
    auto c = generate(SequenceSpec::constant(2.0, 3));
    CHECK(c[0] == 2.0);
    CHECK(c[2] == 2.0);
    auto g = generate(SequenceSpec::geometric(0.5, 3));
    CHECK(g[2] == 0.25);
}

TEST_CASE("generate: lognormal is deterministic") {
    auto a = generate(SequenceSpec::random_lognormal(7, 1.0, 5));
    auto b = generate(SequenceSpec::random_lognormal(7, 1.0, 5));
    for (std::size_t i = 0; i < 5; ++i) CHECK(a[i] == b[i]);
    auto other = generate(SequenceSpec::random_lognormal(8, 1.0, 5));
    bool same = true;
    for (std::size_t i = 0; i < 5; ++i) same = same && a[i] == other[i];
    CHECK_FALSE(same);
}

TEST_CASE("generate: invalid specs") {
    CHECK_THROWS_AS(generate(SequenceSpec::harmonic(0)), InvalidSpec);
    CHECK_THROWS_AS(generate(SequenceSpec::geometric(-1.0, 3)), InvalidSpec);
    CHECK_THROWS_AS(generate(SequenceSpec::constant(0.0, 3)), InvalidSpec);
}

TEST_CASE("hardy_ratio: harmonic sequence approaches H_{-1,-2}") {
    auto r = hardy_ratio_gini({-1, -2}, SequenceSpec::harmonic(100000));
    CHECK(r.ratio >= 1.40);
    CHECK(r.ratio <= 1.5);
}

TEST_CASE("hardy_ratio: single constant entry is exactly 1") {
    auto r = hardy_ratio_gini({-1, -2}, SequenceSpec::constant(5.0, 1));
    CHECK(r.ratio == doctest::Approx(1.0).epsilon(1e-14));
    auto f = quasideviation_evaluator("concavized(-1,-2)",
                                      concavized_generator({-1, -2}));
    auto r2 = hardy_ratio(f, SequenceSpec::constant(5.0, 1));
    CHECK(r2.ratio == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("hardy_ratio: concavized mean stays under its Hardy constant") {
    auto f = quasideviation_evaluator("concavized(-1,-2)",
                                      concavized_generator({-1, -2}));
    auto r = hardy_ratio(f, SequenceSpec::harmonic(10000));
    CHECK(r.ratio <= bounds::c_upper({-1, -2}) + 1e-6);
}

TEST_CASE("hardy_ratio: incremental path equals naive path") {
    for (auto spec : {SequenceSpec::harmonic(500),
                      SequenceSpec::random_lognormal(3, 1.0, 200),
                      SequenceSpec::geometric(0.9, 100)}) {
        for (GiniParams pq : {GiniParams{-1, -2}, GiniParams{-0.5, -0.5}}) {
            auto fast = hardy_ratio_gini(pq, spec);
            auto naive = hardy_ratio(gini_evaluator(pq), spec);
            CHECK(std::abs(fast.ratio - naive.ratio) <=
                  1e-10 * naive.ratio);
        }
    }
}

TEST_CASE("hardy_ratio: partial trace") {
    auto r = hardy_ratio_gini({-1, -2}, SequenceSpec::harmonic(10), true);
    REQUIRE(r.partial_trace.has_value());
    CHECK(r.partial_trace->size() == 10);
    CHECK(r.partial_trace->front() == doctest::Approx(1.0));
    CHECK(r.partial_trace->back() == doctest::Approx(r.ratio));
}

TEST_CASE("hardy_limit_empirical") {
    CHECK(hardy_limit_empirical({-1, -2}, 1) == doctest::Approx(1.0));
    CHECK(std::abs(hardy_limit_empirical({-1, -2}, 100000) - 1.5) <= 0.01);
    CHECK(std::abs(hardy_limit_empirical({0, 0}, 100000) -
                   std::numbers::e) <= 0.01);
    CHECK_THROWS_AS(hardy_limit_empirical({2, 1}, 10), DomainError);
}

TEST_CASE("adversarial_search: never regresses from harmonic start") {
    auto mean = gini_evaluator({-1, -2});
    auto start = hardy_ratio(mean, SequenceSpec::harmonic(200));
    auto found = adversarial_search(mean, 200, 2000, 17);
    CHECK(found.ratio >= start.ratio);
    CHECK(found.ratio <= bounds::c_upper({-1, -2}) + 1e-6);
}

TEST_CASE("adversarial_search: deterministic given seed") {
    auto mean = gini_evaluator({-1, -2});
    auto a = adversarial_search(mean, 50, 500, 9);
    auto b = adversarial_search(mean, 50, 500, 9);
    CHECK(a.ratio == b.ratio);
    REQUIRE(a.best.size() == b.best.size());
    for (std::size_t i = 0; i < a.best.size(); ++i) {
        CHECK(a.best[i] == b.best[i]);
    }
}
