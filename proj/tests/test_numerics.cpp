#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "hardy/numerics.hpp"

using namespace hardy::numerics;

// Real root of 8c^3 - 12c^2 - 1 = 0, frozen at 30 digits.
static constexpr double kCubicRoot = 1.55190170136776826658247366641;

static double cubic(double c) { return 8 * c * c * c - 12 * c * c - 1; }

TEST_CASE("find_bracket: linear function") {
    auto b = find_bracket([](double c) { return c - 2.0; }, 1.0, 1.5, 1e6);
    CHECK(b.valid());
    CHECK(b.lo <= 2.0);
    CHECK(b.hi >= 2.0);
}

TEST_CASE("find_bracket: cubic stays within seeds") {
    auto b = find_bracket(cubic, 1.0, 2.0, 1e6);
    CHECK(b.valid());
    CHECK(b.lo >= 1.0);
    CHECK(b.hi <= 2.0);
    CHECK(b.lo <= kCubicRoot);
    CHECK(b.hi >= kCubicRoot);
}

TEST_CASE("find_bracket: no real root") {
    CHECK_THROWS_AS(
        find_bracket([](double c) { return c * c + 1.0; }, 1.0, 2.0, 1e6),
        NoSignChange);
}

TEST_CASE("solve_root: cubic golden") {
    auto b = find_bracket(cubic, 1.0, 2.0, 1e6);
    double r = solve_root(cubic, b);
    CHECK(std::abs(r - kCubicRoot) <= 1e-9);
}

TEST_CASE("solve_root: identity root") {
    Bracket b{0.0, 2.0, -1.0, 1.0};
    CHECK(std::abs(solve_root([](double x) { return x - 1.0; }, b) - 1.0) <=
          1e-9);
}

TEST_CASE("solve_root: integral-form residual matches polynomial root") {
    // Residual of the (-1,-2) concavization equation in integral form:
    // g(tau)/tau + int_{1/tau}^{c} (t - t^2) dt with tau = 2, g(2) = 1/4.
    auto integral_residual = [](double c) {
        return 0.125 + integrate([](double t) { return t - t * t; }, 0.5, c,
                                 1e-11);
    };
    auto b = find_bracket(integral_residual, 1.0, 2.0, 1e6);
    double r = solve_root(integral_residual, b);
    CHECK(std::abs(r - kCubicRoot) <= 1e-9);
}

TEST_CASE("solve_root: max iterations error") {
    Tolerance tight{1e-30, 1e-30, 5};
    Bracket b{1.0, 2.0, cubic(1.0), cubic(2.0)};
    CHECK_THROWS_AS(solve_root(cubic, b, tight), MaxIterations);
}

TEST_CASE("integrate: polynomial") {
    double v = integrate([](double t) { return t; }, 0.0, 1.0, 1e-12);
    CHECK(std::abs(v - 0.5) <= 1e-10);
}

TEST_CASE("integrate: concavization term at the root") {
    double v = integrate([](double t) { return t - t * t; }, 0.5, kCubicRoot,
                         1e-10);
    CHECK(std::abs(v - (-0.125)) <= 1e-8);
}

TEST_CASE("integrate: empty interval is exactly zero") {
    double v = integrate([](double t) { return 1.0 / t; }, 0.0, 0.0, 1e-10);
    CHECK(v == 0.0);
}

TEST_CASE("integrate: non-finite integrand") {
    CHECK_THROWS_AS(
        integrate([](double t) { return 1.0 / t; }, 0.0, 1.0, 1e-10),
        NonFinite);
}

TEST_CASE("property: root stays inside the initial bracket") {
    std::mt19937_64 rng(42);
    std::uniform_real_distribution<double> shift(-3.0, 3.0);
    for (int i = 0; i < 500; ++i) {
        double s = shift(rng);
        auto f = [s](double x) { return std::atan(x - s); };
        Bracket b{s - 4.0, s + 5.0, f(s - 4.0), f(s + 5.0)};
        double r = solve_root(f, b);
        CHECK(r >= b.lo);
        CHECK(r <= b.hi);
        CHECK(std::abs(r - s) <= 1e-9);
    }
}

TEST_CASE("property: interpolation on/off agree for monotone functions") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> shift(0.2, 4.0);
    for (int i = 0; i < 200; ++i) {
        double s = shift(rng);
        auto f = [s](double x) { return std::expm1(x) - s; };
        auto b = find_bracket(f, -1.0, 1.0, 1e6);
        double with = solve_root(f, b, {}, true);
        double without = solve_root(f, b, {}, false);
        CHECK(std::abs(with - without) <= 1e-9);
    }
}

TEST_CASE("property: quadrature additivity") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> pt(0.0, 5.0);
    auto f = [](double t) { return std::sin(t) * std::exp(-0.3 * t); };
    const double tol = 1e-10;
    for (int i = 0; i < 100; ++i) {
        double a = pt(rng), b = pt(rng), c = pt(rng);
        if (a > b) std::swap(a, b);
        if (b > c) std::swap(b, c);
        if (a > b) std::swap(a, b);
        double whole = integrate(f, a, c, tol);
        double split = integrate(f, a, b, tol) + integrate(f, b, c, tol);
        CHECK(std::abs(whole - split) <= 3 * tol);
    }
}

TEST_CASE("property: odd function integrates to zero") {
    std::mt19937_64 rng(13);
    std::uniform_real_distribution<double> hs(0.1, 4.0);
    for (int i = 0; i < 100; ++i) {
        double h = hs(rng);
        double v = integrate([](double t) { return t * t * t - std::sin(t); },
                             -h, h, 1e-10);
        CHECK(std::abs(v) <= 1e-9);
    }
}
