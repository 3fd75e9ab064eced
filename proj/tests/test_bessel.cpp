#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "core/bessel.hpp"

using chrw::bessel_j;
using chrw::bessel_j_signed;

// Independent oracle: truncated ascending series in long double,
// J_n(x) = sum_k (-1)^k (x/2)^(n+2k) / (k! (n+k)!).
static double series_oracle(int n, double x) {
    long double half = static_cast<long double>(x) / 2.0L;
    long double term = 1.0L;
    for (int k = 1; k <= n; ++k) term *= half / k;
    long double sum = term;
    for (int k = 1; k <= 60; ++k) {
        term *= -half * half / (static_cast<long double>(k) * (n + k));
        sum += term;
    }
    return static_cast<double>(sum);
}

TEST_CASE("leading values") {
    CHECK(bessel_j(0, 0.0) == 1.0);
    CHECK(bessel_j(1, 0.0) == 0.0);
    CHECK(bessel_j(7, 0.0) == 0.0);
}

TEST_CASE("matches the power-series oracle") {
    const double xs[] = {0.1, 0.5, 1.0, 2.0, 4.0, 6.0, 8.0};
    for (int n = 0; n <= 10; ++n)
        for (double x : xs)
            CHECK(std::abs(bessel_j(n, x) - series_oracle(n, x)) < 1e-12);
}

TEST_CASE("matches the standard library over the contract domain") {
    for (int n = 0; n <= 30; ++n)
        for (double x = 0.5; x <= 50.0; x += 1.37)
            CHECK(std::abs(bessel_j(n, x) - std::cyl_bessel_j(n, x)) < 2e-12);
}

TEST_CASE("first zero of J0") {
    // bisect the oracle in [2, 3]
    double lo = 2.0, hi = 3.0;
    for (int i = 0; i < 80; ++i) {
        double mid = 0.5 * (lo + hi);
        (series_oracle(0, lo) * series_oracle(0, mid) <= 0.0 ? hi : lo) = mid;
    }
    double root = 0.5 * (lo + hi);
    CHECK(root == doctest::Approx(2.40483).epsilon(1e-5));
    CHECK(std::abs(bessel_j(0, root)) < 1e-5);
}

TEST_CASE("three-term recurrence") {
    std::mt19937 rng(2024);
    std::uniform_real_distribution<double> ux(0.1, 20.0);
    std::uniform_int_distribution<int> un(1, 10);
    for (int i = 0; i < 200; ++i) {
        double x = ux(rng);
        int n = un(rng);
        double r = bessel_j(n - 1, x) + bessel_j(n + 1, x) - (2.0 * n / x) * bessel_j(n, x);
        CHECK(std::abs(r) < 1e-10);
    }
}

TEST_CASE("normalization sum") {
    for (double x = 0.5; x <= 10.0; x += 0.5) {
        double s = bessel_j(0, x) * bessel_j(0, x);
        for (int n = 1; n <= 40; ++n) {
            double j = bessel_j(n, x);
            s += 2.0 * j * j;
        }
        CHECK(s == doctest::Approx(1.0).epsilon(1e-10));
    }
}

TEST_CASE("parity in the argument and in the order") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> ux(0.1, 15.0);
    for (int i = 0; i < 100; ++i) {
        double x = ux(rng);
        for (int n = 0; n <= 6; ++n) {
            double sign = (n % 2 == 0) ? 1.0 : -1.0;
            CHECK(bessel_j(n, -x) == doctest::Approx(sign * bessel_j(n, x)).epsilon(1e-13));
            CHECK(bessel_j_signed(-n, x) ==
                  doctest::Approx(sign * bessel_j(n, x)).epsilon(1e-13));
        }
    }
}

TEST_CASE("domain errors") {
    CHECK_THROWS_AS(bessel_j(0, NAN), std::domain_error);
    CHECK_THROWS_AS(bessel_j(0, INFINITY), std::domain_error);
    CHECK_THROWS_AS(bessel_j(-1, 1.0), std::invalid_argument);
    CHECK_NOTHROW(bessel_j_signed(-3, 1.0));
}
