#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "core/params.hpp"

using namespace chrw;

TEST_CASE("bare splitting") {
    CHECK(bare_splitting({1.0, 0.0, 0.0, 1.0}) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(bare_splitting({1.0, 1.0, 0.0, 1.0}) ==
          doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
    // flux-qubit scales quoted as value/2pi GHz
    CHECK(bare_splitting({4.869, 4.154, 0.0, 1.0}) == doctest::Approx(6.400).epsilon(1e-3));
}

TEST_CASE("bare splitting is even in the bias") {
    std::mt19937 rng(12345);
    std::uniform_real_distribution<double> u(0.01, 10.0);
    for (int i = 0; i < 50; ++i) {
        double d = u(rng), e = u(rng);
        CHECK(bare_splitting({d, e, 0.0, 1.0}) == bare_splitting({d, -e, 0.0, 1.0}));
        CHECK(bare_splitting({d, e, 0.0, 1.0}) >= d);
    }
}

TEST_CASE("hamiltonian entries") {
    Eigen::Matrix2cd h = hamiltonian_at({1.0, 0.0, 0.0, 1.0}, 0.7);
    CHECK(h(0, 0).real() == doctest::Approx(0.0));
    CHECK(h(0, 1).real() == doctest::Approx(-0.5));

    h = hamiltonian_at({1.0, 1.0, 2.0, 1.0}, 0.0);
    CHECK(h(0, 0).real() == doctest::Approx(-1.5));
    CHECK(h(1, 1).real() == doctest::Approx(1.5));
    CHECK(h(0, 1).real() == doctest::Approx(-0.5));
    CHECK(h(1, 0).real() == doctest::Approx(-0.5));
}

TEST_CASE("hamiltonian is Hermitian, traceless and drive-periodic") {
    std::mt19937 rng(987);
    std::uniform_real_distribution<double> u(0.05, 5.0);
    std::uniform_real_distribution<double> tt(-20.0, 20.0);
    for (int i = 0; i < 100; ++i) {
        DriveParams p{u(rng), u(rng) - 2.5, u(rng), u(rng)};
        double t = tt(rng);
        Eigen::Matrix2cd h = hamiltonian_at(p, t);
        CHECK((h - h.adjoint()).norm() < 1e-14);
        CHECK(std::abs(h.trace()) < 1e-14);
        Eigen::Matrix2cd h2 = hamiltonian_at(p, t + 2.0 * M_PI / p.omega);
        CHECK((h - h2).norm() < 1e-12);
    }
}

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(validate(DriveParams{-1.0, 0.0, 0.0, 1.0}), std::invalid_argument);
    CHECK_THROWS_AS(validate(DriveParams{1.0, 0.0, -0.5, 1.0}), std::invalid_argument);
    CHECK_THROWS_AS(validate(DriveParams{1.0, 0.0, 0.0, 0.0}), std::invalid_argument);
    CHECK_THROWS_AS(validate(DriveParams{1.0, NAN, 0.0, 1.0}), std::invalid_argument);
    CHECK_NOTHROW(validate(DriveParams{1.0, -3.0, 2.0, 0.5}));
}

TEST_CASE("spin state plumbing") {
    SpinState s = SpinState::spin_down();
    CHECK(s.norm_sq() == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(std::abs(s.up) == 0.0);
}

TEST_CASE("time series validation") {
    TimeSeries ts;
    ts.dt = 0.1;
    ts.values = {0.0, 0.5, 1.0};
    CHECK_NOTHROW(validate(ts));
    CHECK(ts.time_at(2) == doctest::Approx(0.2));
    CHECK(ts.duration() == doctest::Approx(0.2));

    TimeSeries bad = ts;
    bad.dt = 0.0;
    CHECK_THROWS_AS(validate(bad), std::invalid_argument);
    bad = ts;
    bad.values.clear();
    CHECK_THROWS_AS(validate(bad), std::invalid_argument);
    bad = ts;
    bad.values[1] = NAN;
    CHECK_THROWS_AS(validate(bad), std::invalid_argument);
}
