#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <vector>

#include "core/exact.hpp"

using namespace chrw;

// Independent classic RK4 oracle at a fixed step.
static SpinState rk4_evolve(const DriveParams& p, SpinState s, double t0, double t1,
                            double h) {
    using cd = std::complex<double>;
    auto deriv = [&p](double t, cd up, cd down, cd& dup, cd& ddown) {
        const double field = 0.5 * (p.epsilon + p.amplitude * std::cos(p.omega * t));
        const cd mi(0.0, -1.0);
        // i d/dt psi = H psi with H = [[-field, -delta/2], [-delta/2, field]]
        dup = mi * (-field * up - 0.5 * p.delta * down);
        ddown = mi * (-0.5 * p.delta * up + field * down);
    };
    long n = std::lround((t1 - t0) / h);
    h = (t1 - t0) / static_cast<double>(n);  // land exactly on t1
    for (long i = 0; i < n; ++i) {
        double t = t0 + h * static_cast<double>(i);
        cd k1u, k1d, k2u, k2d, k3u, k3d, k4u, k4d;
        deriv(t, s.up, s.down, k1u, k1d);
        deriv(t + 0.5 * h, s.up + 0.5 * h * k1u, s.down + 0.5 * h * k1d, k2u, k2d);
        deriv(t + 0.5 * h, s.up + 0.5 * h * k2u, s.down + 0.5 * h * k2d, k3u, k3d);
        deriv(t + h, s.up + h * k3u, s.down + h * k3d, k4u, k4d);
        s.up += h / 6.0 * (k1u + 2.0 * k2u + 2.0 * k3u + k4u);
        s.down += h / 6.0 * (k1d + 2.0 * k2d + 2.0 * k3d + k4d);
    }
    return s;
}

TEST_CASE("static Hamiltonian closed form") {
    DriveParams p{1.0, 0.8, 0.0, 1.0};
    double split = std::hypot(p.delta, p.epsilon);
    double amp = p.delta * p.delta / (split * split);
    TimeSeries ts = population_up_exact(p, 0.0, 0.05, 1001);
    CHECK(ts.values[0] == 0.0);
    for (std::size_t i = 0; i < ts.values.size(); ++i) {
        double t = ts.time_at(i);
        double expect = amp * std::sin(0.5 * split * t) * std::sin(0.5 * split * t);
        CHECK(std::abs(ts.values[i] - expect) < 1e-8);
    }
}

TEST_CASE("vanishing tunneling freezes the population") {
    DriveParams p{1e-12, 1.5, 2.0, 1.0};
    TimeSeries ts = population_up_exact(p, 0.0, 0.1, 501);
    for (double v : ts.values) CHECK(v < 1e-10);
}

TEST_CASE("norm drift stays below 2e-9 over a long window") {
    DriveParams p{1.0, 1.0, std::sqrt(2.0), std::sqrt(2.0)};
    std::vector<double> grid;
    for (int i = 0; i <= 1000; ++i) grid.push_back(0.1 * i);
    std::vector<SpinState> states = evolve_exact(p, SpinState::spin_down(), grid);
    for (const SpinState& s : states) CHECK(std::abs(s.norm_sq() - 1.0) < 2e-9);
}

TEST_CASE("time reversal returns the initial state") {
    DriveParams p{1.0, 0.4, 1.3, 1.2924};
    std::vector<double> fwd = {0.0, 25.0};
    std::vector<SpinState> out = evolve_exact(p, SpinState::spin_down(), fwd);
    std::vector<double> bwd = {25.0, 0.0};
    std::vector<SpinState> back = evolve_exact(p, out.back(), bwd);
    CHECK(std::abs(back.back().up) < 1e-7);
    CHECK(std::abs(back.back().down - std::complex<double>(1.0, 0.0)) < 1e-7);
}

TEST_CASE("halving the tolerances barely moves the samples") {
    DriveParams p{1.0, 1.0, 2.0, 2.0};
    TimeSeries a = population_up_exact(p, 0.0, 0.05, 1001);
    IntegratorConfig tight;
    tight.rel_tol = 5e-11;
    tight.abs_tol = 5e-13;
    TimeSeries b = population_up_exact(p, 0.0, 0.05, 1001, tight);
    for (std::size_t i = 0; i < a.values.size(); ++i)
        CHECK(std::abs(a.values[i] - b.values[i]) < 1e-7);
}

TEST_CASE("agreement with an independent fixed-step RK4 integrator") {
    DriveParams p{1.0, 0.4, 1.3, 1.2924};
    double h = 1e-4 * 2.0 * M_PI / p.omega;
    double t1 = 20.0;
    SpinState ref = rk4_evolve(p, SpinState::spin_down(), 0.0, t1, h);
    std::vector<SpinState> out = evolve_exact(p, SpinState::spin_down(), {0.0, t1});
    CHECK(std::abs(out.back().up - ref.up) < 1e-6);
    CHECK(std::abs(out.back().down - ref.down) < 1e-6);
}

TEST_CASE("fixed-step refinement converges at order >= 4") {
    DriveParams p{1.0, 0.7, 1.1, 1.3};
    double t1 = 5.0;
    IntegratorConfig tight;
    tight.rel_tol = 1e-13;
    tight.abs_tol = 1e-14;
    SpinState ref = evolve_exact(p, SpinState::spin_down(), {0.0, t1}, tight).back();

    auto err_at = [&](double h) {
        IntegratorConfig cfg;
        cfg.fixed_step = h;
        SpinState s = evolve_exact(p, SpinState::spin_down(), {0.0, t1}, cfg).back();
        return std::abs(s.up - ref.up) + std::abs(s.down - ref.down);
    };
    double e1 = err_at(0.05);
    double e2 = err_at(0.025);
    double order = std::log2(e1 / e2);
    CHECK(order >= 4.0);
}

TEST_CASE("grid and config validation") {
    DriveParams p{1.0, 0.0, 0.0, 1.0};
    CHECK_THROWS_AS(evolve_exact(p, SpinState::spin_down(), {0.0, 1.0, 0.5}),
                    std::invalid_argument);
    CHECK_THROWS_AS(evolve_exact(p, SpinState::spin_down(), {}), std::invalid_argument);
    IntegratorConfig bad;
    bad.rel_tol = -1.0;
    CHECK_THROWS_AS(evolve_exact(p, SpinState::spin_down(), {0.0, 1.0}, bad),
                    std::invalid_argument);
    SpinState unnorm{{0.5, 0.0}, {0.5, 0.0}};
    CHECK_THROWS_AS(evolve_exact(p, unnorm, {0.0, 1.0}), std::invalid_argument);
}
