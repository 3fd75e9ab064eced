#include "core/exact.hpp"

#include <cmath>
#include <numbers>

namespace chrw {

namespace {

using Eigen::Vector2cd;

Vector2cd rhs(const DriveParams& p, double t, const Vector2cd& psi) {
    const std::complex<double> mi(0.0, -1.0);
    return mi * (hamiltonian_at(p, t) * psi);
}

// Dormand-Prince 5(4) coefficients.
constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                 a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                 a64 = 49.0 / 176, a65 = -5103.0 / 18656;
constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                 b5 = -2187.0 / 6784, b6 = 11.0 / 84;
constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                 e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;

struct StepResult {
    Vector2cd y;
    double err;  // scaled error estimate, accept when <= 1
};

StepResult dp_step(const DriveParams& p, double t, const Vector2cd& y, double h,
                   const Vector2cd& k1, Vector2cd& k7_out,
                   const IntegratorConfig& cfg) {
    const Vector2cd k2 = rhs(p, t + c2 * h, y + h * (a21 * k1));
    const Vector2cd k3 = rhs(p, t + c3 * h, y + h * (a31 * k1 + a32 * k2));
    const Vector2cd k4 = rhs(p, t + c4 * h, y + h * (a41 * k1 + a42 * k2 + a43 * k3));
    const Vector2cd k5 =
        rhs(p, t + c5 * h, y + h * (a51 * k1 + a52 * k2 + a53 * k3 + a54 * k4));
    const Vector2cd k6 =
        rhs(p, t + h, y + h * (a61 * k1 + a62 * k2 + a63 * k3 + a64 * k4 + a65 * k5));
    const Vector2cd ynew =
        y + h * (b1 * k1 + b3 * k3 + b4 * k4 + b5 * k5 + b6 * k6);
    const Vector2cd k7 = rhs(p, t + h, ynew);
    const Vector2cd errv =
        h * (e1 * k1 + e3 * k3 + e4 * k4 + e5 * k5 + e6 * k6 + e7 * k7);
    double err = 0.0;
    for (int i = 0; i < 2; ++i) {
        const double scale =
            cfg.abs_tol + cfg.rel_tol * std::max(std::abs(y[i]), std::abs(ynew[i]));
        const double r = std::abs(errv[i]) / scale;
        err += r * r;
    }
    k7_out = k7;
    return {ynew, std::sqrt(0.5 * err)};
}

}  // namespace

std::vector<SpinState> evolve_exact(const DriveParams& p, const SpinState& initial,
                                    const std::vector<double>& t_grid,
                                    const IntegratorConfig& cfg) {
    validate(p);
    if (t_grid.empty()) throw std::invalid_argument("evolve_exact: empty time grid");
    if (std::abs(initial.norm_sq() - 1.0) > 1e-9)
        throw std::invalid_argument("evolve_exact: initial state not normalized");
    if (!(cfg.rel_tol > 0.0) || !(cfg.abs_tol > 0.0))
        throw std::invalid_argument("evolve_exact: tolerances must be positive");
    const double dir = (t_grid.size() > 1 && t_grid.back() < t_grid.front()) ? -1.0 : 1.0;
    for (std::size_t i = 1; i < t_grid.size(); ++i)
        if (dir * (t_grid[i] - t_grid[i - 1]) <= 0.0)
            throw std::invalid_argument("evolve_exact: grid not strictly monotonic");

    const double period = 2.0 * std::numbers::pi / p.omega;
    const double hmax = cfg.max_step_fraction * period;

    std::vector<SpinState> out;
    out.reserve(t_grid.size());
    Vector2cd y = initial.vec();
    double t = t_grid.front();
    out.push_back({y[0], y[1]});

    double h = dir * ((cfg.fixed_step > 0.0) ? cfg.fixed_step : std::min(hmax, 1e-3 * period));
    Vector2cd k1 = rhs(p, t, y);

    for (std::size_t i = 1; i < t_grid.size(); ++i) {
        const double target = t_grid[i];
        while (dir * (target - t) > 0.0) {
            double hstep = h;
            if (std::abs(hstep) > hmax) hstep = dir * hmax;
            if (dir * (t + hstep - target) > 0.0) hstep = target - t;  // land on grid

            Vector2cd k7;
            const StepResult s = dp_step(p, t, y, hstep, k1, k7, cfg);
            if (cfg.fixed_step > 0.0 || s.err <= 1.0) {
                t += hstep;
                y = s.y;
                k1 = k7;  // FSAL
                if (cfg.fixed_step == 0.0) {
                    const double grow =
                        std::clamp(0.9 * std::pow(std::max(s.err, 1e-10), -0.2), 0.2, 5.0);
                    h = dir * std::min(std::abs(hstep) * grow, hmax);
                }
            } else {
                const double shrink =
                    std::clamp(0.9 * std::pow(s.err, -0.2), 0.1, 0.9);
                h = hstep * shrink;
                if (std::abs(h) < 1e-15 * std::max(1.0, std::abs(t)))
                    throw std::runtime_error("evolve_exact: step size underflow");
            }
        }
        out.push_back({y[0], y[1]});
    }
    return out;
}

TimeSeries population_up_exact(const DriveParams& p, double t0, double dt,
                               std::size_t count, const IntegratorConfig& cfg) {
    if (!(dt > 0.0) || count == 0)
        throw std::invalid_argument("population_up_exact: bad grid");
    std::vector<double> grid(count);
    for (std::size_t i = 0; i < count; ++i) grid[i] = t0 + dt * static_cast<double>(i);
    const std::vector<SpinState> states = evolve_exact(p, SpinState::spin_down(), grid, cfg);
    TimeSeries ts;
    ts.t0 = t0;
    ts.dt = dt;
    ts.values.resize(count);
    for (std::size_t i = 0; i < count; ++i) ts.values[i] = std::norm(states[i].up);
    return ts;
}

}  // namespace chrw
