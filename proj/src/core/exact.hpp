// exact.hpp — Direct integration of the time-dependent Schrodinger equation
// for the driven TLS; the numerical ground truth for every approximation.

#pragma once

#include <vector>

#include "core/params.hpp"

namespace chrw {

struct IntegratorConfig {
    double rel_tol{1e-10};
    double abs_tol{1e-12};
    double max_step_fraction{0.1};  // of the drive period 2*pi/omega
    double fixed_step{0.0};         // > 0 switches off adaptivity
};

// Integrate i d|psi>/dt = H(t)|psi> from the first grid time, emitting the
// state at every grid point. The grid must be strictly monotonic; decreasing
// grids integrate backwards. Throws std::runtime_error on step underflow.
std::vector<SpinState> evolve_exact(const DriveParams& p, const SpinState& initial,
                                    const std::vector<double>& t_grid,
                                    const IntegratorConfig& cfg = {});

// |<up|psi(t)>|^2 on a uniform grid for the spin-down initial state.
TimeSeries population_up_exact(const DriveParams& p, double t0, double dt,
                               std::size_t count, const IntegratorConfig& cfg = {});

}  // namespace chrw
