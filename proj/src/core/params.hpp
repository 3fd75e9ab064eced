// params.hpp — Physical parameter sets, state vectors, time grids, and the
// lab-frame Hamiltonian of a biased, sinusoidally driven two-level system.

#pragma once

#include <complex>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

namespace chrw {

// The four physical scales of the driven TLS, all angular frequencies
// (hbar = 1): H(t) = -(delta/2) sx - ((epsilon + amplitude*cos(omega t))/2) sz.
struct DriveParams {
    double delta{1.0};      // tunneling strength, > 0
    double epsilon{0.0};    // static bias, any sign
    double amplitude{0.0};  // drive amplitude, >= 0
    double omega{1.0};      // drive frequency, > 0
};

void validate(const DriveParams& p);

// Bare energy splitting Xi0 = sqrt(delta^2 + epsilon^2).
double bare_splitting(const DriveParams& p);

// Two-component amplitude vector in the sigma_z basis, ordering (up, down)
// for the (+1, -1) eigenstates.
struct SpinState {
    std::complex<double> up{0.0, 0.0};
    std::complex<double> down{1.0, 0.0};

    double norm_sq() const { return std::norm(up) + std::norm(down); }
    Eigen::Vector2cd vec() const { return {up, down}; }
    static SpinState spin_down() { return {{0.0, 0.0}, {1.0, 0.0}}; }
};

// Uniformly sampled real-valued observable with its time grid.
struct TimeSeries {
    double t0{0.0};
    double dt{0.0};
    std::vector<double> values;

    double time_at(std::size_t i) const { return t0 + dt * static_cast<double>(i); }
    double duration() const {
        return values.empty() ? 0.0 : dt * static_cast<double>(values.size() - 1);
    }
};

void validate(const TimeSeries& ts);

// Lab-frame Hamiltonian at time t in the sigma_z basis; Hermitian, traceless.
Eigen::Matrix2cd hamiltonian_at(const DriveParams& p, double t);

}  // namespace chrw
