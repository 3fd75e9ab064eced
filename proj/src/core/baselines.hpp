// baselines.hpp — Closed-form comparison methods: the conventional
// rotating-wave approximation in the energy eigenbasis (Rabi-RWA) and the
// rotating-frame RWA (RWA-RF), including coherent destruction of tunneling.

#pragma once

#include "core/params.hpp"

namespace chrw {

// Energy-basis rotation and rotating-frame quantities of the Rabi-RWA.
struct RabiRwaFrame {
    double u0;        // rotation coefficients, u0^2 + v0^2 = 1
    double v0;
    double a_x;       // A * delta / Xi0
    double a_z;       // A * epsilon / Xi0
    double detuning;  // Xi0 - omega
    double omega_rr;  // sqrt(detuning^2 + (a_x/2)^2)
};

RabiRwaFrame rabi_rwa_frame(const DriveParams& p);

// Spin-up population of the Rabi-RWA closed form, initial state spin-down.
double rabi_rwa_population(const DriveParams& p, double t);

// Omega_RR = sqrt((Xi0 - omega)^2 + (A delta / (2 Xi0))^2).
double rabi_rwa_frequency(const DriveParams& p);

// Photon number matching the resonance condition n*omega + epsilon = 0.
int default_photon_n(const DriveParams& p);

// RWA-RF population sin^2(J_n(A/omega) delta t / 2). Valid on resonance
// (n*omega + epsilon = 0); off resonance the closed form is still evaluated
// and off_resonance (when non-null) is set.
double rwa_rf_population(const DriveParams& p, int n, double t,
                         bool* off_resonance = nullptr);

}  // namespace chrw
