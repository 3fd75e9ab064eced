// chrw_method.hpp — Counter-rotating-hybridized rotating-wave (CHRW)
// treatment of the biased driven two-level system: the two-parameter
// self-consistency, the renormalized RWA Hamiltonian quantities, and the
// closed-form dynamics, Rabi frequencies and Bloch-Siegert shifts.

#pragma once

#include <complex>

#include "core/params.hpp"

namespace chrw {

// Self-consistent (xi, zeta) plus all renormalized quantities. Immutable
// after solve.
struct ChrwSolution {
    double xi{0.0};             // transformation parameter along sigma_z
    double zeta{0.0};           // transformation parameter along sigma_x
    double x_norm{0.0};         // X = sqrt(xi^2 + zeta^2)
    double z_arg{0.0};          // Z = (A/omega) * X, Bessel argument
    double delta_tilde{0.0};    // renormalized tunneling
    double epsilon_tilde{0.0};  // renormalized bias
    double j_c{0.0};            // (1 - J0(Z) - J2(Z)) / X^2
    double xi_big_tilde{0.0};   // renormalized splitting sqrt(dt^2 + et^2)
    double a_tilde{0.0};        // renormalized drive amplitude
    double u{0.0};              // diagonalization coefficients, u^2 + v^2 = 1
    double v{0.0};
    double detuning_tilde{0.0}; // renormalized detuning, Xi~ - omega
    double rabi_freq{0.0};      // sqrt(detuning_tilde^2 + a_tilde^2)
    double residual_norm{0.0};  // max |residual| of the self-consistency pair
};

struct Renormalized {
    double delta_tilde;
    double epsilon_tilde;
    double j_c;
    double xi_big_tilde;
    double a_tilde;
};

// Renormalized quantities at an arbitrary (xi, zeta), not necessarily the
// self-consistent point. Throws std::domain_error when xi = zeta = 0.
Renormalized renormalize(const DriveParams& p, double xi, double zeta);

struct Residuals {
    double r_xi;
    double r_zeta;
};

// The two self-consistency residuals; both vanish at the CHRW point. The
// first kills the counter-rotating coefficient, the second the cos(wt) tau_z
// coefficient of the single-harmonic part.
Residuals residuals(const DriveParams& p, double xi, double zeta);

// Analytic weak-drive limit of (xi, zeta), used as the solver seed and
// returned directly for amplitude = 0 where the pair is underdetermined.
void weak_drive_limit(const DriveParams& p, double& xi, double& zeta);

struct SolveOptions {
    double tol{1e-10};
    int max_iter{200};  // Newton iterations per continuation step
};

// Damped Newton with finite-difference Jacobian, seeded at the weak-drive
// limit and continued in amplitude so the returned root stays on the branch
// continuously connected to A -> 0. Throws std::runtime_error on
// non-convergence, std::invalid_argument on bad parameters.
ChrwSolution solve_self_consistent(const DriveParams& p, const SolveOptions& opt = {});

// Closed-form amplitudes (c1, c2) in the transformed energy basis for the
// spin-down initial condition c1(0) = -u, c2(0) = -v.
struct Amplitudes {
    std::complex<double> c1;
    std::complex<double> c2;
};
Amplitudes chrw_amplitudes(const ChrwSolution& s, const DriveParams& p, double t);

// Spin-up population at time t, initial state spin-down: evaluates the full
// back-transformed <sigma_z(t)> including the Theta(t) = Z sin(wt) phases.
double population_up(const ChrwSolution& s, const DriveParams& p, double t);

// Omega_R = sqrt((omega - Xi~)^2 + A~^2) at the self-consistent point.
double generalized_rabi_frequency(const DriveParams& p);

// Closed-form Rabi frequency to second order in the drive amplitude.
double rabi_frequency_2nd(const DriveParams& p);

// Second-order Bloch-Siegert shift, (A^2/(4 Xi0)) (1 - (3/4)(delta/Xi0)^2).
double bloch_siegert_shift_2nd(const DriveParams& p);

// Textbook second-order reference (1/4) OmegaR0^2 / Xi0 with
// OmegaR0 = (delta/2)(A/Xi0).
double second_order_bs_reference(const DriveParams& p);

struct ResonanceShift {
    double delta_omega;  // omega_res - Xi0
    double omega_res;
};

// Locate the drive frequency minimizing the full self-consistent Omega_R
// over [omega_lo, omega_hi] (golden-section search). p.omega is ignored.
// Throws std::runtime_error if no interior minimum exists in the interval.
ResonanceShift resonance_shift_numeric(const DriveParams& p, double omega_lo,
                                       double omega_hi);

}  // namespace chrw
