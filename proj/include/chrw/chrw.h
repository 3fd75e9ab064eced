/* chrw.h — C API for the biased driven two-level-system toolkit.
 *
 * All quantities are angular frequencies with hbar = 1. Functions return a
 * chrw_status; results are written through out-pointers. Opaque handles are
 * released with the matching *_free call. The library is thread-safe: handles
 * are immutable after creation and every function is pure.
 */

#ifndef CHRW_H
#define CHRW_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum chrw_status {
    CHRW_OK = 0,
    CHRW_ERR_INVALID_ARGUMENT = 1,
    CHRW_ERR_NO_CONVERGENCE = 2,
    CHRW_ERR_INTEGRATOR = 3,
    CHRW_ERR_DOMAIN = 4,
} chrw_status;

/* Static message for a status code; never NULL. */
const char* chrw_status_message(chrw_status status);

/* The four physical scales: tunneling delta > 0, static bias epsilon (any
 * sign), drive amplitude >= 0, drive frequency omega > 0. */
typedef struct chrw_params {
    double delta;
    double epsilon;
    double amplitude;
    double omega;
} chrw_params;

/* sqrt(delta^2 + epsilon^2); NaN on invalid params. */
double chrw_bare_splitting(const chrw_params* p);

/* Bessel function of the first kind, integer order (any sign). */
chrw_status chrw_bessel_j(int n, double x, double* out);

/* ---- self-consistent solution handle ---------------------------------- */

typedef struct chrw_solution chrw_solution;

typedef enum chrw_field {
    CHRW_FIELD_XI = 0,
    CHRW_FIELD_ZETA,
    CHRW_FIELD_X_NORM,
    CHRW_FIELD_Z_ARG,
    CHRW_FIELD_DELTA_TILDE,
    CHRW_FIELD_EPSILON_TILDE,
    CHRW_FIELD_J_C,
    CHRW_FIELD_XI_BIG_TILDE,
    CHRW_FIELD_A_TILDE,
    CHRW_FIELD_U,
    CHRW_FIELD_V,
    CHRW_FIELD_DETUNING_TILDE,
    CHRW_FIELD_RABI_FREQ,
    CHRW_FIELD_RESIDUAL_NORM,
    CHRW_FIELD_COUNT_,
} chrw_field;

/* Solve the two-parameter self-consistency. Pass tol <= 0 and max_iter <= 0
 * for the defaults (1e-10, 200). */
chrw_status chrw_solve(const chrw_params* p, double tol, int max_iter,
                       chrw_solution** out);
void chrw_solution_free(chrw_solution* s);
chrw_status chrw_solution_get(const chrw_solution* s, chrw_field field, double* out);

/* Spin-up population of the renormalized-RWA closed form, initial spin-down. */
chrw_status chrw_population(const chrw_solution* s, const chrw_params* p, double t,
                            double* out);
chrw_status chrw_population_series(const chrw_solution* s, const chrw_params* p,
                                   double t0, double dt, size_t count, double* out);

/* ---- frequencies and shifts ------------------------------------------- */

/* Full self-consistent generalized Rabi frequency. */
chrw_status chrw_generalized_rabi(const chrw_params* p, double* out);
/* Closed-form Rabi frequency to second order in the drive amplitude. */
chrw_status chrw_rabi_2nd(const chrw_params* p, double* out);
/* Second-order Bloch-Siegert shift (bias-modulated form). */
chrw_status chrw_bs_shift_2nd(const chrw_params* p, double* out);
/* Textbook second-order reference (1/4) OmegaR0^2 / Xi0. */
chrw_status chrw_bs_reference_2nd(const chrw_params* p, double* out);
/* Drive frequency minimizing the generalized Rabi frequency over
 * [omega_lo, omega_hi]; p->omega is ignored. delta_omega = omega_res - Xi0.
 * Either out-pointer may be NULL. */
chrw_status chrw_resonance_shift(const chrw_params* p, double omega_lo,
                                 double omega_hi, double* delta_omega,
                                 double* omega_res);

/* ---- baselines --------------------------------------------------------- */

chrw_status chrw_rabi_rwa_population(const chrw_params* p, double t, double* out);
chrw_status chrw_rabi_rwa_frequency(const chrw_params* p, double* out);
/* Nearest integer n with n*omega + epsilon = 0. */
int chrw_default_photon_n(const chrw_params* p);
/* Rotating-frame RWA population sin^2(J_n(A/omega) delta t / 2). Sets
 * *off_resonance (when non-NULL) if |n*omega + epsilon| > 1e-9 * omega. */
chrw_status chrw_rwa_rf_population(const chrw_params* p, int n, double t,
                                   double* out, int* off_resonance);

/* ---- exact integration ------------------------------------------------- */

/* P_up(t) on a uniform grid by adaptive Runge-Kutta integration of the
 * time-dependent Schrodinger equation, initial state spin-down. Pass
 * rel_tol/abs_tol <= 0 for the defaults (1e-10, 1e-12). */
chrw_status chrw_exact_population_series(const chrw_params* p, double t0, double dt,
                                         size_t count, double rel_tol, double abs_tol,
                                         double* out);

/* ---- spectra ------------------------------------------------------------ */

typedef struct chrw_spectrum chrw_spectrum;

/* Mean-subtracted, Hann-windowed, zero-padded magnitude spectrum of a
 * uniform series (count >= 64, pad_factor >= 1). */
chrw_status chrw_spectrum_compute(const double* values, size_t count, double t0,
                                  double dt, int pad_factor, chrw_spectrum** out);
void chrw_spectrum_free(chrw_spectrum* s);
size_t chrw_spectrum_size(const chrw_spectrum* s);
chrw_status chrw_spectrum_bin(const chrw_spectrum* s, size_t index, double* nu,
                              double* magnitude);
/* Peaks above rel_threshold * global max, parabolic-refined, weight-sorted.
 * Writes up to max_peaks entries; *n_found is the number available. */
chrw_status chrw_spectrum_peaks(const chrw_spectrum* s, double rel_threshold,
                                size_t max_peaks, double* frequencies,
                                double* weights, size_t* n_found);

typedef enum chrw_comb_kind {
    CHRW_COMB_HARMONIC = 0,   /* n * omega, n >= 1 */
    CHRW_COMB_RABI_PLUS = 1,  /* n * omega + omega_r, n >= 0 */
    CHRW_COMB_RABI_MINUS = 2, /* |n * omega - omega_r|, n >= 1 */
    CHRW_COMB_UNCLASSIFIED = 3,
} chrw_comb_kind;

/* Classify a peak frequency against the comb {n w, omega_r +- n w}. */
chrw_status chrw_comb_match(double frequency, double omega, double omega_r,
                            double tol, chrw_comb_kind* kind, int* n);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* CHRW_H */
