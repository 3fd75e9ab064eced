// capi.cpp — extern-C shim over the C++ core: exception-to-status mapping
// and opaque handle management.

#include "chrw/chrw.h"

#include <cmath>
#include <new>
#include <stdexcept>

#include "core/baselines.hpp"
#include "core/bessel.hpp"
#include "core/chrw_method.hpp"
#include "core/exact.hpp"
#include "core/params.hpp"
#include "core/spectrum.hpp"

struct chrw_solution {
    chrw::ChrwSolution impl;
};

struct chrw_spectrum {
    chrw::Spectrum impl;
};

namespace {

chrw::DriveParams to_params(const chrw_params* p) {
    if (!p) throw std::invalid_argument("null params");
    return {p->delta, p->epsilon, p->amplitude, p->omega};
}

template <typename Fn>
chrw_status guarded(Fn&& fn) {
    try {
        fn();
        return CHRW_OK;
    } catch (const std::invalid_argument&) {
        return CHRW_ERR_INVALID_ARGUMENT;
    } catch (const std::domain_error&) {
        return CHRW_ERR_DOMAIN;
    } catch (const std::bad_alloc&) {
        return CHRW_ERR_INVALID_ARGUMENT;
    } catch (const std::runtime_error&) {
        return CHRW_ERR_NO_CONVERGENCE;
    } catch (...) {
        return CHRW_ERR_INVALID_ARGUMENT;
    }
}

}  // namespace

extern "C" {

const char* chrw_status_message(chrw_status status) {
    switch (status) {
        case CHRW_OK: return "ok";
        case CHRW_ERR_INVALID_ARGUMENT: return "invalid argument";
        case CHRW_ERR_NO_CONVERGENCE: return "solver did not converge";
        case CHRW_ERR_INTEGRATOR: return "integrator failure";
        case CHRW_ERR_DOMAIN: return "domain error";
    }
    return "unknown status";
}

double chrw_bare_splitting(const chrw_params* p) {
    double out = std::nan("");
    guarded([&] {
        const chrw::DriveParams q = to_params(p);
        chrw::validate(q);
        out = chrw::bare_splitting(q);
    });
    return out;
}

chrw_status chrw_bessel_j(int n, double x, double* out) {
    if (!out) return CHRW_ERR_INVALID_ARGUMENT;
    return guarded([&] { *out = chrw::bessel_j_signed(n, x); });
}

chrw_status chrw_solve(const chrw_params* p, double tol, int max_iter,
                       chrw_solution** out) {
    if (!out) return CHRW_ERR_INVALID_ARGUMENT;
    *out = nullptr;
    return guarded([&] {
        chrw::SolveOptions opt;
        if (tol > 0.0) opt.tol = tol;
        if (max_iter > 0) opt.max_iter = max_iter;
        auto* handle = new chrw_solution{chrw::solve_self_consistent(to_params(p), opt)};
        *out = handle;
    });
}

void chrw_solution_free(chrw_solution* s) { delete s; }

chrw_status chrw_solution_get(const chrw_solution* s, chrw_field field, double* out) {
    if (!s || !out) return CHRW_ERR_INVALID_ARGUMENT;
    const chrw::ChrwSolution& x = s->impl;
    switch (field) {
        case CHRW_FIELD_XI: *out = x.xi; return CHRW_OK;
        case CHRW_FIELD_ZETA: *out = x.zeta; return CHRW_OK;
        case CHRW_FIELD_X_NORM: *out = x.x_norm; return CHRW_OK;
        case CHRW_FIELD_Z_ARG: *out = x.z_arg; return CHRW_OK;
        case CHRW_FIELD_DELTA_TILDE: *out = x.delta_tilde; return CHRW_OK;
        case CHRW_FIELD_EPSILON_TILDE: *out = x.epsilon_tilde; return CHRW_OK;
        case CHRW_FIELD_J_C: *out = x.j_c; return CHRW_OK;
        case CHRW_FIELD_XI_BIG_TILDE: *out = x.xi_big_tilde; return CHRW_OK;
        case CHRW_FIELD_A_TILDE: *out = x.a_tilde; return CHRW_OK;
        case CHRW_FIELD_U: *out = x.u; return CHRW_OK;
        case CHRW_FIELD_V: *out = x.v; return CHRW_OK;
        case CHRW_FIELD_DETUNING_TILDE: *out = x.detuning_tilde; return CHRW_OK;
        case CHRW_FIELD_RABI_FREQ: *out = x.rabi_freq; return CHRW_OK;
        case CHRW_FIELD_RESIDUAL_NORM: *out = x.residual_norm; return CHRW_OK;
        case CHRW_FIELD_COUNT_: break;
    }
    return CHRW_ERR_INVALID_ARGUMENT;
}

chrw_status chrw_population(const chrw_solution* s, const chrw_params* p, double t,
                            double* out) {
    if (!s || !out) return CHRW_ERR_INVALID_ARGUMENT;
    return guarded([&] { *out = chrw::population_up(s->impl, to_params(p), t); });
}

chrw_status chrw_population_series(const chrw_solution* s, const chrw_params* p,
                                   double t0, double dt, size_t count, double* out) {
    if (!s || !out || count == 0 || !(dt > 0.0)) return CHRW_ERR_INVALID_ARGUMENT;
    return guarded([&] {
        const chrw::DriveParams q = to_params(p);
        for (size_t i = 0; i < count; ++i)
            out[i] = chrw::population_up(s->impl, q, t0 + dt * static_cast<double>(i));
    });
}

chrw_status chrw_generalized_rabi(const chrw_params* p, double* out) {
    if (!out) return CHRW_ERR_INVALID_ARGUMENT;
    return guarded([&] { *out = chrw::generalized_rabi_frequency(to_params(p)); });
}

chrw_status chrw_rabi_2nd(const chrw_params* p, double* out) {
    if (!out) return CHRW_ERR_INVALID_ARGUMENT;
    return guarded([&] {
        const chrw::DriveParams q = to_params(p);
        chrw::validate(q);
        *out = chrw::rabi_frequency_2nd(q);
    });
}

chrw_status chrw_bs_shift_2nd(const chrw_params* p, double* out) {
    if (!out) return CHRW_ERR_INVALID_ARGUMENT;
    return guarded([&] {
        const chrw::DriveParams q = to_params(p);
        chrw::validate(q);
        *out = chrw::bloch_siegert_shift_2nd(q);
    });
}

chrw_status chrw_bs_reference_2nd(const chrw_params* p, double* out) {
    if (!out) return CHRW_ERR_INVALID_ARGUMENT;
    return guarded([&] {
        const chrw::DriveParams q = to_params(p);
        chrw::validate(q);
        *out = chrw::second_order_bs_reference(q);
    });
}

chrw_status chrw_resonance_shift(const chrw_params* p, double omega_lo,
                                 double omega_hi, double* delta_omega,
                                 double* omega_res) {
    return guarded([&] {
        const chrw::ResonanceShift r =
            chrw::resonance_shift_numeric(to_params(p), omega_lo, omega_hi);
        if (delta_omega) *delta_omega = r.delta_omega;
        if (omega_res) *omega_res = r.omega_res;
    });
}

chrw_status chrw_rabi_rwa_population(const chrw_params* p, double t, double* out) {
    if (!out) return CHRW_ERR_INVALID_ARGUMENT;
    return guarded([&] { *out = chrw::rabi_rwa_population(to_params(p), t); });
}

chrw_status chrw_rabi_rwa_frequency(const chrw_params* p, double* out) {
    if (!out) return CHRW_ERR_INVALID_ARGUMENT;
    return guarded([&] { *out = chrw::rabi_rwa_frequency(to_params(p)); });
}

int chrw_default_photon_n(const chrw_params* p) {
    if (!p || !(p->omega > 0.0)) return 0;
    return chrw::default_photon_n({p->delta, p->epsilon, p->amplitude, p->omega});
}

chrw_status chrw_rwa_rf_population(const chrw_params* p, int n, double t,
                                   double* out, int* off_resonance) {
    if (!out) return CHRW_ERR_INVALID_ARGUMENT;
    return guarded([&] {
        bool warn = false;
        *out = chrw::rwa_rf_population(to_params(p), n, t, &warn);
        if (off_resonance) *off_resonance = warn ? 1 : 0;
    });
}

chrw_status chrw_exact_population_series(const chrw_params* p, double t0, double dt,
                                         size_t count, double rel_tol, double abs_tol,
                                         double* out) {
    if (!out) return CHRW_ERR_INVALID_ARGUMENT;
    chrw_status st = guarded([&] {
        chrw::IntegratorConfig cfg;
        if (rel_tol > 0.0) cfg.rel_tol = rel_tol;
        if (abs_tol > 0.0) cfg.abs_tol = abs_tol;
        const chrw::TimeSeries ts =
            chrw::population_up_exact(to_params(p), t0, dt, count, cfg);
        for (size_t i = 0; i < count; ++i) out[i] = ts.values[i];
    });
    // step-size failures surface as runtime_error; report them as integrator
    // faults rather than solver non-convergence
    if (st == CHRW_ERR_NO_CONVERGENCE) st = CHRW_ERR_INTEGRATOR;
    return st;
}

chrw_status chrw_spectrum_compute(const double* values, size_t count, double t0,
                                  double dt, int pad_factor, chrw_spectrum** out) {
    if (!values || !out) return CHRW_ERR_INVALID_ARGUMENT;
    *out = nullptr;
    return guarded([&] {
        chrw::TimeSeries ts;
        ts.t0 = t0;
        ts.dt = dt;
        ts.values.assign(values, values + count);
        *out = new chrw_spectrum{chrw::fourier_spectrum(ts, pad_factor)};
    });
}

void chrw_spectrum_free(chrw_spectrum* s) { delete s; }

size_t chrw_spectrum_size(const chrw_spectrum* s) {
    return s ? s->impl.frequencies.size() : 0;
}

chrw_status chrw_spectrum_bin(const chrw_spectrum* s, size_t index, double* nu,
                              double* magnitude) {
    if (!s || index >= s->impl.frequencies.size()) return CHRW_ERR_INVALID_ARGUMENT;
    if (nu) *nu = s->impl.frequencies[index];
    if (magnitude) *magnitude = s->impl.magnitudes[index];
    return CHRW_OK;
}

chrw_status chrw_spectrum_peaks(const chrw_spectrum* s, double rel_threshold,
                                size_t max_peaks, double* frequencies,
                                double* weights, size_t* n_found) {
    if (!s) return CHRW_ERR_INVALID_ARGUMENT;
    return guarded([&] {
        const std::vector<chrw::Peak> peaks = chrw::find_peaks(s->impl, rel_threshold);
        if (n_found) *n_found = peaks.size();
        const size_t n = std::min(max_peaks, peaks.size());
        for (size_t i = 0; i < n; ++i) {
            if (frequencies) frequencies[i] = peaks[i].frequency;
            if (weights) weights[i] = peaks[i].weight;
        }
    });
}

chrw_status chrw_comb_match(double frequency, double omega, double omega_r,
                            double tol, chrw_comb_kind* kind, int* n) {
    return guarded([&] {
        const chrw::CombLabel label = chrw::comb_match(frequency, omega, omega_r, tol);
        if (kind) *kind = static_cast<chrw_comb_kind>(label.kind);
        if (n) *n = label.n;
    });
}

}  // extern "C"
