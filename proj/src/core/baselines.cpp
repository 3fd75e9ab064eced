#include "core/baselines.hpp"

#include <cmath>

#include "core/bessel.hpp"

namespace chrw {

RabiRwaFrame rabi_rwa_frame(const DriveParams& p) {
    validate(p);
    const double xi0 = bare_splitting(p);
    RabiRwaFrame f;
    f.u0 = std::sqrt(0.5 - p.epsilon / (2.0 * xi0));
    f.v0 = std::sqrt(0.5 + p.epsilon / (2.0 * xi0));
    f.a_x = p.amplitude * p.delta / xi0;
    f.a_z = p.amplitude * p.epsilon / xi0;
    f.detuning = xi0 - p.omega;
    f.omega_rr = std::hypot(f.detuning, 0.5 * f.a_x);
    return f;
}

double rabi_rwa_population(const DriveParams& p, double t) {
    const RabiRwaFrame f = rabi_rwa_frame(p);
    const double xi0 = bare_splitting(p);
    const double eps_r = p.epsilon / xi0;
    const double del_r = p.delta / xi0;
    const double om = f.omega_rr;

    // sin^2(om t / 2) / om^2 and sin(om t) / om, finite at om = 0
    const double half = 0.5 * om * t;
    const double s2 = (om > 0.0) ? std::pow(std::sin(half) / om, 2) : 0.25 * t * t;
    const double snc = (om > 0.0) ? std::sin(om * t) / om : t;

    const double sz =
        -eps_r * (eps_r * (1.0 - 0.5 * f.a_x * f.a_x * s2) +
                  del_r * f.detuning * f.a_x * s2) -
        del_r * (std::cos(p.omega * t) *
                     (del_r - (del_r * 2.0 * f.detuning * f.detuning -
                               eps_r * f.detuning * f.a_x) *
                                  s2) -
                 std::sin(p.omega * t) *
                     (p.delta * f.detuning - 0.5 * p.epsilon * f.a_x) / xi0 * snc);
    return 0.5 * (sz + 1.0);
}

double rabi_rwa_frequency(const DriveParams& p) {
    return rabi_rwa_frame(p).omega_rr;
}

int default_photon_n(const DriveParams& p) {
    return -static_cast<int>(std::lround(p.epsilon / p.omega));
}

double rwa_rf_population(const DriveParams& p, int n, double t, bool* off_resonance) {
    validate(p);
    if (off_resonance)
        *off_resonance = std::abs(n * p.omega + p.epsilon) > 1e-9 * p.omega;
    const double jn = bessel_j_signed(n, p.amplitude / p.omega);
    const double s = std::sin(0.5 * jn * p.delta * t);
    return s * s;
}

}  // namespace chrw
