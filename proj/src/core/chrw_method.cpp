#include "core/chrw_method.hpp"

#include <algorithm>
#include <cmath>

#include "core/bessel.hpp"

namespace chrw {

namespace {

double clamp01(double x) { return std::min(1.0, std::max(0.0, x)); }

// Fill every derived field of the solution from (xi, zeta).
ChrwSolution finalize(const DriveParams& p, double xi, double zeta) {
    ChrwSolution s;
    s.xi = xi;
    s.zeta = zeta;
    s.x_norm = std::hypot(xi, zeta);
    s.z_arg = (p.amplitude / p.omega) * s.x_norm;
    const Renormalized r = renormalize(p, xi, zeta);
    s.delta_tilde = r.delta_tilde;
    s.epsilon_tilde = r.epsilon_tilde;
    s.j_c = r.j_c;
    s.xi_big_tilde = r.xi_big_tilde;
    s.a_tilde = r.a_tilde;
    s.u = std::sqrt(clamp01(0.5 - r.epsilon_tilde / (2.0 * r.xi_big_tilde)));
    s.v = std::sqrt(clamp01(0.5 + r.epsilon_tilde / (2.0 * r.xi_big_tilde)));
    s.detuning_tilde = r.xi_big_tilde - p.omega;
    s.rabi_freq = std::hypot(s.detuning_tilde, s.a_tilde);
    const Residuals res = residuals(p, xi, zeta);
    s.residual_norm = std::max(std::abs(res.r_xi), std::abs(res.r_zeta));
    return s;
}

// Damped Newton on the residual pair with central finite-difference Jacobian.
// Returns true on convergence; (xi, zeta) holds the iterate either way.
bool newton_2d(const DriveParams& p, double& xi, double& zeta, double tol,
               int max_iter) {
    for (int iter = 0; iter < max_iter; ++iter) {
        const Residuals r = residuals(p, xi, zeta);
        const double rn = std::max(std::abs(r.r_xi), std::abs(r.r_zeta));
        if (rn < tol) return true;

        const double hx = 1e-7 * std::max(1.0, std::abs(xi));
        const double hz = 1e-7 * std::max(1.0, std::abs(zeta));
        const Residuals rxp = residuals(p, xi + hx, zeta);
        const Residuals rxm = residuals(p, xi - hx, zeta);
        const Residuals rzp = residuals(p, xi, zeta + hz);
        const Residuals rzm = residuals(p, xi, zeta - hz);
        const double j00 = (rxp.r_xi - rxm.r_xi) / (2.0 * hx);
        const double j01 = (rzp.r_xi - rzm.r_xi) / (2.0 * hz);
        const double j10 = (rxp.r_zeta - rxm.r_zeta) / (2.0 * hx);
        const double j11 = (rzp.r_zeta - rzm.r_zeta) / (2.0 * hz);
        const double det = j00 * j11 - j01 * j10;
        if (!std::isfinite(det) || std::abs(det) < 1e-300) return false;
        const double dxi = -(j11 * r.r_xi - j01 * r.r_zeta) / det;
        const double dzeta = -(-j10 * r.r_xi + j00 * r.r_zeta) / det;

        const double f0 = r.r_xi * r.r_xi + r.r_zeta * r.r_zeta;
        double lambda = 1.0;
        while (lambda > 1e-8) {
            const Residuals rt = residuals(p, xi + lambda * dxi, zeta + lambda * dzeta);
            const double ft = rt.r_xi * rt.r_xi + rt.r_zeta * rt.r_zeta;
            if (std::isfinite(ft) && ft <= (1.0 - 1e-4 * lambda) * f0) break;
            lambda *= 0.5;
        }
        xi += lambda * dxi;
        zeta += lambda * dzeta;
    }
    const Residuals r = residuals(p, xi, zeta);
    return std::max(std::abs(r.r_xi), std::abs(r.r_zeta)) < tol;
}

// One-dimensional Newton on xi with zeta pinned to 0; the zeta residual is
// identically zero on the unbiased branch.
bool newton_unbiased(const DriveParams& p, double& xi, double tol, int max_iter) {
    for (int iter = 0; iter < max_iter; ++iter) {
        const Residuals r = residuals(p, xi, 0.0);
        if (std::abs(r.r_xi) < tol) return true;
        const double h = 1e-7 * std::max(1.0, std::abs(xi));
        const double drdx =
            (residuals(p, xi + h, 0.0).r_xi - residuals(p, xi - h, 0.0).r_xi) / (2.0 * h);
        if (!std::isfinite(drdx) || std::abs(drdx) < 1e-300) return false;
        const double dxi = -r.r_xi / drdx;
        double lambda = 1.0;
        const double f0 = r.r_xi * r.r_xi;
        while (lambda > 1e-8) {
            const double rt = residuals(p, xi + lambda * dxi, 0.0).r_xi;
            if (std::isfinite(rt) && rt * rt <= (1.0 - 1e-4 * lambda) * f0) break;
            lambda *= 0.5;
        }
        xi += lambda * dxi;
    }
    return std::abs(residuals(p, xi, 0.0).r_xi) < tol;
}

}  // namespace

Renormalized renormalize(const DriveParams& p, double xi, double zeta) {
    const double x2 = xi * xi + zeta * zeta;
    if (x2 == 0.0) throw std::domain_error("renormalize: (xi, zeta) = (0, 0)");
    const double x = std::sqrt(x2);
    const double z = (p.amplitude / p.omega) * x;
    const double j0 = bessel_j(0, z);
    const double j1 = bessel_j(1, z);
    const double j2 = bessel_j(2, z);
    const double mix = p.delta * xi - p.epsilon * zeta;
    Renormalized r;
    r.delta_tilde = p.delta - (xi / x2) * (1.0 - j0) * mix;
    r.epsilon_tilde = p.epsilon + (zeta / x2) * (1.0 - j0) * mix;
    r.j_c = (1.0 - j0 - j2) / x2;
    r.xi_big_tilde = std::hypot(r.delta_tilde, r.epsilon_tilde);
    r.a_tilde = 2.0 * (mix / x) * j1;
    return r;
}

Residuals residuals(const DriveParams& p, double xi, double zeta) {
    const Renormalized r = renormalize(p, xi, zeta);
    if (r.xi_big_tilde == 0.0)
        throw std::domain_error("residuals: renormalized splitting vanished");
    const double x = std::hypot(xi, zeta);
    const double z = (p.amplitude / p.omega) * x;
    const double mix = p.delta * xi - p.epsilon * zeta;
    const double g_xi = 1.0 - xi - zeta * zeta * r.j_c;
    const double g_zeta = zeta * (1.0 - xi * r.j_c);
    Residuals out;
    out.r_xi = 0.5 * p.amplitude *
                   (r.delta_tilde / r.xi_big_tilde * g_xi +
                    r.epsilon_tilde / r.xi_big_tilde * g_zeta) -
               (mix / x) * bessel_j(1, z);
    out.r_zeta = r.epsilon_tilde * g_xi - r.delta_tilde * g_zeta;
    return out;
}

void weak_drive_limit(const DriveParams& p, double& xi, double& zeta) {
    const double xi0 = bare_splitting(p);
    xi = (p.omega * xi0 + p.epsilon * p.epsilon) / (xi0 * (xi0 + p.omega));
    zeta = p.epsilon * p.delta / (xi0 * (xi0 + p.omega));
}

ChrwSolution solve_self_consistent(const DriveParams& p, const SolveOptions& opt) {
    validate(p);
    if (!(opt.tol > 0.0)) throw std::invalid_argument("solve: tol must be positive");

    double xi, zeta;
    weak_drive_limit(p, xi, zeta);

    if (p.amplitude == 0.0) {
        // Eqs. are underdetermined at zero drive; return the analytic limit.
        ChrwSolution s = finalize(p, xi, zeta);
        s.residual_norm = 0.0;
        return s;
    }

    if (p.epsilon == 0.0) {
        // zeta = 0 satisfies the bias condition identically; keep it exact.
        DriveParams q = p;
        double step = (p.amplitude / p.omega > 1.0)
                          ? std::min(0.1 * p.omega, p.amplitude / 10.0)
                          : p.amplitude;
        double a = 0.0;
        while (a < p.amplitude) {
            q.amplitude = std::min(a + step, p.amplitude);
            double xi_try = xi;
            if (newton_unbiased(q, xi_try, opt.tol, opt.max_iter) &&
                std::abs(xi_try - xi) < 0.5) {
                xi = xi_try;
                a = q.amplitude;
            } else {
                step *= 0.5;
                if (step < 1e-8 * p.amplitude)
                    throw std::runtime_error("solve: continuation stalled (unbiased)");
            }
        }
        return finalize(p, xi, 0.0);
    }

    DriveParams q = p;
    double step = (p.amplitude / p.omega > 1.0)
                      ? std::min(0.1 * p.omega, p.amplitude / 10.0)
                      : p.amplitude;
    double a = 0.0;
    while (a < p.amplitude) {
        q.amplitude = std::min(a + step, p.amplitude);
        double xi_try = xi, zeta_try = zeta;
        // A jump in the iterate signals a branch change; shrink the step.
        if (newton_2d(q, xi_try, zeta_try, opt.tol, opt.max_iter) &&
            std::hypot(xi_try - xi, zeta_try - zeta) < 0.5) {
            xi = xi_try;
            zeta = zeta_try;
            a = q.amplitude;
        } else {
            step *= 0.5;
            if (step < 1e-8 * p.amplitude) {
                const Residuals r = residuals(q, xi_try, zeta_try);
                throw std::runtime_error(
                    "solve: continuation stalled, final residual " +
                    std::to_string(std::max(std::abs(r.r_xi), std::abs(r.r_zeta))));
            }
        }
    }
    return finalize(p, xi, zeta);
}

Amplitudes chrw_amplitudes(const ChrwSolution& s, const DriveParams& p, double t) {
    using namespace std::complex_literals;
    const double half_rabi = 0.5 * s.rabi_freq * t;
    const double c = std::cos(half_rabi);
    // sin(Omega t / 2) / Omega, finite at Omega = 0
    const double sc = (s.rabi_freq > 0.0) ? std::sin(half_rabi) / s.rabi_freq : 0.5 * t;
    const std::complex<double> ph = std::exp(0.5i * p.omega * t);
    Amplitudes a;
    a.c1 = ph * (-s.u * (c + 1.0i * s.detuning_tilde * sc) + 1.0i * s.v * s.a_tilde * sc);
    a.c2 = std::conj(ph) *
           (-s.v * (c - 1.0i * s.detuning_tilde * sc) + 1.0i * s.u * s.a_tilde * sc);
    return a;
}

double population_up(const ChrwSolution& s, const DriveParams& p, double t) {
    const Amplitudes a = chrw_amplitudes(s, p, t);
    const double q1 = std::norm(a.c1) - std::norm(a.c2);
    const std::complex<double> cross = std::conj(a.c2) * a.c1;
    const double q2 = 2.0 * cross.real();   // c2* c1 + c1* c2
    const double q3 = -2.0 * cross.imag();  // i (c2* c1 - c1* c2)

    const double theta = s.z_arg * std::sin(p.omega * t);
    const double one_m_cos = 1.0 - std::cos(theta);
    const double x2 = s.x_norm * s.x_norm;
    const double w = s.v * s.v - s.u * s.u;
    const double uv2 = 2.0 * s.u * s.v;

    const double sz =
        (1.0 - (s.zeta * s.zeta / x2) * one_m_cos) * (w * q1 - uv2 * q2) -
        (s.xi * s.zeta / x2) * one_m_cos * (uv2 * q1 - w * q2) -
        (s.zeta / s.x_norm) * std::sin(theta) * q3;
    return 0.5 * (sz + 1.0);
}

double generalized_rabi_frequency(const DriveParams& p) {
    return solve_self_consistent(p).rabi_freq;
}

double rabi_frequency_2nd(const DriveParams& p) {
    const double xi0 = bare_splitting(p);
    const double d = p.omega - xi0;
    const double a2 = p.amplitude * p.amplitude * p.delta * p.delta /
                      (2.0 * xi0 * (p.omega + xi0));
    return std::sqrt(d * d + a2);
}

double bloch_siegert_shift_2nd(const DriveParams& p) {
    const double xi0 = bare_splitting(p);
    const double ratio = p.delta / xi0;
    return (p.amplitude * p.amplitude / (4.0 * xi0)) * (1.0 - 0.75 * ratio * ratio);
}

double second_order_bs_reference(const DriveParams& p) {
    const double xi0 = bare_splitting(p);
    const double omega_r0 = 0.5 * p.delta * p.amplitude / xi0;
    return 0.25 * omega_r0 * omega_r0 / xi0;
}

ResonanceShift resonance_shift_numeric(const DriveParams& p, double omega_lo,
                                       double omega_hi) {
    if (!(omega_lo > 0.0) || !(omega_hi > omega_lo))
        throw std::invalid_argument("resonance_shift: bad scan interval");
    const auto rabi_at = [&p](double w) {
        DriveParams q = p;
        q.omega = w;
        return generalized_rabi_frequency(q);
    };
    const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = omega_lo, b = omega_hi;
    double x1 = b - gr * (b - a);
    double x2 = a + gr * (b - a);
    double f1 = rabi_at(x1), f2 = rabi_at(x2);
    while ((b - a) > 1e-6 * std::max(1.0, std::abs(a))) {
        if (f1 < f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - gr * (b - a);
            f1 = rabi_at(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + gr * (b - a);
            f2 = rabi_at(x2);
        }
    }
    const double omega_res = 0.5 * (a + b);
    const double fres = rabi_at(omega_res);
    const double span = omega_hi - omega_lo;
    if ((omega_res - omega_lo < 1e-4 * span && rabi_at(omega_lo) <= fres) ||
        (omega_hi - omega_res < 1e-4 * span && rabi_at(omega_hi) <= fres))
        throw std::runtime_error("resonance_shift: no interior minimum in interval");
    return {omega_res - bare_splitting(p), omega_res};
}

}  // namespace chrw
