#include "core/bessel.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace chrw {

namespace {

// Ascending power series; safe for small arguments where the leading terms
// do not suffer cancellation.
double series_jn(int n, double x) {
    const double half = 0.5 * x;
    double term = 1.0;
    for (int k = 1; k <= n; ++k) term *= half / static_cast<double>(k);
    double sum = term;
    const double x2 = -half * half;
    for (int k = 1; k <= 60; ++k) {
        term *= x2 / (static_cast<double>(k) * static_cast<double>(n + k));
        sum += term;
        if (std::abs(term) < 1e-18 * (std::abs(sum) + 1e-300)) break;
    }
    return sum;
}

// Miller downward recurrence, normalized with J0 + 2*sum_k J_{2k} = 1.
// Upward recurrence is unstable for n > x, downward is not.
double miller_jn(int n, double x) {
    const int top = std::max(n, static_cast<int>(std::ceil(x))) + 20 +
                    static_cast<int>(0.5 * x);
    const int start = top + (top % 2);  // even start keeps the norm sum aligned
    double jp = 0.0;   // J_{m+1}
    double jc = 1e-30; // J_m (arbitrary seed, removed by normalization)
    double norm = 0.0;
    double jn = 0.0;
    for (int m = start; m >= 0; --m) {
        const double jm = (2.0 * (m + 1) / x) * jc - jp;
        jp = jc;
        jc = jm;
        if (m == n) jn = jc;
        if (m % 2 == 0) norm += (m == 0) ? jc : 2.0 * jc;
        if (std::abs(jc) > 1e100) {  // rescale to avoid overflow
            jc *= 1e-100;
            jp *= 1e-100;
            norm *= 1e-100;
            jn *= 1e-100;
        }
    }
    return jn / norm;
}

constexpr double kSeriesCutoff = 8.0;

}  // namespace

double bessel_j(int n, double x) {
    if (n < 0) throw std::invalid_argument("bessel_j: order must be non-negative");
    if (!std::isfinite(x)) throw std::domain_error("bessel_j: non-finite argument");
    const double ax = std::abs(x);
    double value;
    if (ax == 0.0) {
        value = (n == 0) ? 1.0 : 0.0;
    } else if (ax <= kSeriesCutoff) {
        value = series_jn(n, ax);
    } else {
        value = miller_jn(n, ax);
    }
    if (x < 0.0 && (n % 2 != 0)) value = -value;
    return value;
}

double bessel_j_signed(int n, double x) {
    if (n >= 0) return bessel_j(n, x);
    const double v = bessel_j(-n, x);
    return ((-n) % 2 == 0) ? v : -v;
}

}  // namespace chrw
