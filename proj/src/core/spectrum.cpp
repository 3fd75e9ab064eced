#include "core/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <complex>
#include <mutex>
#include <numbers>

#include <fftw3.h>

namespace chrw {

namespace {

constexpr double kDefaultPeakThreshold = 1e-3;

// FFTW plan creation is not thread-safe.
std::mutex& fftw_mutex() {
    static std::mutex m;
    return m;
}

void consider(double f, double cand, CombKind kind, int n, CombLabel& best) {
    const double r = std::abs(f - cand);
    if (best.kind == CombKind::unclassified || r < best.residual) {
        best = {kind, n, r};
    }
}

}  // namespace

Spectrum fourier_spectrum(const TimeSeries& series, int pad_factor) {
    validate(series);
    if (series.values.size() < 64)
        throw std::invalid_argument("fourier_spectrum: series shorter than 64 samples");
    if (pad_factor < 1)
        throw std::invalid_argument("fourier_spectrum: pad_factor must be >= 1");

    const std::size_t n = series.values.size();
    double mean = 0.0;
    for (double v : series.values) mean += v;
    mean /= static_cast<double>(n);

    const std::size_t padded = n * static_cast<std::size_t>(pad_factor);
    std::vector<double> in(padded, 0.0);
    double amp = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double w =
            0.5 * (1.0 - std::cos(2.0 * std::numbers::pi * static_cast<double>(i) /
                                  static_cast<double>(n - 1)));
        in[i] = (series.values[i] - mean) * w;
        amp = std::max(amp, std::abs(series.values[i] - mean));
    }

    const std::size_t nout = padded / 2 + 1;
    std::vector<std::complex<double>> out(nout);
    {
        std::lock_guard<std::mutex> lock(fftw_mutex());
        fftw_plan plan = fftw_plan_dft_r2c_1d(
            static_cast<int>(padded), in.data(),
            reinterpret_cast<fftw_complex*>(out.data()), FFTW_ESTIMATE);
        fftw_execute(plan);
        fftw_destroy_plan(plan);
    }

    Spectrum s;
    s.frequencies.resize(nout);
    s.magnitudes.resize(nout);
    const double dnu =
        2.0 * std::numbers::pi / (static_cast<double>(padded) * series.dt);
    for (std::size_t k = 0; k < nout; ++k) {
        s.frequencies[k] = dnu * static_cast<double>(k);
        s.magnitudes[k] = std::abs(out[k]);
    }
    // mean subtraction leaves O(n * eps * |mean|) residuals (roundoff in the
    // running sum) and the DFT adds up to n of them coherently
    s.noise_floor = static_cast<double>(n) * static_cast<double>(n) *
                    std::numeric_limits<double>::epsilon() * (std::abs(mean) + amp);
    s.peaks = find_peaks(s, kDefaultPeakThreshold);
    return s;
}

std::vector<Peak> find_peaks(const Spectrum& s, double rel_threshold) {
    if (!(rel_threshold > 0.0) || !(rel_threshold <= 1.0))
        throw std::invalid_argument("find_peaks: threshold must be in (0, 1]");
    std::vector<Peak> peaks;
    if (s.magnitudes.size() < 3) return peaks;
    const double gmax = *std::max_element(s.magnitudes.begin(), s.magnitudes.end());
    if (gmax <= s.noise_floor || gmax <= 0.0) return peaks;
    const double floor = rel_threshold * gmax;
    const double dnu = s.bin_width();
    for (std::size_t k = 1; k + 1 < s.magnitudes.size(); ++k) {
        const double m = s.magnitudes[k];
        if (m < floor) continue;
        if (m < s.magnitudes[k - 1] || m < s.magnitudes[k + 1]) continue;
        if (m == s.magnitudes[k - 1] && m == s.magnitudes[k + 1]) continue;
        // three-point parabolic refinement
        const double ym = s.magnitudes[k - 1], y0 = m, yp = s.magnitudes[k + 1];
        const double denom = ym - 2.0 * y0 + yp;
        const double shift = (denom != 0.0) ? 0.5 * (ym - yp) / denom : 0.0;
        peaks.push_back({s.frequencies[k] + shift * dnu, m / gmax});
    }
    std::sort(peaks.begin(), peaks.end(),
              [](const Peak& a, const Peak& b) { return a.weight > b.weight; });
    return peaks;
}

CombLabel comb_match(double frequency, double omega, double omega_r, double tol) {
    if (!(tol > 0.0)) throw std::invalid_argument("comb_match: tol must be positive");
    CombLabel best;
    best.residual = std::numeric_limits<double>::infinity();
    best.kind = CombKind::unclassified;

    const int nh = static_cast<int>(std::lround(frequency / omega));
    if (nh >= 1) consider(frequency, nh * omega, CombKind::harmonic, nh, best);

    const int np = static_cast<int>(std::lround((frequency - omega_r) / omega));
    if (np >= 0) consider(frequency, np * omega + omega_r, CombKind::rabi_plus, np, best);

    const int nm1 = static_cast<int>(std::lround((frequency + omega_r) / omega));
    if (nm1 >= 1)
        consider(frequency, std::abs(nm1 * omega - omega_r), CombKind::rabi_minus, nm1, best);
    const int nm2 = static_cast<int>(std::lround((omega_r - frequency) / omega));
    if (nm2 >= 1)
        consider(frequency, std::abs(nm2 * omega - omega_r), CombKind::rabi_minus, nm2, best);

    if (best.residual > tol) return {CombKind::unclassified, 0, best.residual};
    return best;
}

std::vector<CombLabel> comb_match(const std::vector<Peak>& peaks, double omega,
                                  double omega_r, double tol) {
    std::vector<CombLabel> labels;
    labels.reserve(peaks.size());
    for (const Peak& pk : peaks) labels.push_back(comb_match(pk.frequency, omega, omega_r, tol));
    return labels;
}

}  // namespace chrw
