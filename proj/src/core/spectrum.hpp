// spectrum.hpp — Fourier analysis of population time series: magnitude
// spectra and extraction of the discrete frequency comb {n w, Omega_R +- n w}.

#pragma once

#include <vector>

#include "core/params.hpp"

namespace chrw {

struct Peak {
    double frequency;  // angular frequency, parabolic-refined
    double weight;     // relative magnitude, global max = 1
};

struct Spectrum {
    std::vector<double> frequencies;  // angular, uniform grid from 0
    std::vector<double> magnitudes;
    std::vector<Peak> peaks;          // sorted by weight descending
    double noise_floor{0.0};          // roundoff scale; magnitudes below it are noise

    double bin_width() const {
        return frequencies.size() > 1 ? frequencies[1] - frequencies[0] : 0.0;
    }
};

// Mean-subtracted, Hann-windowed, zero-padded transform of a uniform series.
// Frequency resolution is 2*pi / (pad_factor * window duration). Throws
// std::invalid_argument for series shorter than 64 samples or pad_factor < 1.
Spectrum fourier_spectrum(const TimeSeries& series, int pad_factor = 8);

// Local maxima above rel_threshold * global maximum, refined by three-point
// parabolic interpolation. Sorted by weight descending.
std::vector<Peak> find_peaks(const Spectrum& s, double rel_threshold);

enum class CombKind {
    harmonic,      // n * omega, n >= 1
    rabi_plus,     // n * omega + omega_r, n >= 0
    rabi_minus,    // |n * omega - omega_r|, n >= 1
    unclassified,
};

struct CombLabel {
    CombKind kind{CombKind::unclassified};
    int n{0};
    double residual{0.0};
};

// Classify one frequency against the comb built from omega and omega_r.
CombLabel comb_match(double frequency, double omega, double omega_r, double tol);

std::vector<CombLabel> comb_match(const std::vector<Peak>& peaks, double omega,
                                  double omega_r, double tol);

}  // namespace chrw
