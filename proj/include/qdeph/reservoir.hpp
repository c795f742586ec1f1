// reservoir.hpp — power-law spectral density with Gaussian cutoff and the
// thermal occupation kernel. All frequencies and temperatures are in natural
// units (frequency in the relevant cutoff, temperature in hbar*w/kB).
#pragma once

#include <stdexcept>

namespace qdeph {

struct SpectralDensity {
    double s = 4.0;        // power-law exponent, s > -1
    double alpha_s = 0.0;  // amplitude, units frequency^-(s+1)
    double w_s = 1.0;      // Gaussian cutoff frequency, > 0

    void validate() const {
        if (!(s > -1.0)) throw std::domain_error("SpectralDensity: s must be > -1");
        if (!(alpha_s >= 0.0)) throw std::domain_error("SpectralDensity: alpha_s must be >= 0");
        if (!(w_s > 0.0)) throw std::domain_error("SpectralDensity: w_s must be > 0");
    }
};

// Build a SpectralDensity from the dimensionless coupling combination
// combo = alpha_s * w_bar^(s+1) * Gamma((s+1)/2) / 2, the primary knob of
// every scenario here.
SpectralDensity spectral_density_from_combo(double s, double combo, double w_bar, double w_s);

struct ThermalState {
    double theta = 0.0; // temperature, >= 0; zero means T = 0 exactly

    void validate() const {
        if (!(theta >= 0.0)) throw std::domain_error("ThermalState: theta must be >= 0");
    }
    bool is_zero() const { return theta == 0.0; }
};

// J(w) = alpha_s w^s exp(-w^2/w_s^2) for w >= 0.
double j_eval(const SpectralDensity& sd, double w);

// coth(w/(2 theta)) for theta > 0, exactly 1 for theta = 0; w > 0 required.
// Uses the small-argument expansion 2 theta/w + w/(6 theta) when w/theta < 1e-4.
double thermal_kernel(const ThermalState& ts, double w);

} // namespace qdeph
