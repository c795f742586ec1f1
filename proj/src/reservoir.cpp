#include "qdeph/reservoir.hpp"
#include "qdeph/special_functions.hpp"

#include <cmath>
#include <limits>

namespace qdeph {

SpectralDensity spectral_density_from_combo(double s, double combo, double w_bar, double w_s) {
    if (!(w_bar > 0.0)) throw std::domain_error("spectral_density_from_combo: w_bar must be > 0");
    if (!(combo >= 0.0)) throw std::domain_error("spectral_density_from_combo: combo must be >= 0");
    SpectralDensity sd;
    sd.s = s;
    sd.w_s = w_s;
    sd.alpha_s = 2.0 * combo / (std::pow(w_bar, s + 1.0) * gamma_fn((s + 1.0) / 2.0));
    sd.validate();
    return sd;
}

double j_eval(const SpectralDensity& sd, double w) {
    sd.validate();
    if (w < 0.0) throw std::domain_error("j_eval: w must be >= 0");
    if (w == 0.0) {
        if (sd.s > 0.0) return 0.0;
        if (sd.s == 0.0) return sd.alpha_s;
        return std::numeric_limits<double>::infinity(); // -1 < s < 0
    }
    const double x = w / sd.w_s;
    return sd.alpha_s * std::pow(w, sd.s) * std::exp(-x * x);
}

double thermal_kernel(const ThermalState& ts, double w) {
    ts.validate();
    if (!(w > 0.0)) throw std::domain_error("thermal_kernel: w must be > 0");
    if (ts.is_zero()) return 1.0;
    if (w / ts.theta < 1e-4) return 2.0 * ts.theta / w + w / (6.0 * ts.theta);
    return 1.0 / std::tanh(w / (2.0 * ts.theta));
}

} // namespace qdeph
