#include "qdeph/metrology.hpp"
#include "qdeph/special_functions.hpp"

#include <algorithm>
#include <cmath>

namespace qdeph {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr int kPointsPerDecade = 400;
constexpr int kGridDecades = 4; // grid spans [t_max * 10^-4, t_max]

double gamma_of(const SpectralDensity& sd, const CloudGeometry& g, const ThermalState& ts,
                MeasurementMode mode, double t, const QuadratureSpec& spec) {
    return mode == MeasurementMode::ghz_collective
               ? gamma_collective(sd, g, ts, t, spec)
               : gamma_single_qubit(sd, ts, t, spec);
}

double fisher_from_gamma(MeasurementMode mode, std::int64_t n_atoms, double t, double gamma) {
    const double n = static_cast<double>(n_atoms);
    const double shots = mode == MeasurementMode::ghz_collective ? n * n : n;
    return shots * t * t * std::exp(-2.0 * gamma);
}

} // namespace

double ground_state_probability(double gamma, double delta, double phi, double t,
                                std::int64_t n_qubits) {
    if (!(gamma >= 0.0)) throw std::domain_error("ground_state_probability: gamma must be >= 0");
    const double phase = static_cast<double>(n_qubits) * phi * t + delta;
    return 0.5 * (1.0 - std::exp(-gamma) * std::cos(phase));
}

double optimal_detuning(int n_branch, double t, double delta, std::int64_t n_qubits) {
    if (!(t > 0.0)) throw std::domain_error("optimal_detuning: t must be > 0");
    return ((2.0 * n_branch + 1.0) * kPi / 2.0 - delta) / (static_cast<double>(n_qubits) * t);
}

double fisher_binary(double p, double dp_dphi) {
    if (!(p > 0.0) || !(p < 1.0))
        throw std::domain_error("fisher_binary: singular probability, p must be in (0,1)");
    return dp_dphi * dp_dphi * (1.0 / p + 1.0 / (1.0 - p));
}

FisherPoint fisher_optimal(const SpectralDensity& sd, const CloudGeometry& g,
                           const ThermalState& ts, double t, MeasurementMode mode,
                           const QuadratureSpec& spec) {
    const double gamma = gamma_of(sd, g, ts, mode, t, spec);
    FisherPoint pt;
    pt.t = t;
    pt.gamma = gamma;
    pt.fisher = fisher_from_gamma(mode, g.n_atoms, t, gamma);
    return pt;
}

double cramer_rao_bound(const FisherPoint& f) {
    if (!(f.fisher > 0.0))
        throw std::domain_error("cramer_rao_bound: unbounded variance, Fisher information is 0");
    return 1.0 / f.fisher;
}

FisherPoint best_time(const SpectralDensity& sd, const CloudGeometry& g,
                      const ThermalState& ts, MeasurementMode mode, double t_max,
                      const QuadratureSpec& spec) {
    if (!(t_max > 0.0)) throw std::domain_error("best_time: t_max must be > 0");
    sd.validate();
    g.validate();
    ts.validate();

    auto gam = [&](double t) { return gamma_of(sd, g, ts, mode, t, spec); };
    // t dgamma/dt - 1; roots are the Fisher extrema at the optimal detuning.
    auto root_fn = [&](double t) {
        const double h = 1e-4 * t;
        return t * (gam(t + h) - gam(t - h)) / (2.0 * h) - 1.0;
    };

    const int n = kPointsPerDecade * kGridDecades;
    const double t_lo = t_max * std::pow(10.0, -kGridDecades);
    std::vector<double> roots;
    double prev_t = t_lo;
    double prev_v = root_fn(t_lo);
    for (int i = 1; i <= n; ++i) {
        const double t = t_lo * std::pow(10.0, static_cast<double>(i) / kPointsPerDecade);
        const double v = root_fn(t);
        if ((prev_v < 0.0 && v >= 0.0) || (prev_v > 0.0 && v <= 0.0)) {
            double a = prev_t, b = t, fa = prev_v;
            for (int it = 0; it < 48 && (b - a) > 1e-12 * b; ++it) {
                const double m = 0.5 * (a + b);
                const double fm = root_fn(m);
                if ((fa < 0.0) == (fm < 0.0)) {
                    a = m;
                    fa = fm;
                } else {
                    b = m;
                }
            }
            roots.push_back(0.5 * (a + b));
        }
        prev_t = t;
        prev_v = v;
    }

    const double t_best = roots.empty() ? t_max : roots.front();
    FisherPoint out = fisher_optimal(sd, g, ts, t_best, mode, spec);

    // Honest global check against the scan grid and the boundary.
    double f_max = fisher_from_gamma(mode, g.n_atoms, t_max, gam(t_max));
    for (int i = 0; i <= n; i += 4) {
        const double t = t_lo * std::pow(10.0, static_cast<double>(i) / kPointsPerDecade);
        f_max = std::max(f_max, fisher_from_gamma(mode, g.n_atoms, t, gam(t)));
    }
    out.is_global_max = out.fisher >= f_max * (1.0 - 1e-9);
    return out;
}

double t_best_zeno(const SpectralDensity& sd, const CloudGeometry& g,
                   const ThermalState& ts) {
    sd.validate();
    g.validate();
    ts.validate();
    const double n = static_cast<double>(g.n_atoms);
    const double a_tot = g.collective_width() + 1.0 / (sd.w_s * sd.w_s);
    const double s = sd.s;
    double two_f;
    if (ts.is_zero()) {
        two_f = 0.5 * sd.alpha_s * n * n * gamma_fn((s + 3.0) / 2.0) *
                std::pow(a_tot, -(s + 3.0) / 2.0);
    } else {
        if (!(s > -2.0))
            throw std::domain_error("t_best_zeno: finite temperature requires s > -2");
        two_f = 0.5 * sd.alpha_s * ts.theta * n * n * gamma_fn((s + 2.0) / 2.0) *
                std::pow(a_tot, -(s + 2.0) / 2.0);
    }
    return 1.0 / std::sqrt(two_f);
}

ThresholdReport classify_threshold(double s, Dimension dim, TemperatureClass tc) {
    if (!(s > -1.0)) throw std::domain_error("classify_threshold: s must be > -1");
    ThresholdReport r;
    r.s = s;
    r.dimension = dim;
    r.temperature_class = tc;
    double all_time, zeno;
    if (dim == Dimension::d3) {
        all_time = tc == TemperatureClass::zero ? 5.0 : 6.0;
        zeno = tc == TemperatureClass::zero ? 3.0 : 4.0;
    } else {
        all_time = tc == TemperatureClass::zero ? 3.0 : 4.0;
        zeno = tc == TemperatureClass::zero ? 1.0 : 2.0;
    }
    r.all_time_suppression = s > all_time; // boundary cases do not suppress
    r.zeno_suppression = s > zeno;
    return r;
}

std::vector<FisherCurve> sweep_fisher(const SpectralDensity& sd,
                                      const CloudGeometry& g_template,
                                      const ThermalState& ts, MeasurementMode mode,
                                      const std::vector<double>& t_grid,
                                      const std::vector<std::int64_t>& n_grid,
                                      const QuadratureSpec& spec) {
    if (t_grid.empty() || n_grid.empty())
        throw std::domain_error("sweep_fisher: grids must be nonempty");
    if (!std::is_sorted(t_grid.begin(), t_grid.end()) ||
        !std::is_sorted(n_grid.begin(), n_grid.end()))
        throw std::domain_error("sweep_fisher: grids must be ascending");
    std::vector<FisherCurve> out;
    out.reserve(n_grid.size());
    for (std::int64_t n : n_grid) {
        CloudGeometry g = g_template;
        g.n_atoms = n;
        FisherCurve curve;
        curve.n_atoms = n;
        curve.points.reserve(t_grid.size());
        std::size_t arg_max = 0;
        for (std::size_t i = 0; i < t_grid.size(); ++i) {
            curve.points.push_back(fisher_optimal(sd, g, ts, t_grid[i], mode, spec));
            if (curve.points[i].fisher > curve.points[arg_max].fisher) arg_max = i;
        }
        curve.points[arg_max].is_global_max = true;
        out.push_back(std::move(curve));
    }
    return out;
}

} // namespace qdeph
