#include "qdeph/dephasing.hpp"
#include "qdeph/special_functions.hpp"

#include <cmath>

namespace qdeph {

namespace {

constexpr double kTwoPi = 6.28318530717958647692;

// 1 - cos(x) without cancellation at small x.
double one_minus_cos(double x) {
    const double s = std::sin(0.5 * x);
    return 2.0 * s * s;
}

// x - sin(x); series below x ~ 1e-3 where the direct difference loses digits.
double x_minus_sin(double x) {
    const double ax = std::abs(x);
    if (ax < 1e-3) {
        const double x2 = x * x;
        return x * x2 / 6.0 * (1.0 - x2 / 20.0 * (1.0 - x2 / 42.0));
    }
    return x - std::sin(x);
}

double checked_time(double t) {
    if (!(t >= 0.0)) throw std::domain_error("dephasing: t must be >= 0");
    return t;
}

} // namespace

double gamma_collective(const SpectralDensity& sd, const CloudGeometry& g,
                        const ThermalState& ts, double t, const QuadratureSpec& spec) {
    sd.validate();
    g.validate();
    ts.validate();
    checked_time(t);
    if (t == 0.0) return 0.0;
    const double n = static_cast<double>(g.n_atoms);
    const double a = g.collective_width();
    auto f = [&](double w) {
        if (w <= 0.0) return 0.0;
        return n * n * j_eval(sd, w) * one_minus_cos(w * t) * thermal_kernel(ts, w) *
               std::exp(-a * w * w);
    };
    return integrate_semi_infinite(f, kTwoPi / t, spec).value;
}

ClosedFormT0 gamma_closed_form_T0(const SpectralDensity& sd, const CloudGeometry& g,
                                  double t) {
    sd.validate();
    g.validate();
    checked_time(t);
    const double n = static_cast<double>(g.n_atoms);
    const double a_tot = g.collective_width() + 1.0 / (sd.w_s * sd.w_s);
    const double s = sd.s;
    ClosedFormT0 out;
    out.cutoff_warning = sd.w_s * std::cbrt(n) < 10.0 * g.w_bar();
    if (t == 0.0) return out;
    const double prefactor = 0.5 * sd.alpha_s * n * n * gamma_fn((s + 1.0) / 2.0) *
                             std::pow(a_tot, -(s + 1.0) / 2.0);
    const double z = t * t / (4.0 * a_tot);
    out.gamma = prefactor * (1.0 - kummer_em(-0.5 * s, 0.5, z));
    return out;
}

double gamma_single_qubit(const SpectralDensity& sd, const ThermalState& ts, double t,
                          const QuadratureSpec& spec) {
    sd.validate();
    ts.validate();
    checked_time(t);
    if (t == 0.0) return 0.0;
    auto f = [&](double w) {
        if (w <= 0.0) return 0.0;
        return j_eval(sd, w) * one_minus_cos(w * t) * thermal_kernel(ts, w);
    };
    return integrate_semi_infinite(f, kTwoPi / t, spec).value;
}

double gamma_stationary(const SpectralDensity& sd, const CloudGeometry& g,
                        const ThermalState& ts, const QuadratureSpec& spec) {
    sd.validate();
    g.validate();
    ts.validate();
    const double n = static_cast<double>(g.n_atoms);
    const double s = sd.s;
    if (ts.is_zero()) {
        return 0.5 * sd.alpha_s * std::pow(n, 2.0 - (s + 1.0) / 3.0) *
               std::pow(g.w_bar(), s + 1.0) * gamma_fn((s + 1.0) / 2.0);
    }
    if (!(s > 0.0))
        throw std::domain_error("gamma_stationary: finite temperature requires s > 0");
    const double a = g.collective_width();
    auto f = [&](double w) {
        if (w <= 0.0) return 0.0;
        return n * n * j_eval(sd, w) * thermal_kernel(ts, w) * std::exp(-a * w * w);
    };
    return integrate_semi_infinite(f, std::nullopt, spec).value;
}

double delta_shift(const SpectralDensity& sd, const CloudGeometry& g, double t,
                   const QuadratureSpec& spec) {
    sd.validate();
    g.validate();
    checked_time(t);
    if (t == 0.0) return 0.0;
    const double n = static_cast<double>(g.n_atoms);
    const double a = g.collective_width();
    auto f = [&](double w) {
        if (w <= 0.0) return 0.0;
        return n * n * j_eval(sd, w) * x_minus_sin(w * t) * std::exp(-a * w * w);
    };
    return -integrate_semi_infinite(f, kTwoPi / t, spec).value;
}

DephasingResult dephasing_at(const SpectralDensity& sd, const CloudGeometry& g,
                             const ThermalState& ts, double t, const QuadratureSpec& spec) {
    DephasingResult r;
    r.t = t;
    r.gamma = gamma_collective(sd, g, ts, t, spec);
    r.delta = delta_shift(sd, g, t, spec);
    return r;
}

OracleGamma gamma_discrete_oracle(const SpectralDensity& sd, const AtomPositions& p,
                                  const CloudGeometry& g, const ThermalState& ts,
                                  double t, const QuadratureSpec& spec) {
    sd.validate();
    g.validate();
    ts.validate();
    checked_time(t);
    if (p.size() != static_cast<std::size_t>(g.n_atoms))
        throw std::domain_error("gamma_discrete_oracle: positions do not match n_atoms");
    OracleGamma out;
    if (t == 0.0) return out;
    const std::vector<double> dist = pairwise_distances(p);
    auto f = [&](double w) {
        if (w <= 0.0) return 0.0;
        const double k = w / g.c;
        return j_eval(sd, w) * one_minus_cos(w * t) * thermal_kernel(ts, w) *
               structure_factor_from_distances(p.size(), dist, k);
    };
    out.total = integrate_semi_infinite(f, kTwoPi / t, spec).value;
    const double diag = static_cast<double>(g.n_atoms) * gamma_single_qubit(sd, ts, t, spec);
    out.pair_terms = out.total - diag;
    return out;
}

} // namespace qdeph
