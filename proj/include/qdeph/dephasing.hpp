// dephasing.hpp — collective and single-qubit dephasing factors, the
// reservoir-induced frequency shift, stationary asymptotics, and the
// discrete-atom Monte Carlo oracle.
//
// The collective integrand is the product of the spectral density (with its
// own Gaussian cutoff w_s) and the collective suppression factor
// exp(-w^2 sigma^2 N^(2/3) / c^2); the single-qubit integrand carries the
// spectral-density cutoff alone.
#pragma once

#include "qdeph/cloud.hpp"
#include "qdeph/quadrature.hpp"
#include "qdeph/reservoir.hpp"

namespace qdeph {

struct DephasingResult {
    double gamma = 0.0; // dephasing factor, >= 0, 0 at t = 0
    double delta = 0.0; // frequency-shift phase (radians), 0 at t = 0
    double t = 0.0;     // time in inverse-frequency units
};

// gamma_N(theta, t) = N^2 Int_0^inf dw J(w) (1 - cos wt) coth(w/2theta)
//                     exp(-w^2 sigma^2 N^(2/3)/c^2)
double gamma_collective(const SpectralDensity& sd, const CloudGeometry& g,
                        const ThermalState& ts, double t, const QuadratureSpec& spec);

struct ClosedFormT0 {
    double gamma = 0.0;
    // Set when w_s < 10 w_bar / N^(1/3): the cutoff is then comparable to the
    // collective scale and the usual cutoff-free reading of the closed form
    // (and its quoted asymptotics) is unreliable.
    bool cutoff_warning = false;
};

/**
 * Zero-temperature closed form of gamma_collective. The Gaussian widths of
 * the spectral density and of the collective factor combine exactly, so with
 * a_tot = sigma^2 N^(2/3)/c^2 + 1/w_s^2 and z = t^2/(4 a_tot):
 *
 *   gamma = (alpha_s/2) N^2 Gamma((s+1)/2) a_tot^(-(s+1)/2)
 *           [1 - e^(-z) M(-s/2, 1/2, z)].
 *
 * For w_s >> w_bar/N^(1/3) this reduces to the familiar
 * (alpha_s/2) N^(2-(s+1)/3) w_bar^(s+1) Gamma((s+1)/2) [1 - e^(-z) M].
 */
ClosedFormT0 gamma_closed_form_T0(const SpectralDensity& sd, const CloudGeometry& g,
                                  double t);

// Single qubit: Int_0^inf dw J(w) (1 - cos wt) coth(w/2theta); the spectral
// density's own exp(-w^2/w_s^2) is the only Gaussian factor.
double gamma_single_qubit(const SpectralDensity& sd, const ThermalState& ts, double t,
                          const QuadratureSpec& spec);

// t -> infinity limit. theta = 0: (alpha_s/2) N^(2-(s+1)/3) w_bar^(s+1)
// Gamma((s+1)/2) (requires s > -1). theta > 0: quadrature with the cos term
// dropped (requires s > 0).
double gamma_stationary(const SpectralDensity& sd, const CloudGeometry& g,
                        const ThermalState& ts, const QuadratureSpec& spec);

// Temperature-independent frequency shift:
// Delta_N(t) = -N^2 Int_0^inf dw J(w) (wt - sin wt) exp(-w^2 sigma^2 N^(2/3)/c^2)
double delta_shift(const SpectralDensity& sd, const CloudGeometry& g, double t,
                   const QuadratureSpec& spec);

// gamma and Delta at one time.
DephasingResult dephasing_at(const SpectralDensity& sd, const CloudGeometry& g,
                             const ThermalState& ts, double t, const QuadratureSpec& spec);

struct OracleGamma {
    double total = 0.0;      // full discrete-configuration dephasing factor
    double pair_terms = 0.0; // interference (i != j) part; total - pair_terms is
                             // the incoherent single-atom contribution N*gamma_1
};

// Exact finite-N dephasing for one atom configuration under isotropic linear
// dispersion: Int_0^inf dw J(w) (1 - cos wt) coth(w/2theta) S(w/c) with S the
// angular-averaged discrete structure factor.
OracleGamma gamma_discrete_oracle(const SpectralDensity& sd, const AtomPositions& p,
                                  const CloudGeometry& g, const ThermalState& ts,
                                  double t, const QuadratureSpec& spec);

} // namespace qdeph
