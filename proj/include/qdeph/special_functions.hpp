// special_functions.hpp — Gamma and confluent hypergeometric (Kummer) functions
// on the real domain needed by the dephasing closed forms.
#pragma once

namespace qdeph {

// Gamma(x) for x > 0; throws std::domain_error otherwise.
double gamma_fn(double x);

/**
 * Kummer's confluent hypergeometric M(a, b, z) for z >= 0.
 *
 * When a is a non-positive integer the defining series terminates and is
 * summed exactly as a polynomial (valid for any z). Otherwise the power
 * series is used below an a-dependent switch point and the large-z expansion
 *     M(a,b,z) ~ Gamma(b)/Gamma(a) e^z z^(a-b) S1 +
 *                cos(pi a) Gamma(b)/Gamma(b-a) z^(-a) S2
 * above it; both asymptotic sums are truncated at their smallest term.
 *
 * Throws std::domain_error for z < 0 or b a non-positive integer, and
 * accuracy_error when neither branch can reach ~1e-9 relative accuracy
 * (e.g. e^z overflows).
 */
double kummer_m(double a, double b, double z);

// e^(-z) M(a, b, z): the combination entering the dephasing bracket.
// Avoids overflow at large z where M itself exceeds double range.
double kummer_em(double a, double b, double z);

namespace detail {
// Branch switch point between the power series and the large-z expansion.
double kummer_switch_z(double a);
// The two branches of kummer_em, individually addressable so tests can
// verify their agreement across the crossover window.
double kummer_em_series(double a, double b, double z);
double kummer_em_asym(double a, double b, double z);
} // namespace detail

} // namespace qdeph
