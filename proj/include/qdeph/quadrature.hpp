// quadrature.hpp — adaptive Gauss–Kronrod integration on [0, inf) for
// integrands with Gaussian/exponential decay, optionally oscillatory.
#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>

namespace qdeph {

struct QuadratureSpec {
    double rel_tol = 1e-9;    // relative tolerance on the accumulated integral
    double abs_tol = 1e-14;   // absolute floor; also gates the tail truncation
    int max_panels = 4000;    // cap on the total number of panels

    void validate() const {
        if (!(rel_tol > 0.0)) throw std::domain_error("QuadratureSpec: rel_tol must be > 0");
        if (!(abs_tol >= 0.0)) throw std::domain_error("QuadratureSpec: abs_tol must be >= 0");
        if (max_panels < 1) throw std::domain_error("QuadratureSpec: max_panels must be >= 1");
    }
};

// Thrown when the requested accuracy is unreachable; carries the best
// estimate obtained and a bound on its error.
class accuracy_error : public std::runtime_error {
public:
    accuracy_error(const std::string& what, double best, double bound)
        : std::runtime_error(what), best_estimate(best), error_bound(bound) {}
    double best_estimate;
    double error_bound;
};

struct IntegralResult {
    double value = 0.0;
    double error_bound = 0.0;
    int panels = 0;
};

/**
 * Integrate f over (0, inf).
 *
 * When oscillation_period is given (the period 2*pi/t of a cos(w t) factor),
 * the initial panel boundaries are aligned with half-periods until the decay
 * envelope suppresses the integrand; otherwise dyadic blocks [0,1],[1,2],
 * [2,4],... are used. Panels are then refined worst-first until the summed
 * Kronrod error estimate meets max(abs_tol, rel_tol*|I|). The reported bound
 * includes a tail term; it is non-increasing in max_panels.
 *
 * Precondition: f decays at least exponentially beyond w ~ 16 (all reservoir
 * integrands here carry a hard Gaussian cutoff).
 */
IntegralResult integrate_semi_infinite(const std::function<double(double)>& f,
                                       std::optional<double> oscillation_period,
                                       const QuadratureSpec& spec);

} // namespace qdeph
