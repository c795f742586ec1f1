#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qdeph/reservoir.hpp"
#include "qdeph/special_functions.hpp"

#include <cmath>

using namespace qdeph;

TEST_CASE("j_eval values") {
    CHECK(j_eval({4.0, 1.0, 1.0}, 0.0) == 0.0);
    // s=2, alpha=3, w_s=2 at w=2: 3 * 4 * e^-1
    CHECK(j_eval({2.0, 3.0, 2.0}, 2.0) ==
          doctest::Approx(12.0 * std::exp(-1.0)).epsilon(1e-14));
    CHECK(j_eval({0.0, 5.0, 1.0}, 0.0) == 5.0);
    CHECK_THROWS_AS(j_eval({2.0, 1.0, 1.0}, -0.5), std::domain_error);
}

TEST_CASE("j_eval decays faster than any polynomial") {
    const SpectralDensity sd{6.0, 1.0, 1.0};
    double prev = j_eval(sd, 4.0) * std::pow(4.0, 20.0);
    for (double w : {6.0, 8.0, 10.0}) {
        const double cur = j_eval(sd, w) * std::pow(w, 20.0); // w^20 J(w) still -> 0
        CHECK(cur < prev);
        prev = cur;
    }
    CHECK(prev < 1e-10);
}

TEST_CASE("spectral density invariants") {
    CHECK_THROWS_AS(SpectralDensity({-1.0, 1.0, 1.0}).validate(), std::domain_error);
    CHECK_THROWS_AS(SpectralDensity({2.0, -1.0, 1.0}).validate(), std::domain_error);
    CHECK_THROWS_AS(SpectralDensity({2.0, 1.0, 0.0}).validate(), std::domain_error);
}

TEST_CASE("combo factory inverts the coupling combination") {
    const double combo = 0.12, w_bar = 1.0;
    const SpectralDensity sd = spectral_density_from_combo(4.0, combo, w_bar, 1.0);
    CHECK(0.5 * sd.alpha_s * std::pow(w_bar, 5.0) * gamma_fn(2.5) ==
          doctest::Approx(combo).epsilon(1e-14));
}

TEST_CASE("thermal kernel values") {
    CHECK(thermal_kernel({0.0}, 0.3) == 1.0);
    CHECK(thermal_kernel({0.0}, 42.0) == 1.0);
    CHECK(thermal_kernel({1.0}, 2.0) == doctest::Approx(1.0 / std::tanh(1.0)).epsilon(1e-14));
    // theta=10, w=1e-3: leading order 2*theta/w = 20000
    CHECK(thermal_kernel({10.0}, 1e-3) == doctest::Approx(20000.0).epsilon(1e-7));
    CHECK_THROWS_AS(thermal_kernel({1.0}, 0.0), std::domain_error);
    CHECK_THROWS_AS(thermal_kernel({-1.0}, 1.0), std::domain_error);
}

TEST_CASE("thermal kernel expansion agrees with coth at the branch point") {
    const ThermalState ts{2.0};
    const double w = 2.0 * 0.999e-4; // just inside the expansion branch
    CHECK(thermal_kernel(ts, w) ==
          doctest::Approx(1.0 / std::tanh(w / (2.0 * ts.theta))).epsilon(1e-12));
}

TEST_CASE("thermal kernel monotonicity and small-w law") {
    const ThermalState warm{1.5};
    double prev = thermal_kernel(warm, 0.05);
    CHECK(prev >= 1.0);
    for (double w = 0.1; w < 5.0; w += 0.17) {
        const double cur = thermal_kernel(warm, w);
        CHECK(cur >= 1.0);
        CHECK(cur <= prev + 1e-14); // nonincreasing in w
        prev = cur;
    }
    for (double w = 0.3; w < 3.0; w += 0.43) {
        CHECK(thermal_kernel({2.0}, w) >= thermal_kernel({1.0}, w)); // nondecreasing in theta
    }
    // w coth(w/2 theta) -> 2 theta as w -> 0
    const double theta = 0.7;
    CHECK(1e-6 * thermal_kernel({theta}, 1e-6) == doctest::Approx(2.0 * theta).epsilon(1e-9));
}
