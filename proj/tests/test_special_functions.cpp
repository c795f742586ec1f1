#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qdeph/quadrature.hpp"
#include "qdeph/special_functions.hpp"

#include <cmath>
#include <random>

using qdeph::gamma_fn;
using qdeph::kummer_em;
using qdeph::kummer_m;

namespace {
const double kSqrtPi = 1.7724538509055160273;
// relative comparison; doctest's default Approx adds an absolute scale of 1
doctest::Approx rel(double v, double eps) {
    return doctest::Approx(v).scale(0.0).epsilon(eps);
}
} // namespace

TEST_CASE("gamma function values") {
    CHECK(gamma_fn(1.0) == doctest::Approx(1.0).epsilon(1e-14));
    // Gamma(5/2) = (3/2)(1/2) sqrt(pi)
    CHECK(gamma_fn(2.5) == rel(0.75 * kSqrtPi, 1e-13));
    CHECK(gamma_fn(3.5) == rel(2.5 * gamma_fn(2.5), 1e-13));
}

TEST_CASE("gamma recurrence to 1e-12 over random arguments") {
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> xs(0.3, 60.0);
    for (int i = 0; i < 200; ++i) {
        const double x = xs(rng);
        CHECK(gamma_fn(x + 1.0) == rel(x * gamma_fn(x), 1e-12));
    }
}

TEST_CASE("gamma domain") {
    CHECK_THROWS_AS(gamma_fn(0.0), std::domain_error);
    CHECK_THROWS_AS(gamma_fn(-2.5), std::domain_error);
}

TEST_CASE("kummer trivial and terminating values") {
    CHECK(kummer_m(-2.0, 0.5, 0.0) == doctest::Approx(1.0));
    // a = -2, b = 1/2: 1 - 4z + (4/3) z^2 (hand-terminated Pochhammer series)
    for (double z : {0.3, 1.0, 7.5, 40.0, 100.0}) {
        const double poly = 1.0 - 4.0 * z + 4.0 / 3.0 * z * z;
        CHECK(kummer_m(-2.0, 0.5, z) == rel(poly, 1e-12));
    }
    // M(-1, 1/2, z) = 1 - 2z at z = 3
    CHECK(kummer_m(-1.0, 0.5, 3.0) == rel(-5.0, 1e-13));
}

TEST_CASE("M(a,b,0) = 1 for assorted (a,b)") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> as(-6.0, 6.0);
    std::uniform_real_distribution<double> bs(0.25, 4.0);
    for (int i = 0; i < 50; ++i) CHECK(kummer_m(as(rng), bs(rng), 0.0) == doctest::Approx(1.0));
}

TEST_CASE("terminating series equals explicit polynomial over z in [0, 100]") {
    // a = -m: compare against Horner evaluation of the exact coefficients.
    for (int m : {1, 2, 3}) {
        std::vector<double> coeff(m + 1);
        double c = 1.0;
        coeff[0] = 1.0;
        for (int n = 1; n <= m; ++n) {
            c *= (-m + n - 1.0) / ((0.5 + n - 1.0) * n);
            coeff[n] = c;
        }
        for (double z = 0.0; z <= 100.0; z += 2.5) {
            double horner = 0.0;
            for (int n = m; n >= 0; --n) horner = horner * z + coeff[n];
            if (horner != 0.0)
                CHECK(kummer_m(-static_cast<double>(m), 0.5, z) == rel(horner, 1e-12));
        }
    }
}

TEST_CASE("series and asymptotic branches overlap inside z in [20, 40]") {
    // For every s in 1..6 the two branches agree to 1e-8 on a subwindow of
    // [20, 40] that always includes z = 40; for odd s the expansion reaches
    // that accuracy only from the branch switch point upward.
    for (int s = 1; s <= 6; ++s) {
        const double a = -0.5 * s;
        // terminating (even s) cases are exact in both branches over the
        // whole window; odd s only from the switch point upward
        const double lo =
            s % 2 == 0 ? 20.0 : std::max(20.0, qdeph::detail::kummer_switch_z(a));
        REQUIRE(lo <= 40.0);
        int checked = 0;
        for (int i = 0; i <= 8; ++i) {
            const double z = lo + (40.0 - lo) * i / 8.0;
            const double em_series = qdeph::detail::kummer_em_series(a, 0.5, z);
            const double em_asym = qdeph::detail::kummer_em_asym(a, 0.5, z);
            CHECK(em_asym == rel(em_series, 1e-8));
            ++checked;
            if (lo == 40.0) break;
        }
        CHECK(checked > 0);
    }
}

TEST_CASE("guard band at the branch switch point") {
    // the production switch hands over between branches that agree to 1e-9
    for (int s = 1; s <= 6; s += 2) {
        const double a = -0.5 * s;
        const double z = qdeph::detail::kummer_switch_z(a);
        CHECK(qdeph::detail::kummer_em_asym(a, 0.5, z) ==
              rel(qdeph::detail::kummer_em_series(a, 0.5, z), 1e-9));
    }
}

TEST_CASE("kummer_em asymptotics match the algebraic tail") {
    // e^-z M(-s/2, 1/2, z) -> Gamma(1/2)/Gamma(-s/2) z^-(s+1)/2 for large z.
    for (double s : {1.0, 3.0}) {
        const double z = 5000.0;
        const double lead = std::tgamma(0.5) / std::tgamma(-0.5 * s) *
                            std::pow(z, -(s + 1.0) / 2.0);
        CHECK(kummer_em(-0.5 * s, 0.5, z) == rel(lead, 2e-3));
    }
}

TEST_CASE("kummer domain and accuracy errors") {
    CHECK_THROWS_AS(kummer_m(1.0, 0.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(kummer_m(1.0, -3.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(kummer_m(1.0, 0.5, -1.0), std::domain_error);
    // e^z overflows double range
    CHECK_THROWS_AS(kummer_m(-0.5, 0.5, 1e4), qdeph::accuracy_error);
}
