#include "qdeph/cloud.hpp"

#include <cmath>
#include <random>

namespace qdeph {

namespace {

// Standard normal via Box-Muller on explicit 53-bit uniforms; keeps sampled
// positions identical across standard-library implementations.
class NormalSampler {
public:
    explicit NormalSampler(std::uint64_t seed) : rng_(seed) {}
    double operator()() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = uniform01();
        while (u1 == 0.0) u1 = uniform01();
        const double u2 = uniform01();
        const double radius = std::sqrt(-2.0 * std::log(u1));
        const double angle = 2.0 * 3.14159265358979323846 * u2;
        spare_ = radius * std::sin(angle);
        have_spare_ = true;
        return radius * std::cos(angle);
    }

private:
    double uniform01() { return static_cast<double>(rng_() >> 11) * 0x1.0p-53; }
    std::mt19937_64 rng_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

double sinc(double x) {
    if (std::abs(x) < 1e-6) return 1.0 - x * x / 6.0;
    return std::sin(x) / x;
}

} // namespace

double CloudGeometry::axis_variance() const {
    return sigma * sigma * std::pow(static_cast<double>(n_atoms), 2.0 / 3.0);
}

double CloudGeometry::collective_width() const {
    return axis_variance() / (c * c);
}

AtomPositions sample_positions(const CloudGeometry& g, std::uint64_t seed) {
    g.validate();
    NormalSampler normal(seed);
    const double sd = std::sqrt(g.axis_variance());
    AtomPositions p;
    p.r.resize(static_cast<std::size_t>(g.n_atoms));
    for (auto& ri : p.r)
        for (double& x : ri) x = sd * normal();
    return p;
}

double structure_factor_continuum(const CloudGeometry& g, double k) {
    g.validate();
    if (k < 0.0) throw std::domain_error("structure_factor_continuum: k must be >= 0");
    const double n = static_cast<double>(g.n_atoms);
    return n * std::exp(-0.5 * k * k * g.axis_variance());
}

std::vector<double> pairwise_distances(const AtomPositions& p) {
    std::vector<double> d;
    const std::size_t n = p.size();
    d.reserve(n * (n - 1) / 2);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const double dx = p.r[i][0] - p.r[j][0];
            const double dy = p.r[i][1] - p.r[j][1];
            const double dz = p.r[i][2] - p.r[j][2];
            d.push_back(std::sqrt(dx * dx + dy * dy + dz * dz));
        }
    return d;
}

double structure_factor_from_distances(std::size_t n_atoms,
                                       const std::vector<double>& dist, double k) {
    if (k < 0.0) throw std::domain_error("structure_factor: k must be >= 0");
    double pair_sum = 0.0;
    for (double d : dist) pair_sum += sinc(k * d);
    return static_cast<double>(n_atoms) + 2.0 * pair_sum;
}

double structure_factor_discrete_angular(const AtomPositions& p, double k) {
    return structure_factor_from_distances(p.size(), pairwise_distances(p), k);
}

} // namespace qdeph
