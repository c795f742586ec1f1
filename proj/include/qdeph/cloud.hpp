// cloud.hpp — atomic cloud geometry, Gaussian position sampling, and the
// structure factor in both its continuum and discrete (angular-averaged)
// forms.
#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace qdeph {

struct CloudGeometry {
    std::int64_t n_atoms = 1; // N >= 1
    double sigma = 1.0;       // rms inter-atom length scale, > 0
    double c = 1.0;           // sound speed of the linear dispersion w = c|k|, > 0

    void validate() const {
        if (n_atoms < 1) throw std::domain_error("CloudGeometry: n_atoms must be >= 1");
        if (!(sigma > 0.0)) throw std::domain_error("CloudGeometry: sigma must be > 0");
        if (!(c > 0.0)) throw std::domain_error("CloudGeometry: c must be > 0");
    }
    double w_bar() const { return c / sigma; }
    // Per-axis position variance of the cloud density: sigma^2 N^(2/3).
    double axis_variance() const;
    // Width of the collective Gaussian suppression exp(-a w^2): sigma^2 N^(2/3) / c^2.
    double collective_width() const;
};

struct AtomPositions {
    std::vector<std::array<double, 3>> r;
    std::size_t size() const { return r.size(); }
};

// N independent draws from the isotropic 3D Gaussian with per-axis variance
// sigma^2 N^(2/3); deterministic for a given seed.
AtomPositions sample_positions(const CloudGeometry& g, std::uint64_t seed);

// Continuum structure factor G_N(k) = N exp(-k^2 sigma^2 N^(2/3) / 2).
double structure_factor_continuum(const CloudGeometry& g, double k);

// Angular average over directions of |sum_j e^(-i k.r_j)|^2:
//   N + sum_{i != j} sinc(k d_ij),   d_ij = |r_i - r_j|.
double structure_factor_discrete_angular(const AtomPositions& p, double k);

// Flattened pairwise distances d_ij (i < j); lets the dephasing oracle reuse
// them across many quadrature nodes.
std::vector<double> pairwise_distances(const AtomPositions& p);

// Discrete angular-averaged structure factor from precomputed distances.
double structure_factor_from_distances(std::size_t n_atoms,
                                       const std::vector<double>& dist, double k);

} // namespace qdeph
