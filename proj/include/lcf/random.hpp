#pragma once

#include <complex>
#include <cstdint>
#include <random>

#include <Eigen/Dense>

#include "lcf/pauli_algebra.hpp"

namespace lcf {

// Seeded generator with explicit double extraction so the stream does not
// depend on the standard library's distribution implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    // Uniform in [0, 1).
    double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    // Standard normal via Box-Muller.
    double gaussian();

    std::complex<double> complex_gaussian() {
        const double re = gaussian();
        const double im = gaussian();
        return {re, im};
    }

    // Uniform direction from a normalized 3-dimensional Gaussian draw.
    Eigen::Vector3d unit_vector3();

private:
    std::mt19937_64 gen_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

// Full-rank state with probability 1: normalized M M^dag with M a 4x4
// complex Ginibre matrix.
DensityMatrix random_density(Rng& rng);

// 2x2 complex Ginibre matrix rescaled by 1/sqrt(det); draws with a nearly
// singular seed matrix are rejected to keep the boost factors moderate.
Eigen::Matrix2cd random_sl2c(Rng& rng);

}  // namespace lcf
