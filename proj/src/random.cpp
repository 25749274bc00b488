#include "lcf/random.hpp"

#include <cmath>
#include <numbers>

namespace lcf {

double Rng::gaussian() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    const double u1 = 1.0 - uniform();  // (0, 1]
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double theta = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(theta);
    has_spare_ = true;
    return r * std::cos(theta);
}

Eigen::Vector3d Rng::unit_vector3() {
    for (;;) {
        Eigen::Vector3d v;
        v << gaussian(), gaussian(), gaussian();
        const double n = v.norm();
        if (n > 1e-12) return v / n;
    }
}

DensityMatrix random_density(Rng& rng) {
    Eigen::Matrix4cd m;
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            m(i, j) = rng.complex_gaussian();
        }
    }
    Eigen::Matrix4cd rho = m * m.adjoint();
    rho /= rho.trace().real();
    return make_density(rho);
}

Eigen::Matrix2cd random_sl2c(Rng& rng) {
    for (;;) {
        Eigen::Matrix2cd z;
        for (int i = 0; i < 2; ++i) {
            for (int j = 0; j < 2; ++j) {
                z(i, j) = rng.complex_gaussian();
            }
        }
        const std::complex<double> det = z(0, 0) * z(1, 1) - z(0, 1) * z(1, 0);
        if (std::abs(det) < 0.1) continue;
        return z / std::sqrt(det);
    }
}

}  // namespace lcf
