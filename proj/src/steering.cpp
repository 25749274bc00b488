#include "lcf/steering.hpp"

#include <cmath>
#include <numbers>

#include "lcf/random.hpp"

namespace lcf {

SteeringOutcome steer(const RealParam& lam, const Eigen::Vector3d& p_hat) {
    if (std::abs(p_hat.norm() - 1.0) > kDefaultTol) {
        throw NonUnitDirection("measurement direction must be a unit vector, |p| = " +
                               std::to_string(p_hat.norm()));
    }
    Eigen::Vector4d p;
    p << 1.0, p_hat(0), p_hat(1), p_hat(2);
    const Eigen::Vector4d image = lam.entries * p;
    const double denom = image(0);
    if (denom < 1e-12) {
        throw ZeroProbabilityOutcome("steering undefined along this direction "
                                     "(outcome probability vanishes)");
    }
    SteeringOutcome out;
    out.q = image.tail<3>() / denom;
    out.probability = 0.5 * denom;
    return out;
}

Ellipsoid ellipsoid_of(const CanonicalResult& canon) {
    Ellipsoid ell;
    if (canon.cls == CanonicalClass::Ic) {
        ell.center = Eigen::Vector3d::Zero();
        const Eigen::Vector4d ev = canon.eigenvalues.cwiseMax(0.0);
        for (int i = 0; i < 3; ++i) {
            ell.semi_axes(i) = std::sqrt(ev(i + 1) / ev(0));
        }
    } else {
        ell.center = Eigen::Vector3d(0.0, 0.0, 1.0 - canon.s0);
        ell.semi_axes = Eigen::Vector3d(canon.s1, canon.s1, canon.s0);
    }
    return ell;
}

SurfaceCheck verify_on_surface(const RealParam& lam_canonical, const Ellipsoid& ell,
                               int n, std::uint64_t seed) {
    if (n < 1) throw ValidationError("verify_on_surface requires n >= 1");
    // partner-side steering map; identical to steer() for symmetric Lambda
    const RealParam dual{lam_canonical.entries.transpose().eval()};
    constexpr double kDegenerate = 1e-12;

    Rng rng(seed);
    SurfaceCheck check;
    check.n_samples = n;
    const bool all_positive = ell.semi_axes.minCoeff() > kDegenerate;
    for (int i = 0; i < n; ++i) {
        const Eigen::Vector3d p_hat = rng.unit_vector3();
        Eigen::Vector3d q;
        try {
            q = steer(dual, p_hat).q;
        } catch (const ZeroProbabilityOutcome&) {
            ++check.n_zero_probability;
            continue;
        }
        check.max_norm = std::max(check.max_norm, q.norm());
        double residual = 0.0;
        if (all_positive) {
            double form = 0.0;
            for (int j = 0; j < 3; ++j) {
                const double d = (q(j) - ell.center(j)) / ell.semi_axes(j);
                form += d * d;
            }
            residual = std::abs(form - 1.0);
        } else {
            // collapsed axes pin the corresponding coordinate to the center
            for (int j = 0; j < 3; ++j) {
                if (ell.semi_axes(j) <= kDegenerate) {
                    residual = std::max(residual, std::abs(q(j) - ell.center(j)));
                }
            }
        }
        check.max_residual = std::max(check.max_residual, residual);
    }
    return check;
}

std::vector<Eigen::Vector3d> sample_surface(const Ellipsoid& ell, int n) {
    if (n < 1) throw ValidationError("sample_surface requires n >= 1");
    std::vector<Eigen::Vector3d> pts;
    pts.reserve(static_cast<std::size_t>(n));
    static const std::array<Eigen::Vector3d, 6> axis_dirs = {
        Eigen::Vector3d(1, 0, 0),  Eigen::Vector3d(-1, 0, 0),
        Eigen::Vector3d(0, 1, 0),  Eigen::Vector3d(0, -1, 0),
        Eigen::Vector3d(0, 0, 1),  Eigen::Vector3d(0, 0, -1)};
    const double golden = std::numbers::pi * (3.0 - std::sqrt(5.0));
    const int spiral = n - static_cast<int>(std::min<std::size_t>(axis_dirs.size(),
                                                                  static_cast<std::size_t>(n)));
    for (int i = 0; i < n; ++i) {
        Eigen::Vector3d u;
        if (i < 6) {
            u = axis_dirs[static_cast<std::size_t>(i)];
        } else {
            const int j = i - 6;
            const double z = 1.0 - 2.0 * (static_cast<double>(j) + 0.5) /
                                       static_cast<double>(spiral);
            const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
            const double phi = golden * static_cast<double>(j);
            u = Eigen::Vector3d(r * std::cos(phi), r * std::sin(phi), z);
        }
        pts.push_back(ell.center + ell.semi_axes.cwiseProduct(u));
    }
    return pts;
}

}  // namespace lcf
