#pragma once

#include <cstdint>
#include <vector>

#include "lcf/canonical.hpp"

namespace lcf {

struct SteeringOutcome {
    Eigen::Vector3d q;         // steered Bloch point of the first qubit
    double probability = 0.0;  // Born probability of the projector outcome
};

// Rank-1 PVM along p_hat on the second qubit steers the first qubit to
// q_i = (sum_nu Lambda_{i nu} p_nu) / (sum_nu Lambda_{0 nu} p_nu) with
// p = (1, p_hat). probability = (1 + b . p_hat) / 2. Throws NonUnitDirection
// and ZeroProbabilityOutcome.
SteeringOutcome steer(const RealParam& lam, const Eigen::Vector3d& p_hat);

struct Ellipsoid {
    Eigen::Vector3d center;
    Eigen::Vector3d semi_axes;
};

// Ic: center 0, semi-axes sqrt(lambda_i/lambda0). IIc: center (0,0,1-s0),
// semi-axes (s1, s1, s0).
Ellipsoid ellipsoid_of(const CanonicalResult& canon);

struct SurfaceCheck {
    double max_residual = 0.0;
    double max_norm = 0.0;  // largest |q| seen (Bloch-ball containment)
    int n_samples = 0;
    int n_zero_probability = 0;  // directions excluded from the maximum
};

// Steers the canonical state along n seeded random directions and evaluates
// the ellipsoid quadratic form at every steered point. The canonical surface
// is the steering ellipsoid of the partner qubit, so the transposed map is
// used; for the diagonal Ic form the two maps coincide. Degenerate axes are
// checked by |q_i - center_i| instead of the form.
SurfaceCheck verify_on_surface(const RealParam& lam_canonical, const Ellipsoid& ell,
                               int n, std::uint64_t seed);

// Deterministic surface mesh: the six axis points first, then a golden-angle
// spiral, mapped through the semi-axes and center.
std::vector<Eigen::Vector3d> sample_surface(const Ellipsoid& ell, int n);

}  // namespace lcf
