#pragma once

#include <utility>

#include "lcf/spectral.hpp"

namespace lcf {

struct CanonicalResult {
    CanonicalClass cls = CanonicalClass::Ic;
    RealParam lambda_canonical;
    DensityMatrix rho_canonical;
    ValidationReport rho_validation;
    Eigen::Vector4d eigenvalues;  // G-eigenvalues of the input's Omega

    // Ic: sign of the third-axis entry, sign(det Lambda)
    int sign = +1;

    // IIc: s0 = lambda0/chi0, s1 = sqrt(lambda1/chi0) with the chi0 = 2 lambda0
    // gauge, so s0 = 1/2 for every IIc state
    double s0 = 0.0;
    double s1 = 0.0;
    double chi0 = 0.0;

    // Lorentz factors with L_A Lambda L_B^T = kappa * lambda_canonical;
    // available when canonicalizing a RealParam (not a bare Omega)
    bool has_factors = false;
    Eigen::Matrix4d L_A;
    Eigen::Matrix4d L_B;
    double factor_residual = 0.0;      // max |L_A Lambda L_B^T / kappa - lambda_canonical|
    double congruence_residual = 0.0;  // max |L Omega0 L^T - Omega_canonical|
};

// Lorentz matrix built from the tetrad so that the congruence (not the
// similarity) diagonalizes Omega0:
//   L_Ic Omega0 L_Ic^T = diag(lambda0, -lambda1, -lambda2, -lambda3).
// The rows of L_Ic are the Minkowski-normalized G-eigenvectors, orientation
// fixed to det = +1 and L(0,0) >= 1. Throws NotTetrad for IIc input.
Eigen::Matrix4d build_L_Ic(const GEigenSystem& es);

// Light-cone completion of the triad: returns L_IIc and chi0 with
//   L_IIc Omega0 L_IIc^T = [[chi0, 0, 0, chi0 - lambda0],
//                           [0, -lambda1, 0, 0],
//                           [0, 0, -lambda1, 0],
//                           [chi0 - lambda0, 0, 0, chi0 - 2 lambda0]]
// in the chi0 = 2 lambda0 gauge. Throws NotTriad for Ic input.
std::pair<Eigen::Matrix4d, double> build_L_IIc(const GEigenSystem& es);

// The target of the congruence above for either class.
Eigen::Matrix4d canonical_omega(const GEigenSystem& es, double chi0);

// rho = (1/4)(sum_i sqrt(lambda_i/lambda0) sigma_i (x) sigma_i) with the given
// sign on the third axis; PSD verified (NotPositive on failure).
DensityMatrix rho_canonical_Ic(const Eigen::Vector4d& eigenvalues, int sign);

// rho = (1/4)[1 + (1-s0) sigma_0 sigma_3 + s1 (sigma_1 sigma_1 - sigma_2 sigma_2)
//             + s0 sigma_3 sigma_3]; PSD requires s1^2 <= s0 <= 1.
DensityMatrix rho_canonical_IIc(double s0, double s1);

// Full pipeline: Omega, G-eigensystem, class dispatch, canonical Lambda and
// rho, plus the Lorentz factors realizing them.
CanonicalResult canonicalize(const RealParam& lam, double dtol = kDefaultDegeneracyTol);

// Spectral-side canonicalization when only Omega is known: no Lambda-level
// factors, the Ic sign defaults to +1 (a congruence cannot see sign(det
// Lambda)), and rho_canonical is assembled without enforcing positivity --
// its validation report says whether the canonical state is physical.
CanonicalResult canonicalize_omega(const OmegaMatrix& om,
                                   double dtol = kDefaultDegeneracyTol);

}  // namespace lcf
