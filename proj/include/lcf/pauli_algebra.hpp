#pragma once

#include <Eigen/Dense>

#include "lcf/errors.hpp"

namespace lcf {

inline constexpr double kDefaultTol = 1e-9;

// Pauli basis {sigma_0 = I, sigma_1 = X, sigma_2 = Y, sigma_3 = Z}.
const Eigen::Matrix2cd& pauli(int mu);

// Cached tensor product sigma_mu (x) sigma_nu.
const Eigen::Matrix4cd& pauli_tensor(int mu, int nu);

// Two-qubit state: Hermitian, unit trace, positive semidefinite.
struct DensityMatrix {
    Eigen::Matrix4cd entries;
};

// Real 4x4 parametrization Lambda_{mu nu} = Tr[rho (sigma_mu (x) sigma_nu)].
// Lambda(0,0) = 1 for a normalized state; every entry is the expectation of
// an observable with +-1 spectrum, so |entry| <= 1.
struct RealParam {
    Eigen::Matrix4d entries;
};

// 2x2 block decomposition of Lambda: Bloch vector a of the first qubit,
// b of the second, and the 3x3 correlation matrix T.
struct BlockForm {
    Eigen::Vector3d a;
    Eigen::Vector3d b;
    Eigen::Matrix3d T;
};

struct ValidationReport {
    double hermiticity_residual = 0.0;
    double trace_residual = 0.0;
    double min_eigenvalue = 0.0;
    bool hermitian = false;
    bool unit_trace = false;
    bool positive_semidefinite = false;

    bool pass() const { return hermitian && unit_trace && positive_semidefinite; }
};

// Diagnostic check of the DensityMatrix invariants; never throws.
ValidationReport validate_density(const Eigen::Matrix4cd& rho, double tol = kDefaultTol);

// Throws NonHermitianInput / NonUnitTrace / NotPositiveSemidefinite.
DensityMatrix make_density(const Eigen::Matrix4cd& rho, double tol = kDefaultTol);

// Lambda_{mu nu} = Tr[rho (sigma_mu (x) sigma_nu)]. The traces of a Hermitian
// rho are real; an imaginary residue above tol raises NonHermitianInput,
// below tol it is dropped so Lambda is exactly real.
RealParam lambda_from_rho(const DensityMatrix& rho, double tol = kDefaultTol);

// rho = (1/4) sum Lambda_{mu nu} sigma_mu (x) sigma_nu. Hermitian by
// construction. A RealParam need not encode a physical state; positivity is
// only checked when validate is set (NotPositive on failure).
DensityMatrix rho_from_lambda(const RealParam& lam, bool validate = false,
                              double tol = kDefaultTol);

// a_i = Lambda_{i0}, b_j = Lambda_{0j}, T_{ij} = Lambda_{ij}.
BlockForm block_form(const RealParam& lam);

// Reassembles (1, b^T; a, T); inverse of block_form, bit-exact.
RealParam assemble_block(const BlockForm& bf);

}  // namespace lcf
