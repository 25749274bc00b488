#pragma once

#include <Eigen/Dense>

#include "lcf/errors.hpp"
#include "lcf/pauli_algebra.hpp"

namespace lcf {

enum class CausalType { TimeLike, Null, SpaceLike };

const char* to_string(CausalType t);

// Minkowski metric G = diag(1,-1,-1,-1).
const Eigen::Matrix4d& minkowski_metric();

// p^T G p.
double minkowski_norm(const Eigen::Vector4d& p);

// Classification tolerance grows with the vector magnitude so that null
// detection survives roundoff after Lorentz products.
double causal_tol(const Eigen::Vector4d& p);

CausalType causal_type(const Eigen::Vector4d& p);

// L^T G L = G, det L = 1, L(0,0) >= 1 within tol.
bool is_lorentz(const Eigen::Matrix4d& L, double tol = kDefaultTol);
void require_lorentz(const Eigen::Matrix4d& L, double tol = kDefaultTol);

// Newton iteration L <- (L + G L^-T G)/2 pulling a nearly metric-preserving
// matrix back onto the group; a no-op for matrices already on it.
Eigen::Matrix4d reorthonormalize_lorentz(Eigen::Matrix4d L, int max_iter = 8);

// (L_A)_{alpha mu} = Tr[sigma_alpha A sigma_mu A^dag] / 2 for A in SL(2,C).
// A and -A map to the same image. Throws NotUnitDeterminant.
Eigen::Matrix4d so31_from_sl2c(const Eigen::Matrix2cd& A, double tol = kDefaultTol);

struct LambdaTransform {
    RealParam normalized;          // L_A Lambda L_B^T rescaled so entry (0,0) = 1
    Eigen::Matrix4d unnormalized;  // the raw product, for congruence invariants
};

// Lambda -> L_A Lambda L_B^T. Throws DegenerateNormalization when the (0,0)
// entry of the product vanishes.
LambdaTransform transform_lambda(const RealParam& lam, const Eigen::Matrix4d& LA,
                                 const Eigen::Matrix4d& LB);

// rho -> (A (x) B) rho (A^dag (x) B^dag) / trace. Commutes with the
// Lambda-level action through so31_from_sl2c.
DensityMatrix transform_rho(const DensityMatrix& rho, const Eigen::Matrix2cd& A,
                            const Eigen::Matrix2cd& B);

}  // namespace lcf
