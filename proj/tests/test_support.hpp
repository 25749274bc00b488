#pragma once

#include <Eigen/Dense>

#include "lcf/pauli_algebra.hpp"

namespace lcf::testing {

// Omega_0 matrices of the four worked examples.

inline Eigen::Matrix4d example1_omega0() {
    Eigen::Matrix4d om;
    om << 1.0, 0.2, 0.1, 0.03,
          0.2, -0.3, 0.0, 0.0,
          0.1, 0.0, -0.1, 0.0,
          0.03, 0.0, 0.0, -0.5;
    return om;
}

inline Eigen::Matrix4d example2_omega0() {
    Eigen::Matrix4d om;
    om << 1.0, 0.2, 0.25, 0.0,
          0.2, -0.3, 0.0, 0.0,
          0.25, 0.0, -0.15, 0.0,
          0.0, 0.0, 0.0, -0.04;
    return om;
}

inline Eigen::Matrix4d example3_omega0() {
    Eigen::Matrix4d om;
    om << 0.596, 0.0, 0.148, 0.0,
          0.0, -0.264, 0.0, 0.0,
          0.148, 0.0, -0.183, 0.0,
          0.0, 0.0, 0.0, -0.078;
    return om;
}

inline Eigen::Matrix4d example4_omega0() {
    Eigen::Matrix4d om;
    om << 2.0, 0.0, 0.0, 1.0,
          0.0, -1.0, 0.0, 0.0,
          0.0, 0.0, -1.0, 0.0,
          1.0, 0.0, 0.0, 0.0;
    return om / 36.0;
}

// Eigenvalues frozen from an independent dense solve of G Omega_0.
inline Eigen::Vector4d example1_eigenvalues() {
    return {0.921307758161, 0.503270941443, 0.366352921276, 0.10906837912};
}
inline Eigen::Vector4d example2_eigenvalues() {
    return {0.833613428007, 0.414547527988, 0.201839044005, 0.04};
}
inline Eigen::Vector4d example3_eigenvalues() {
    return {0.533507812288, 0.264, 0.245492187712, 0.078};
}

// Non-diagonal canonical Lambda with parameters (s0, s1).
inline Eigen::Matrix4d lambda_iic(double s0, double s1) {
    Eigen::Matrix4d lam = Eigen::Matrix4d::Zero();
    lam(0, 0) = 1.0;
    lam(0, 3) = 1.0 - s0;
    lam(1, 1) = s1;
    lam(2, 2) = -s1;
    lam(3, 3) = s0;
    return lam;
}

inline Eigen::Matrix4cd bell_phi_plus() {
    Eigen::Matrix4cd rho = Eigen::Matrix4cd::Zero();
    rho(0, 0) = rho(0, 3) = rho(3, 0) = rho(3, 3) = 0.5;
    return rho;
}

inline Eigen::Matrix4cd maximally_mixed() {
    return 0.25 * Eigen::Matrix4cd::Identity();
}

}  // namespace lcf::testing
