#include "lcf/pauli_algebra.hpp"

#include <array>
#include <cmath>
#include <complex>

#include <Eigen/Eigenvalues>
#include <unsupported/Eigen/KroneckerProduct>

namespace lcf {

namespace {

std::array<Eigen::Matrix2cd, 4> make_paulis() {
    const std::complex<double> i(0.0, 1.0);
    std::array<Eigen::Matrix2cd, 4> s;
    s[0] << 1, 0, 0, 1;
    s[1] << 0, 1, 1, 0;
    s[2] << 0, -i, i, 0;
    s[3] << 1, 0, 0, -1;
    return s;
}

}  // namespace

const Eigen::Matrix2cd& pauli(int mu) {
    static const std::array<Eigen::Matrix2cd, 4> paulis = make_paulis();
    return paulis[static_cast<std::size_t>(mu)];
}

const Eigen::Matrix4cd& pauli_tensor(int mu, int nu) {
    static const std::array<Eigen::Matrix4cd, 16> cache = [] {
        std::array<Eigen::Matrix4cd, 16> t;
        for (int m = 0; m < 4; ++m) {
            for (int n = 0; n < 4; ++n) {
                t[static_cast<std::size_t>(4 * m + n)] =
                    Eigen::kroneckerProduct(pauli(m), pauli(n));
            }
        }
        return t;
    }();
    return cache[static_cast<std::size_t>(4 * mu + nu)];
}

ValidationReport validate_density(const Eigen::Matrix4cd& rho, double tol) {
    ValidationReport rep;
    rep.hermiticity_residual = (rho - rho.adjoint()).cwiseAbs().maxCoeff();
    rep.trace_residual = std::abs(rho.trace() - std::complex<double>(1.0));

    const Eigen::Matrix4cd herm = 0.5 * (rho + rho.adjoint());
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> es(herm);
    rep.min_eigenvalue = es.eigenvalues().minCoeff();

    rep.hermitian = rep.hermiticity_residual <= tol;
    rep.unit_trace = rep.trace_residual <= tol;
    rep.positive_semidefinite = rep.min_eigenvalue >= -tol;
    return rep;
}

DensityMatrix make_density(const Eigen::Matrix4cd& rho, double tol) {
    const ValidationReport rep = validate_density(rho, tol);
    if (!rep.hermitian) {
        throw NonHermitianInput("density matrix is not Hermitian (residual " +
                                std::to_string(rep.hermiticity_residual) + ")");
    }
    if (!rep.unit_trace) {
        throw NonUnitTrace("density matrix trace differs from 1 by " +
                           std::to_string(rep.trace_residual));
    }
    if (!rep.positive_semidefinite) {
        throw NotPositiveSemidefinite("density matrix has eigenvalue " +
                                      std::to_string(rep.min_eigenvalue));
    }
    return DensityMatrix{rho};
}

RealParam lambda_from_rho(const DensityMatrix& rho, double tol) {
    Eigen::Matrix4d lam;
    double max_imag = 0.0;
    for (int mu = 0; mu < 4; ++mu) {
        for (int nu = 0; nu < 4; ++nu) {
            const std::complex<double> t = (rho.entries * pauli_tensor(mu, nu)).trace();
            max_imag = std::max(max_imag, std::abs(t.imag()));
            lam(mu, nu) = t.real();
        }
    }
    if (max_imag > tol) {
        throw NonHermitianInput("Pauli traces have imaginary residue " +
                                std::to_string(max_imag));
    }
    // Divide out the trace so Lambda(0,0) is exactly 1.
    const double trace = lam(0, 0);
    if (std::abs(trace - 1.0) > tol) {
        throw NonUnitTrace("state trace differs from 1 by " +
                           std::to_string(std::abs(trace - 1.0)));
    }
    lam /= trace;
    lam(0, 0) = 1.0;
    return RealParam{lam};
}

DensityMatrix rho_from_lambda(const RealParam& lam, bool validate, double tol) {
    if (std::abs(lam.entries(0, 0) - 1.0) > tol) {
        throw ValidationError("RealParam entry (0,0) must be 1, got " +
                              std::to_string(lam.entries(0, 0)));
    }
    Eigen::Matrix4cd rho = Eigen::Matrix4cd::Zero();
    for (int mu = 0; mu < 4; ++mu) {
        for (int nu = 0; nu < 4; ++nu) {
            rho += lam.entries(mu, nu) * pauli_tensor(mu, nu);
        }
    }
    rho *= 0.25;
    if (validate) {
        const ValidationReport rep = validate_density(rho, tol);
        if (!rep.positive_semidefinite) {
            throw NotPositive("assembled matrix has eigenvalue " +
                              std::to_string(rep.min_eigenvalue));
        }
    }
    return DensityMatrix{rho};
}

BlockForm block_form(const RealParam& lam) {
    BlockForm bf;
    bf.a = lam.entries.block<3, 1>(1, 0);
    bf.b = lam.entries.block<1, 3>(0, 1).transpose();
    bf.T = lam.entries.block<3, 3>(1, 1);
    return bf;
}

RealParam assemble_block(const BlockForm& bf) {
    Eigen::Matrix4d lam;
    lam(0, 0) = 1.0;
    lam.block<1, 3>(0, 1) = bf.b.transpose();
    lam.block<3, 1>(1, 0) = bf.a;
    lam.block<3, 3>(1, 1) = bf.T;
    return RealParam{lam};
}

}  // namespace lcf
