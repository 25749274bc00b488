#include "lcf/minkowski.hpp"

#include <cmath>
#include <complex>
#include <string>

namespace lcf {

const char* to_string(CausalType t) {
    switch (t) {
        case CausalType::TimeLike: return "time-like";
        case CausalType::Null: return "null";
        case CausalType::SpaceLike: return "space-like";
    }
    return "?";
}

const Eigen::Matrix4d& minkowski_metric() {
    static const Eigen::Matrix4d G = [] {
        Eigen::Matrix4d g = Eigen::Matrix4d::Zero();
        g.diagonal() << 1.0, -1.0, -1.0, -1.0;
        return g;
    }();
    return G;
}

double minkowski_norm(const Eigen::Vector4d& p) {
    return p(0) * p(0) - p(1) * p(1) - p(2) * p(2) - p(3) * p(3);
}

double causal_tol(const Eigen::Vector4d& p) {
    return 1e-7 * std::max(1.0, p.squaredNorm());
}

CausalType causal_type(const Eigen::Vector4d& p) {
    const double norm = minkowski_norm(p);
    const double ctol = causal_tol(p);
    if (norm > ctol) return CausalType::TimeLike;
    if (norm < -ctol) return CausalType::SpaceLike;
    return CausalType::Null;
}

bool is_lorentz(const Eigen::Matrix4d& L, double tol) {
    const Eigen::Matrix4d& G = minkowski_metric();
    const double metric_defect = (L.transpose() * G * L - G).cwiseAbs().maxCoeff();
    return metric_defect <= tol && std::abs(L.determinant() - 1.0) <= tol &&
           L(0, 0) >= 1.0 - tol;
}

void require_lorentz(const Eigen::Matrix4d& L, double tol) {
    if (!is_lorentz(L, tol)) {
        const Eigen::Matrix4d& G = minkowski_metric();
        throw ValidationError(
            "matrix is not proper orthochronous Lorentz (metric defect " +
            std::to_string((L.transpose() * G * L - G).cwiseAbs().maxCoeff()) +
            ", det " + std::to_string(L.determinant()) + ", L00 " +
            std::to_string(L(0, 0)) + ")");
    }
}

Eigen::Matrix4d reorthonormalize_lorentz(Eigen::Matrix4d L, int max_iter) {
    const Eigen::Matrix4d& G = minkowski_metric();
    for (int i = 0; i < max_iter; ++i) {
        const double defect = (L.transpose() * G * L - G).cwiseAbs().maxCoeff();
        if (defect < 1e-14) break;
        L = 0.5 * (L + G * L.transpose().inverse() * G);
    }
    return L;
}

Eigen::Matrix4d so31_from_sl2c(const Eigen::Matrix2cd& A, double tol) {
    const std::complex<double> det = A(0, 0) * A(1, 1) - A(0, 1) * A(1, 0);
    if (std::abs(det - std::complex<double>(1.0)) > tol) {
        throw NotUnitDeterminant("SL(2,C) input has |det - 1| = " +
                                 std::to_string(std::abs(det - std::complex<double>(1.0))));
    }
    const Eigen::Matrix2cd Adag = A.adjoint();
    Eigen::Matrix4d L;
    for (int alpha = 0; alpha < 4; ++alpha) {
        for (int mu = 0; mu < 4; ++mu) {
            L(alpha, mu) = 0.5 * (pauli(alpha) * A * pauli(mu) * Adag).trace().real();
        }
    }
    return L;
}

LambdaTransform transform_lambda(const RealParam& lam, const Eigen::Matrix4d& LA,
                                 const Eigen::Matrix4d& LB) {
    require_lorentz(LA);
    require_lorentz(LB);
    LambdaTransform out;
    out.unnormalized = LA * lam.entries * LB.transpose();
    const double scale = out.unnormalized(0, 0);
    if (std::abs(scale) < 1e-12) {
        throw DegenerateNormalization("transformed Lambda has vanishing (0,0) entry");
    }
    out.normalized.entries = out.unnormalized / scale;
    out.normalized.entries(0, 0) = 1.0;
    return out;
}

DensityMatrix transform_rho(const DensityMatrix& rho, const Eigen::Matrix2cd& A,
                            const Eigen::Matrix2cd& B) {
    Eigen::Matrix4cd op;
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            op.block<2, 2>(2 * i, 2 * j) = A(i, j) * B;
        }
    }
    Eigen::Matrix4cd out = op * rho.entries * op.adjoint();
    const double trace = out.trace().real();
    if (std::abs(trace) < 1e-12) {
        throw DegenerateNormalization("transformed state has vanishing trace");
    }
    out /= trace;
    return DensityMatrix{out};
}

}  // namespace lcf
