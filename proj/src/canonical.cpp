#include "lcf/canonical.hpp"

#include <cmath>

#include <Eigen/Dense>

namespace lcf {

namespace {

// (1 (+) R) as a Lorentz rotation.
Eigen::Matrix4d embed_rotation(const Eigen::Matrix3d& R) {
    Eigen::Matrix4d L = Eigen::Matrix4d::Identity();
    L.block<3, 3>(1, 1) = R;
    return L;
}

Eigen::Matrix4d lambda_ic_matrix(const Eigen::Vector4d& ev, int sign) {
    const Eigen::Vector4d e = ev.cwiseMax(0.0);
    Eigen::Matrix4d lam = Eigen::Matrix4d::Zero();
    lam(0, 0) = 1.0;
    lam(1, 1) = std::sqrt(e(1) / e(0));
    lam(2, 2) = std::sqrt(e(2) / e(0));
    lam(3, 3) = static_cast<double>(sign) * std::sqrt(e(3) / e(0));
    return lam;
}

Eigen::Matrix4d lambda_iic_matrix(double s0, double s1) {
    Eigen::Matrix4d lam = Eigen::Matrix4d::Zero();
    lam(0, 0) = 1.0;
    lam(0, 3) = 1.0 - s0;
    lam(1, 1) = s1;
    lam(2, 2) = -s1;
    lam(3, 3) = s0;
    return lam;
}

// From Y with Y^T G Y = Lc^T G Lc, the Lorentz factor W = Y Lc^{-1} gives
// W^{-1} Y = Lc exactly. Columns with lambda below the cutoff are replaced by
// a G-orthonormal completion.
Eigen::Matrix4d lorentz_factor_ic(const Eigen::Matrix4d& Y, const Eigen::Vector4d& ev,
                                  double cutoff) {
    const Eigen::Matrix4d& G = minkowski_metric();
    Eigen::Matrix4d W = Eigen::Matrix4d::Zero();
    std::array<bool, 4> filled{};
    for (int i = 0; i < 4; ++i) {
        if (ev(i) > cutoff) {
            W.col(i) = Y.col(i) / std::sqrt(ev(i));
            filled[static_cast<std::size_t>(i)] = true;
        }
    }
    // complete the missing space-like columns
    for (int i = 0; i < 4; ++i) {
        if (filled[static_cast<std::size_t>(i)]) continue;
        Eigen::Vector4d best = Eigen::Vector4d::Zero();
        double best_norm = -1.0;
        for (int cand = 0; cand < 4; ++cand) {
            Eigen::Vector4d v = Eigen::Vector4d::Unit(cand);
            for (int j = 0; j < 4; ++j) {
                if (!filled[static_cast<std::size_t>(j)]) continue;
                const Eigen::Vector4d c = W.col(j);
                v -= (v.dot(G * c) / minkowski_norm(c)) * c;
            }
            if (v.norm() > best_norm) {
                best_norm = v.norm();
                best = v;
            }
        }
        const double nrm = minkowski_norm(best);
        if (!(nrm < 0.0)) {
            throw SpectralFailure("Lorentz completion failed for a degenerate eigenvalue");
        }
        W.col(i) = best / std::sqrt(-nrm);
        filled[static_cast<std::size_t>(i)] = true;
    }
    return W;
}

}  // namespace

Eigen::Matrix4d build_L_Ic(const GEigenSystem& es) {
    if (es.cls != CanonicalClass::Ic) {
        throw NotTetrad("build_L_Ic requires a tetrad (class Ic) eigensystem");
    }
    Eigen::Matrix4d M;
    for (int i = 0; i < 4; ++i) M.col(i) = es.eigenvectors[static_cast<std::size_t>(i)];
    if (M.determinant() < 0.0) M.col(3) = -M.col(3);
    M = reorthonormalize_lorentz(M);
    const Eigen::Matrix4d L = M.transpose();
    if (!is_lorentz(L)) {
        // the boost to the canonical frame diverges at the Ic/IIc boundary
        throw SpectralFailure(
            "tetrad is too ill-conditioned for a Lorentz factor (boost factor " +
            std::to_string(L(0, 0)) + "); the state is near the Ic/IIc class boundary");
    }
    return L;
}

std::pair<Eigen::Matrix4d, double> build_L_IIc(const GEigenSystem& es) {
    if (es.cls != CanonicalClass::IIc) {
        throw NotTriad("build_L_IIc requires a triad (class IIc) eigensystem");
    }
    const Eigen::Matrix4d& G = minkowski_metric();
    const Eigen::Vector4d U = es.eigenvectors[0];  // null, U(0) = 1
    const Eigen::Vector4d X1 = es.eigenvectors[2];
    const Eigen::Vector4d X2 = es.eigenvectors[3];
    const double lam0 = es.eigenvalues(0);
    if (!(lam0 > 0.0)) {
        throw NotTriad("build_L_IIc requires lambda0 > 0");
    }

    // the G-orthogonal complement of the space-like pair is a Lorentzian
    // plane containing U; take its second null direction V with U^T G V = 1
    Eigen::Matrix<double, 2, 4> C;
    C.row(0) = (G * X1).transpose();
    C.row(1) = (G * X2).transpose();
    Eigen::FullPivLU<Eigen::Matrix<double, 2, 4>> lu(C);
    lu.setThreshold(1e-10);
    const Eigen::Matrix<double, 4, Eigen::Dynamic> ker = lu.kernel();
    if (ker.cols() < 2) {
        throw NotTriad("triad does not span a Lorentzian complement");
    }
    Eigen::Vector4d z = ker.col(0);
    if (std::abs(ker.col(1).dot(G * U)) > std::abs(z.dot(G * U))) z = ker.col(1);
    const double zu = z.dot(G * U);
    if (std::abs(zu) < 1e-10 * z.norm()) {
        throw NotTriad("light-cone completion is degenerate");
    }
    Eigen::Vector4d V = z - (minkowski_norm(z) / (2.0 * zu)) * U;
    V /= V.dot(G * U);  // now U^T G V = 1 and V is future-pointing

    const double gamma = V.dot(es.omega0 * V);
    if (!(gamma > 0.0)) {
        throw SpectralFailure("null defect gamma = " + std::to_string(gamma) +
                              " is not positive; the input is not a resolvable IIc state");
    }

    // chi0 = lambda0 + b^2 gamma; the b = sqrt(lambda0/gamma) gauge fixes
    // chi0 = 2 lambda0
    const double b = std::sqrt(lam0 / gamma);
    const double a = 0.5 / b;
    const Eigen::Vector4d c0 = a * U + b * V;
    const Eigen::Vector4d c3 = -a * U + b * V;

    Eigen::Matrix4d M;
    M.col(0) = c0;
    M.col(1) = X1;
    M.col(2) = X2;
    M.col(3) = c3;
    if (M.determinant() < 0.0) M.col(1) = -M.col(1);
    M = reorthonormalize_lorentz(M);
    const Eigen::Matrix4d L = M.transpose();
    if (!is_lorentz(L)) {
        throw SpectralFailure("triad completion is too ill-conditioned for a Lorentz factor");
    }

    const double chi0 = M.col(0).dot(es.omega0 * M.col(0));
    return {L, chi0};
}

Eigen::Matrix4d canonical_omega(const GEigenSystem& es, double chi0) {
    Eigen::Matrix4d om = Eigen::Matrix4d::Zero();
    if (es.cls == CanonicalClass::Ic) {
        om(0, 0) = es.eigenvalues(0);
        for (int i = 1; i < 4; ++i) om(i, i) = -es.eigenvalues(i);
    } else {
        const double lam0 = es.eigenvalues(0);
        const double lam1 = es.eigenvalues(2);
        om(0, 0) = chi0;
        om(1, 1) = -lam1;
        om(2, 2) = -lam1;
        om(3, 3) = chi0 - 2.0 * lam0;
        om(0, 3) = om(3, 0) = chi0 - lam0;
    }
    return om;
}

DensityMatrix rho_canonical_Ic(const Eigen::Vector4d& eigenvalues, int sign) {
    if (!(eigenvalues(0) > 0.0)) {
        throw SpectralFailure("rho_canonical_Ic requires lambda0 > 0");
    }
    RealParam lam{lambda_ic_matrix(eigenvalues, sign)};
    return rho_from_lambda(lam, /*validate=*/true);
}

DensityMatrix rho_canonical_IIc(double s0, double s1) {
    RealParam lam{lambda_iic_matrix(s0, s1)};
    return rho_from_lambda(lam, /*validate=*/true);
}

namespace {

CanonicalResult canonicalize_impl(const OmegaMatrix& om, const RealParam* lam,
                                  double dtol) {
    const GEigenSystem es = g_eigensystem(om, dtol);
    const double scale = std::max(1.0, om.omega0.cwiseAbs().maxCoeff());
    if (es.eigenvalues(0) <= 1e-14 * scale) {
        throw SpectralFailure("lambda0 = 0: Omega is rank degenerate (e.g. a pure "
                              "product state) and the canonical form is undefined");
    }

    CanonicalResult res;
    res.cls = es.cls;
    res.eigenvalues = es.eigenvalues;

    const Eigen::Matrix4d& G = minkowski_metric();
    const Eigen::Matrix4d rot = embed_rotation(om.R);

    Eigen::Matrix4d L_omega;        // congruence factor on Omega0
    Eigen::Matrix4d lambda_c;       // canonical Lambda, normalized
    double kappa_expected = 0.0;    // (0,0) entry of the unnormalized product

    if (es.cls == CanonicalClass::Ic) {
        L_omega = build_L_Ic(es);
        res.chi0 = 0.0;
        res.sign = +1;
        if (lam != nullptr) {
            const double det = lam->entries.determinant();
            if (det < -1e-12) res.sign = -1;
        }
        lambda_c = lambda_ic_matrix(es.eigenvalues, res.sign);
        kappa_expected = std::sqrt(es.eigenvalues(0));
        res.congruence_residual =
            (L_omega * om.omega0 * L_omega.transpose() - canonical_omega(es, 0.0))
                .cwiseAbs()
                .maxCoeff();
    } else {
        auto [L, chi0] = build_L_IIc(es);
        L_omega = L;
        res.chi0 = chi0;
        res.s0 = es.eigenvalues(0) / chi0;
        res.s1 = std::sqrt(std::max(0.0, es.eigenvalues(2)) / chi0);
        lambda_c = lambda_iic_matrix(res.s0, res.s1);
        kappa_expected = std::sqrt(chi0);
        res.congruence_residual =
            (L_omega * om.omega0 * L_omega.transpose() - canonical_omega(es, chi0))
                .cwiseAbs()
                .maxCoeff();
    }

    res.lambda_canonical = RealParam{lambda_c};

    if (lam != nullptr) {
        // Omega transforms as L_B Omega L_B^T under Lambda -> L_A Lambda L_B^T,
        // so the accumulated congruence factor is the B-side Lorentz matrix.
        const Eigen::Matrix4d L_B = reorthonormalize_lorentz(L_omega * rot);
        const Eigen::Matrix4d Y = lam->entries * L_B.transpose();
        Eigen::Matrix4d W;
        if (es.cls == CanonicalClass::Ic) {
            const double cutoff = es.eigenvalues(0) * 1e-12;
            W = lorentz_factor_ic(Y, es.eigenvalues, cutoff);
            if (W.determinant() < 0.0) {
                W.col(3) = -W.col(3);
                if (es.eigenvalues(3) <= cutoff) res.sign = +1;
            }
        } else {
            if (es.eigenvalues(2) < 1e-6 * es.eigenvalues(0)) {
                // the canonical Lambda is singular in this limit and the
                // conjugating transforms are unbounded
                throw SpectralFailure(
                    "degenerate IIc spheroid (lambda1/lambda0 = " +
                    std::to_string(es.eigenvalues(2) / es.eigenvalues(0)) +
                    "): Lorentz factors cannot be realized at double precision");
            }
            W = Y * (std::sqrt(res.chi0) * lambda_c).inverse();
            if (W.determinant() < 0.0) {
                throw SpectralFailure(
                    "IIc orbit with positive determinant cannot reach the canonical "
                    "layout with proper Lorentz factors");
            }
        }
        W = reorthonormalize_lorentz(W);
        if (!(W(0, 0) > 0.0)) {
            throw SpectralFailure("input does not preserve the forward light cone");
        }
        if (!is_lorentz(W, 1e-7)) {
            throw SpectralFailure(
                "Lorentz factor is ill-conditioned; the state is too close to the "
                "canonical-class boundary");
        }
        res.L_A = reorthonormalize_lorentz(G * W.transpose() * G);
        res.L_B = L_B;
        res.has_factors = true;

        // regenerate the Ic sign from the actual product, then measure the
        // proportionality residual
        Eigen::Matrix4d prod = res.L_A * lam->entries * res.L_B.transpose();
        const double kappa = prod(0, 0);
        if (es.cls == CanonicalClass::Ic) {
            res.sign = (prod(3, 3) < 0.0 && es.eigenvalues(3) > 1e-12 * scale) ? -1 : +1;
            lambda_c = lambda_ic_matrix(es.eigenvalues, res.sign);
            res.lambda_canonical = RealParam{lambda_c};
        }
        res.factor_residual = (prod / kappa - lambda_c).cwiseAbs().maxCoeff() +
                              std::abs(kappa - kappa_expected);
        if (res.factor_residual > 1e-6) {
            throw SpectralFailure("Lorentz factors realize the canonical form only to " +
                                  std::to_string(res.factor_residual) +
                                  "; the state is too close to the canonical-class boundary");
        }
    }
    if (res.congruence_residual > 1e-7 * std::max(1.0, om.omega0.cwiseAbs().maxCoeff())) {
        throw SpectralFailure("congruence residual " +
                              std::to_string(res.congruence_residual) +
                              " exceeds tolerance; ill-conditioned eigensystem");
    }

    // Assemble the canonical state. For physical inputs it is PSD; when only
    // Omega was supplied the report records whether it is.
    res.rho_canonical = rho_from_lambda(res.lambda_canonical, /*validate=*/false);
    res.rho_validation = validate_density(res.rho_canonical.entries);
    if (lam != nullptr && !res.rho_validation.positive_semidefinite) {
        throw NotPositive("canonical state has eigenvalue " +
                          std::to_string(res.rho_validation.min_eigenvalue) +
                          "; the input Lambda does not come from a physical state");
    }
    return res;
}

}  // namespace

CanonicalResult canonicalize(const RealParam& lam, double dtol) {
    const OmegaMatrix om = omega_from_lambda(lam);
    return canonicalize_impl(om, &lam, dtol);
}

CanonicalResult canonicalize_omega(const OmegaMatrix& om, double dtol) {
    return canonicalize_impl(om, nullptr, dtol);
}

}  // namespace lcf
