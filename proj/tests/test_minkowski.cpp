#include <doctest.h>

#include <cmath>

#include <Eigen/Dense>

#include "lcf/minkowski.hpp"
#include "lcf/random.hpp"
#include "lcf/spectral.hpp"

using namespace lcf;

TEST_CASE("minkowski norm basics") {
    CHECK(minkowski_norm({1, 0, 0, 0}) == 1.0);
    CHECK(minkowski_norm({1, 1, 0, 0}) == 0.0);
    // eigenvector printed for the first worked example
    const Eigen::Vector4d x0(0.943, -0.303, -0.115, -0.067);
    CHECK(minkowski_norm(x0) == doctest::Approx(0.780).epsilon(2e-3));
}

TEST_CASE("causal classification") {
    CHECK(causal_type({1, 0, 0, 0}) == CausalType::TimeLike);
    CHECK(causal_type({1, 1, 0, 0}) == CausalType::Null);
    CHECK(causal_type({0, 1, 0, 0}) == CausalType::SpaceLike);
    // classification tolerance scales with magnitude
    const Eigen::Vector4d big(1e4, 1e4, 0, 0);
    CHECK(causal_type(big + Eigen::Vector4d(1e-6, 0, 0, 0)) == CausalType::Null);
}

TEST_CASE("so31_from_sl2c maps the identity to the identity") {
    const Eigen::Matrix4d L = so31_from_sl2c(Eigen::Matrix2cd::Identity());
    CHECK((L - Eigen::Matrix4d::Identity()).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("so31_from_sl2c maps exp(-i theta sigma3/2) to a z-rotation") {
    const double theta = M_PI / 2.0;
    Eigen::Matrix2cd A = Eigen::Matrix2cd::Zero();
    A(0, 0) = std::exp(std::complex<double>(0.0, -theta / 2.0));
    A(1, 1) = std::exp(std::complex<double>(0.0, theta / 2.0));
    const Eigen::Matrix4d L = so31_from_sl2c(A);
    Eigen::Matrix4d expect = Eigen::Matrix4d::Identity();
    expect(1, 1) = 0.0;
    expect(1, 2) = -1.0;
    expect(2, 1) = 1.0;
    expect(2, 2) = 0.0;
    CHECK((L - expect).cwiseAbs().maxCoeff() < 1e-15);
    require_lorentz(L);
}

TEST_CASE("so31_from_sl2c maps diag(e^{b/2}, e^{-b/2}) to a z-boost") {
    const double beta = 1.0;
    Eigen::Matrix2cd A = Eigen::Matrix2cd::Zero();
    A(0, 0) = std::exp(beta / 2.0);
    A(1, 1) = std::exp(-beta / 2.0);
    const Eigen::Matrix4d L = so31_from_sl2c(A);
    CHECK(L(0, 0) == doctest::Approx(std::cosh(1.0)).epsilon(1e-14));
    CHECK(L(3, 3) == doctest::Approx(std::cosh(1.0)).epsilon(1e-14));
    CHECK(L(0, 3) == doctest::Approx(std::sinh(1.0)).epsilon(1e-14));
    CHECK(L(3, 0) == doctest::Approx(std::sinh(1.0)).epsilon(1e-14));
    CHECK(L.block<2, 2>(1, 1).isApprox(Eigen::Matrix2d::Identity(), 1e-14));
    require_lorentz(L);
}

TEST_CASE("so31_from_sl2c rejects non-unit determinants") {
    CHECK_THROWS_AS(so31_from_sl2c(2.0 * Eigen::Matrix2cd::Identity()), NotUnitDeterminant);
}

TEST_CASE("sign quotient: A and -A have bit-identical images") {
    Rng rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        const Eigen::Matrix2cd A = random_sl2c(rng);
        const Eigen::Matrix4d L1 = so31_from_sl2c(A);
        const Eigen::Matrix4d L2 = so31_from_sl2c(Eigen::Matrix2cd(-A));
        CHECK((L1 - L2).cwiseAbs().maxCoeff() == 0.0);
    }
}

TEST_CASE("homomorphism and metric preservation over 100 random pairs") {
    Rng rng(17);
    for (int trial = 0; trial < 100; ++trial) {
        const Eigen::Matrix2cd A1 = random_sl2c(rng);
        const Eigen::Matrix2cd A2 = random_sl2c(rng);
        const Eigen::Matrix4d L1 = so31_from_sl2c(A1);
        const Eigen::Matrix4d L2 = so31_from_sl2c(A2);
        const Eigen::Matrix4d L12 = so31_from_sl2c(A1 * A2);
        CHECK((L12 - L1 * L2).cwiseAbs().maxCoeff() < 1e-9);
        CHECK(is_lorentz(L1, 1e-9));
        CHECK(is_lorentz(L12, 1e-9));
    }
}

TEST_CASE("transform_lambda with identities is the identity") {
    Rng rng(23);
    const RealParam lam = lambda_from_rho(random_density(rng));
    const LambdaTransform t =
        transform_lambda(lam, Eigen::Matrix4d::Identity(), Eigen::Matrix4d::Identity());
    CHECK((t.normalized.entries - lam.entries).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("transform_lambda conjugates the correlation block by rotations") {
    Eigen::Matrix4d d = Eigen::Matrix4d::Zero();
    d.diagonal() << 1.0, 1.0, -1.0, 1.0;
    Eigen::Matrix3d R;  // z-rotation by pi/2
    R << 0, -1, 0, 1, 0, 0, 0, 0, 1;
    Eigen::Matrix4d L = Eigen::Matrix4d::Identity();
    L.block<3, 3>(1, 1) = R;
    const LambdaTransform t = transform_lambda(RealParam{d}, L, L);
    const Eigen::Matrix3d expect = R * d.block<3, 3>(1, 1) * R.transpose();
    CHECK((t.normalized.entries.block<3, 3>(1, 1) - expect).cwiseAbs().maxCoeff() < 1e-14);
    CHECK(t.normalized.entries(0, 0) == 1.0);
}

TEST_CASE("commuting square: rho-level and Lambda-level actions agree") {
    Rng rng(29);
    for (int trial = 0; trial < 100; ++trial) {
        const DensityMatrix rho = random_density(rng);
        const Eigen::Matrix2cd A = random_sl2c(rng);
        const Eigen::Matrix2cd B = random_sl2c(rng);
        const RealParam via_rho = lambda_from_rho(transform_rho(rho, A, B));
        const LambdaTransform via_lambda =
            transform_lambda(lambda_from_rho(rho), so31_from_sl2c(A), so31_from_sl2c(B));
        CHECK((via_rho.entries - via_lambda.normalized.entries).cwiseAbs().maxCoeff() < 1e-9);
    }
}

TEST_CASE("transform_rho with identities and unitaries") {
    Rng rng(31);
    const DensityMatrix rho = random_density(rng);
    const DensityMatrix same =
        transform_rho(rho, Eigen::Matrix2cd::Identity(), Eigen::Matrix2cd::Identity());
    CHECK((same.entries - rho.entries).cwiseAbs().maxCoeff() < 1e-15);

    // special unitaries preserve the spectrum
    Eigen::Matrix2cd U = Eigen::Matrix2cd::Zero();
    U(0, 0) = std::exp(std::complex<double>(0.0, 0.3));
    U(1, 1) = std::exp(std::complex<double>(0.0, -0.3));
    Eigen::Matrix2cd V;
    V << std::complex<double>(std::cos(0.4)), std::complex<double>(-std::sin(0.4)),
         std::complex<double>(std::sin(0.4)), std::complex<double>(std::cos(0.4));
    const DensityMatrix rot = transform_rho(rho, U, V);
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> e1(rho.entries);
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> e2(rot.entries);
    CHECK((e1.eigenvalues() - e2.eigenvalues()).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("transform_rho of the maximally mixed state") {
    Rng rng(37);
    const Eigen::Matrix2cd A = random_sl2c(rng);
    const Eigen::Matrix2cd B = random_sl2c(rng);
    const DensityMatrix rho = make_density(0.25 * Eigen::Matrix4cd::Identity());
    const DensityMatrix out = transform_rho(rho, A, B);
    Eigen::Matrix4cd expect;
    const Eigen::Matrix2cd aa = A * A.adjoint();
    const Eigen::Matrix2cd bb = B * B.adjoint();
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) expect.block<2, 2>(2 * i, 2 * j) = aa(i, j) * bb;
    expect /= expect.trace();
    CHECK((out.entries - expect).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("reorthonormalize_lorentz repairs a perturbed boost") {
    Eigen::Matrix2cd A = Eigen::Matrix2cd::Zero();
    A(0, 0) = std::exp(0.7);
    A(1, 1) = std::exp(-0.7);
    Eigen::Matrix4d L = so31_from_sl2c(A);
    L(0, 3) += 1e-8;
    const Eigen::Matrix4d fixed = reorthonormalize_lorentz(L);
    CHECK(is_lorentz(fixed, 1e-12));
}
