#include <doctest.h>

#include <cmath>

#include <Eigen/Dense>

#include "lcf/random.hpp"
#include "lcf/steering.hpp"
#include "test_support.hpp"

using namespace lcf;

namespace {

RealParam diag_lambda(double a, double b, double c) {
    Eigen::Matrix4d d = Eigen::Matrix4d::Zero();
    d.diagonal() << 1.0, a, b, c;
    return RealParam{d};
}

}  // namespace

TEST_CASE("steer on the maximally mixed state") {
    const RealParam lam = diag_lambda(0.0, 0.0, 0.0);
    const SteeringOutcome out = steer(lam, {0.0, 0.0, 1.0});
    CHECK(out.q.norm() == 0.0);
    CHECK(out.probability == doctest::Approx(0.5));  // unbiased coin for any direction
}

TEST_CASE("steer along a canonical axis reaches the semi-axis point") {
    const RealParam lam = diag_lambda(0.739, 0.630, 0.344);
    const SteeringOutcome oz = steer(lam, {0.0, 0.0, 1.0});
    CHECK((oz.q - Eigen::Vector3d(0.0, 0.0, 0.344)).norm() < 1e-15);
    CHECK(oz.probability == doctest::Approx(0.5));
    const SteeringOutcome ox = steer(lam, {1.0, 0.0, 0.0});
    CHECK((ox.q - Eigen::Vector3d(0.739, 0.0, 0.0)).norm() < 1e-15);
}

TEST_CASE("steer on the Bell state maps the direction to the mirrored point") {
    Eigen::Matrix4d bell = Eigen::Matrix4d::Zero();
    bell.diagonal() << 1.0, 1.0, -1.0, 1.0;
    const SteeringOutcome out = steer(RealParam{bell}, {0.0, 0.0, 1.0});
    CHECK((out.q - Eigen::Vector3d(0.0, 0.0, 1.0)).norm() < 1e-15);
    CHECK(out.probability == doctest::Approx(0.5).epsilon(1e-15));
}

TEST_CASE("steer on the IIc canonical Lambda") {
    const RealParam lam{lcf::testing::lambda_iic(0.5, 1.0 / std::sqrt(2.0))};
    const SteeringOutcome out = steer(lam, {0.0, 0.0, -1.0});
    // forward map: outcome weight (1 + b.p)/2 = 1/4, steered point -z
    CHECK(out.probability == doctest::Approx(0.25).epsilon(1e-15));
    CHECK((out.q - Eigen::Vector3d(0.0, 0.0, -1.0)).norm() < 1e-12);
}

TEST_CASE("steer validates the direction and the outcome probability") {
    const RealParam lam = diag_lambda(0.5, 0.5, 0.5);
    CHECK_THROWS_AS(steer(lam, {0.0, 0.0, 2.0}), NonUnitDirection);

    // pure marginal: the antipodal outcome has zero probability
    Eigen::Matrix4d m = Eigen::Matrix4d::Zero();
    m(0, 0) = 1.0;
    m(0, 3) = 1.0;  // b = +z with |b| = 1
    CHECK_THROWS_AS(steer(RealParam{m}, {0.0, 0.0, -1.0}), ZeroProbabilityOutcome);
}

TEST_CASE("antipodal outcome probabilities sum to Lambda00 = 1") {
    Rng rng(307);
    for (int trial = 0; trial < 50; ++trial) {
        const RealParam lam = lambda_from_rho(random_density(rng));
        const Eigen::Vector3d p = rng.unit_vector3();
        const double sum =
            steer(lam, p).probability + steer(lam, Eigen::Vector3d(-p)).probability;
        CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("ellipsoid_of the worked examples") {
    const CanonicalResult r1 =
        canonicalize_omega(omega_from_matrix(lcf::testing::example1_omega0()));
    const Ellipsoid e1 = ellipsoid_of(r1);
    CHECK(e1.center.norm() == 0.0);
    CHECK(e1.semi_axes(0) == doctest::Approx(0.739).epsilon(2e-3));
    CHECK(e1.semi_axes(1) == doctest::Approx(0.630).epsilon(2e-3));
    CHECK(e1.semi_axes(2) == doctest::Approx(0.344).epsilon(2e-3));

    const CanonicalResult r4 =
        canonicalize_omega(omega_from_matrix(lcf::testing::example4_omega0()));
    const Ellipsoid e4 = ellipsoid_of(r4);
    CHECK((e4.center - Eigen::Vector3d(0.0, 0.0, 0.5)).norm() < 1e-9);
    CHECK(e4.semi_axes(0) == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-9));
    CHECK(e4.semi_axes(2) == doctest::Approx(0.5).epsilon(1e-9));
}

TEST_CASE("ellipsoid of the Bell-state orbit is the unit sphere") {
    Eigen::Matrix4d bell = Eigen::Matrix4d::Zero();
    bell.diagonal() << 1.0, 1.0, -1.0, 1.0;
    const Ellipsoid ell = ellipsoid_of(canonicalize(RealParam{bell}));
    CHECK((ell.semi_axes - Eigen::Vector3d::Ones()).cwiseAbs().maxCoeff() < 1e-9);
}

TEST_CASE("verify_on_surface on the Example 1 canonical Lambda") {
    const CanonicalResult res =
        canonicalize_omega(omega_from_matrix(lcf::testing::example1_omega0()));
    const SurfaceCheck check =
        verify_on_surface(res.lambda_canonical, ellipsoid_of(res), 10000, 12345);
    CHECK(check.max_residual < 1e-9);
    CHECK(check.n_zero_probability == 0);
}

TEST_CASE("verify_on_surface on the Example 4 shifted spheroid") {
    const CanonicalResult res =
        canonicalize_omega(omega_from_matrix(lcf::testing::example4_omega0()));
    const SurfaceCheck check =
        verify_on_surface(res.lambda_canonical, ellipsoid_of(res), 10000, 12345);
    CHECK(check.max_residual < 1e-9);
}

TEST_CASE("verify_on_surface on the point ellipsoid of the maximally mixed state") {
    const RealParam lam = diag_lambda(0.0, 0.0, 0.0);
    const Ellipsoid point{Eigen::Vector3d::Zero(), Eigen::Vector3d::Zero()};
    const SurfaceCheck check = verify_on_surface(lam, point, 1000, 7);
    CHECK(check.max_residual == 0.0);
}

TEST_CASE("verify_on_surface is reproducible for a fixed seed") {
    const CanonicalResult res =
        canonicalize_omega(omega_from_matrix(lcf::testing::example2_omega0()));
    const Ellipsoid ell = ellipsoid_of(res);
    const SurfaceCheck a = verify_on_surface(res.lambda_canonical, ell, 500, 99);
    const SurfaceCheck b = verify_on_surface(res.lambda_canonical, ell, 500, 99);
    CHECK(a.max_residual == b.max_residual);
}

TEST_CASE("surface membership and containment over random states") {
    Rng rng(311);
    for (int trial = 0; trial < 200; ++trial) {
        const CanonicalResult res = canonicalize(lambda_from_rho(random_density(rng)));
        const Ellipsoid ell = ellipsoid_of(res);
        const SurfaceCheck check =
            verify_on_surface(res.lambda_canonical, ell, 1000, 1000 + trial);
        CHECK(check.max_residual < 1e-8);

        // steered points of the original state stay inside the Bloch ball
        const RealParam lam = lambda_from_rho(random_density(rng));
        for (int k = 0; k < 20; ++k) {
            const SteeringOutcome out = steer(lam, rng.unit_vector3());
            CHECK(out.q.norm() <= 1.0 + 1e-9);
            CHECK(out.probability > 0.0);
            CHECK(out.probability <= 1.0 + 1e-12);
        }
    }
}

TEST_CASE("ellipsoid axes match the eigenvalue ratios (Ic)") {
    Rng rng(313);
    for (int trial = 0; trial < 50; ++trial) {
        const CanonicalResult res = canonicalize(lambda_from_rho(random_density(rng)));
        if (res.cls != CanonicalClass::Ic) continue;
        const Ellipsoid ell = ellipsoid_of(res);
        for (int i = 0; i < 3; ++i) {
            CHECK(ell.semi_axes(i) ==
                  doctest::Approx(std::sqrt(res.eigenvalues(i + 1) / res.eigenvalues(0)))
                      .epsilon(1e-7));
        }
    }
}

TEST_CASE("sample_surface emits the six axis points first") {
    const Ellipsoid unit{Eigen::Vector3d::Zero(), Eigen::Vector3d::Ones()};
    const auto pts = sample_surface(unit, 6);
    REQUIRE(pts.size() == 6);
    CHECK((pts[0] - Eigen::Vector3d(1, 0, 0)).norm() == 0.0);
    CHECK((pts[1] - Eigen::Vector3d(-1, 0, 0)).norm() == 0.0);
    CHECK((pts[2] - Eigen::Vector3d(0, 1, 0)).norm() == 0.0);
    CHECK((pts[3] - Eigen::Vector3d(0, -1, 0)).norm() == 0.0);
    CHECK((pts[4] - Eigen::Vector3d(0, 0, 1)).norm() == 0.0);
    CHECK((pts[5] - Eigen::Vector3d(0, 0, -1)).norm() == 0.0);
}

TEST_CASE("sample_surface points satisfy the quadratic form") {
    const Ellipsoid spheroid{Eigen::Vector3d(0, 0, 0.5),
                             Eigen::Vector3d(1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0), 0.5)};
    for (const Eigen::Vector3d& p : sample_surface(spheroid, 500)) {
        double form = 0.0;
        for (int i = 0; i < 3; ++i) {
            const double d = (p(i) - spheroid.center(i)) / spheroid.semi_axes(i);
            form += d * d;
        }
        CHECK(form == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("sample_surface of a point ellipsoid returns copies of the center") {
    const Ellipsoid point{Eigen::Vector3d(0.1, 0.2, 0.3), Eigen::Vector3d::Zero()};
    for (const Eigen::Vector3d& p : sample_surface(point, 10)) {
        CHECK((p - point.center).norm() == 0.0);
    }
}
