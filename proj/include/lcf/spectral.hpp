#pragma once

#include <array>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "lcf/minkowski.hpp"
#include "lcf/pauli_algebra.hpp"

namespace lcf {

// Degeneracy tolerance, relative to the spectral scale max|alpha_i| + |n0|.
inline constexpr double kDefaultDegeneracyTol = 1e-8;

// Omega = Lambda^T G Lambda together with the rotation R that diagonalizes
// its spatial block: Omega_0 = (1 (+) R) Omega (1 (+) R^T) has the block form
// [[n0, n^T], [n, diag(alpha)]].
struct OmegaMatrix {
    Eigen::Matrix4d omega;   // symmetric input form
    Eigen::Matrix4d omega0;  // rotated block form
    double n0 = 0.0;
    Eigen::Vector3d n;
    Eigen::Vector3d alpha;
    Eigen::Matrix3d R;
};

OmegaMatrix omega_from_lambda(const RealParam& lam);

// Entry point for a symmetric 4x4 matrix given directly (already in, or to be
// brought to, the Omega_0 block form). When the spatial block is diagonal the
// given axis order is preserved (R = identity).
OmegaMatrix omega_from_matrix(const Eigen::Matrix4d& omega);

// Distinct discontinuity of h after merging alpha values equal within the
// degeneracy tolerance; weight is the sum of n_i^2 over merged components.
struct HPole {
    double position = 0.0;  // lambda = -alpha
    double weight = 0.0;
};

// One group of alpha values equal within tolerance. `coupled` lists the
// members whose n_i is nonzero (they share a pole of h); the remaining
// members contribute roots of phi_1.
struct AlphaGroup {
    double value = 0.0;
    std::vector<int> members;
    std::vector<int> coupled;
};

struct CaseStructure {
    std::string case_id;             // "(i)(A)" ... "(iv)(C)"
    std::array<bool, 3> n_zero{};    // |n_i| below tolerance
    std::vector<AlphaGroup> groups;  // partition of {0,1,2} by alpha equality
    std::vector<HPole> poles;        // sorted by position; k entries
    std::vector<double> phi1_roots;  // r entries, with multiplicity
    int k = 0;                       // number of distinct discontinuities of h
    int r = 0;                       // number of phi_1 roots
    double scale = 0.0;              // max|alpha_i| + |n0|
    double tol_abs = 0.0;            // dtol * scale
};

// Zero tests on n_i and degeneracy tests on alpha_i fix the case label, the
// phi_1 factor and the pole structure of h. r + k + 1 = 4 always.
CaseStructure classify_structure(const OmegaMatrix& om,
                                 double dtol = kDefaultDegeneracyTol);

std::string classify_case(const OmegaMatrix& om, double dtol = kDefaultDegeneracyTol);

// h(lambda) = n0 - lambda - sum_{i: n_i != 0} n_i^2 / (lambda + alpha_i).
// Throws PoleEvaluation within 1e-12 of a discontinuity.
double h_eval(const OmegaMatrix& om, double lambda);

// h evaluated on the merged pole structure; this is the function the root
// isolation works with. Finite everywhere except at the k distinct poles.
double h_structure_eval(const CaseStructure& cs, double n0, double lambda);

// h'(lambda) = -1 + sum_i n_i^2 / (lambda + alpha_i)^2.
double h_deriv(const OmegaMatrix& om, double lambda);

struct HRoot {
    double lambda = 0.0;
    double slope = 0.0;        // h'(lambda)
    bool double_root = false;  // tangency: h = h' = 0
};

// Bisection between consecutive poles plus the concave region right of the
// largest pole; a vanishing maximum there is the tangency (double root).
std::vector<HRoot> isolate_h_roots(const CaseStructure& cs, double n0);

struct HSample {
    double lambda = 0.0;
    double h = 0.0;
    bool is_gap = false;
};

struct HProfile {
    std::vector<double> poles;
    std::vector<double> roots;  // h-roots with multiplicity
    std::vector<double> slopes_at_roots;
    std::vector<HRoot> h_roots;  // distinct roots with tangency flags
    std::vector<double> phi1_roots;
    std::string case_id;
    std::vector<HSample> samples;
};

// Samples h on a grid; grid points within 1e-6 of a pole are skipped and one
// gap marker row is emitted at each in-range pole position.
HProfile h_profile(const OmegaMatrix& om, double lambda_min, double lambda_max,
                   int n_samples);

enum class CanonicalClass { Ic, IIc };

const char* to_string(CanonicalClass c);

struct GEigenSystem {
    Eigen::Vector4d eigenvalues;  // sorted descending
    // Minkowski-normalized: time-like X^T G X = +1 with X(0) > 0, space-like
    // X^T G X = -1, null scaled so X(0) = 1. In class IIc the defective
    // eigenvalue lambda_0 appears twice with the same null eigenvector.
    std::array<Eigen::Vector4d, 4> eigenvectors;
    std::array<CausalType, 4> causal_types;
    std::array<bool, 4> from_h{};    // root of h (true) or of phi_1 (false)
    std::array<double, 4> slopes{};  // h'(lambda) where from_h
    std::string case_id;
    CanonicalClass cls = CanonicalClass::Ic;
    Eigen::Matrix4d omega0;
    double max_residual = 0.0;     // max ||G Omega0 X - lambda X|| over unit X
    double oracle_mismatch = 0.0;  // vs dense eigensolver on G Omega0
};

// Eigenvalues from the h / phi_1 pipeline with the dense eigensolver run as a
// cross-check. Throws NegativeEigenvalue for eigenvalues below -1e-9 and
// SpectralFailure when a consistent tetrad/triad cannot be produced.
GEigenSystem g_eigensystem(const OmegaMatrix& om, double dtol = kDefaultDegeneracyTol);

// The closed-form eigenvector (1, -n_i/(lambda + alpha_i)) at an h-root;
// satisfies X^T G X = -h'(lambda). Components with n_i = 0 vanish.
Eigen::Vector4d h_root_eigenvector(const OmegaMatrix& om, const CaseStructure& cs,
                                   double lambda);

}  // namespace lcf
