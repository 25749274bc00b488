#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "lcf/canonical.hpp"
#include "lcf/spectral.hpp"
#include "lcf/steering.hpp"

namespace lcf {

using nlohmann::json;

// Matrix and vector helpers: row-major arrays of IEEE-754 doubles.
json matrix_to_json(const Eigen::Matrix4d& m);
json matrix_to_json(const Eigen::Matrix3d& m);
Eigen::Matrix4d matrix4_from_json(const json& j);
json vector_to_json(const Eigen::Vector3d& v);
json vector_to_json(const Eigen::Vector4d& v);

// Schemas: density {"re": 4x4, "im": 4x4}, Lambda {"lambda": 4x4},
// Omega {"omega": 4x4}.
json density_to_json(const DensityMatrix& rho);
DensityMatrix density_from_json(const json& j, double tol = kDefaultTol);
json lambda_to_json(const RealParam& lam);
RealParam lambda_from_json(const json& j, double tol = kDefaultTol);

json validation_to_json(const ValidationReport& rep);
json eigensystem_to_json(const GEigenSystem& es);
json canonical_to_json(const CanonicalResult& res);
json ellipsoid_to_json(const Ellipsoid& ell);
json outcome_to_json(const SteeringOutcome& out);

// Sidecar annotation for an h-profile: poles, h-roots with slopes and
// tangency flags, phi_1 roots, case label.
json hprofile_annotation(const HProfile& prof);

enum class InputKind { Density, Lambda, Omega };

const char* to_string(InputKind k);

struct Input {
    InputKind kind = InputKind::Omega;
    std::optional<DensityMatrix> rho;   // density input
    std::optional<RealParam> lambda;    // density (derived) or Lambda input
    OmegaMatrix omega;                  // always available
    json echo;                          // the parsed document
};

// Auto-detects the schema by the top-level key re / lambda / omega.
Input input_from_json(const json& j, double tol = kDefaultTol);
Input load_input(const std::string& path, double tol = kDefaultTol);

// CSV emission: '\n' line endings, '.' decimal separator, 17 significant
// digits.
std::string hprofile_csv(const HProfile& prof);
std::string mesh_csv(const std::vector<Eigen::Vector3d>& points);

// Writes to a temporary file in the same directory, then renames, so a
// failure never leaves a partial file behind.
void atomic_write(const std::string& path, const std::string& content);

}  // namespace lcf
