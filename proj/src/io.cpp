#include "lcf/io.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace lcf {

namespace {

std::string fmt17(double x) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

Eigen::Matrix4d matrix4_from_json_array(const json& arr, const char* what) {
    if (!arr.is_array() || arr.size() != 4) {
        throw ParseError(std::string(what) + " must be a 4x4 array");
    }
    Eigen::Matrix4d m;
    for (int i = 0; i < 4; ++i) {
        const json& row = arr[static_cast<std::size_t>(i)];
        if (!row.is_array() || row.size() != 4) {
            throw ParseError(std::string(what) + " must be a 4x4 array");
        }
        for (int j = 0; j < 4; ++j) {
            const json& v = row[static_cast<std::size_t>(j)];
            if (!v.is_number()) {
                throw ParseError(std::string(what) + " entries must be numbers");
            }
            m(i, j) = v.get<double>();
        }
    }
    return m;
}

}  // namespace

const char* to_string(InputKind k) {
    switch (k) {
        case InputKind::Density: return "density";
        case InputKind::Lambda: return "lambda";
        case InputKind::Omega: return "omega";
    }
    return "?";
}

json matrix_to_json(const Eigen::Matrix4d& m) {
    json rows = json::array();
    for (int i = 0; i < 4; ++i) {
        json row = json::array();
        for (int j = 0; j < 4; ++j) row.push_back(m(i, j));
        rows.push_back(row);
    }
    return rows;
}

json matrix_to_json(const Eigen::Matrix3d& m) {
    json rows = json::array();
    for (int i = 0; i < 3; ++i) {
        json row = json::array();
        for (int j = 0; j < 3; ++j) row.push_back(m(i, j));
        rows.push_back(row);
    }
    return rows;
}

Eigen::Matrix4d matrix4_from_json(const json& j) {
    return matrix4_from_json_array(j, "matrix");
}

json vector_to_json(const Eigen::Vector3d& v) {
    return json::array({v(0), v(1), v(2)});
}

json vector_to_json(const Eigen::Vector4d& v) {
    return json::array({v(0), v(1), v(2), v(3)});
}

json density_to_json(const DensityMatrix& rho) {
    return json{{"re", matrix_to_json(Eigen::Matrix4d(rho.entries.real()))},
                {"im", matrix_to_json(Eigen::Matrix4d(rho.entries.imag()))}};
}

DensityMatrix density_from_json(const json& j, double tol) {
    if (!j.contains("re") || !j.contains("im")) {
        throw ParseError("density JSON requires top-level keys 're' and 'im'");
    }
    const Eigen::Matrix4d re = matrix4_from_json_array(j.at("re"), "re");
    const Eigen::Matrix4d im = matrix4_from_json_array(j.at("im"), "im");
    Eigen::Matrix4cd rho = re.cast<std::complex<double>>();
    rho += std::complex<double>(0.0, 1.0) * im.cast<std::complex<double>>();
    return make_density(rho, tol);
}

json lambda_to_json(const RealParam& lam) {
    return json{{"lambda", matrix_to_json(lam.entries)}};
}

RealParam lambda_from_json(const json& j, double tol) {
    if (!j.contains("lambda")) {
        throw ParseError("Lambda JSON requires top-level key 'lambda'");
    }
    const Eigen::Matrix4d m = matrix4_from_json_array(j.at("lambda"), "lambda");
    if (std::abs(m(0, 0) - 1.0) > tol) {
        throw ValidationError("Lambda entry (0,0) must be 1");
    }
    if (m.cwiseAbs().maxCoeff() > 1.0 + tol) {
        throw ValidationError("Lambda entries are expectation values and must lie in [-1, 1]");
    }
    return RealParam{m};
}

json validation_to_json(const ValidationReport& rep) {
    return json{{"hermiticity_residual", rep.hermiticity_residual},
                {"trace_residual", rep.trace_residual},
                {"min_eigenvalue", rep.min_eigenvalue},
                {"hermitian", rep.hermitian},
                {"unit_trace", rep.unit_trace},
                {"positive_semidefinite", rep.positive_semidefinite},
                {"pass", rep.pass()}};
}

json eigensystem_to_json(const GEigenSystem& es) {
    json vecs = json::array();
    json types = json::array();
    json norms = json::array();
    for (int i = 0; i < 4; ++i) {
        // report eigenvectors at unit Euclidean norm with the first
        // significant component positive
        Eigen::Vector4d x = es.eigenvectors[static_cast<std::size_t>(i)].normalized();
        for (int c = 0; c < 4; ++c) {
            if (std::abs(x(c)) > 1e-12) {
                if (x(c) < 0.0) x = -x;
                break;
            }
        }
        vecs.push_back(vector_to_json(x));
        types.push_back(to_string(es.causal_types[static_cast<std::size_t>(i)]));
        norms.push_back(minkowski_norm(x));
    }
    return json{{"eigenvalues", vector_to_json(es.eigenvalues)},
                {"eigenvectors", vecs},
                {"causal_types", types},
                {"minkowski_norms", norms},
                {"case_id", es.case_id},
                {"class", to_string(es.cls)}};
}

json canonical_to_json(const CanonicalResult& res) {
    json j{{"class", to_string(res.cls)},
           {"lambda_canonical", matrix_to_json(res.lambda_canonical.entries)},
           {"eigenvalues", vector_to_json(res.eigenvalues)}};
    if (res.cls == CanonicalClass::Ic) {
        j["sign"] = res.sign;
    } else {
        j["s0"] = res.s0;
        j["s1"] = res.s1;
        j["chi0"] = res.chi0;
    }
    if (res.has_factors) {
        j["L_A"] = matrix_to_json(res.L_A);
        j["L_B"] = matrix_to_json(res.L_B);
    }
    return j;
}

json ellipsoid_to_json(const Ellipsoid& ell) {
    return json{{"center", vector_to_json(ell.center)},
                {"semi_axes", vector_to_json(ell.semi_axes)}};
}

json outcome_to_json(const SteeringOutcome& out) {
    return json{{"q", vector_to_json(out.q)}, {"probability", out.probability}};
}

json hprofile_annotation(const HProfile& prof) {
    json roots = json::array();
    for (const HRoot& r : prof.h_roots) {
        roots.push_back(json{{"lambda", r.lambda},
                             {"slope", r.slope},
                             {"double_root", r.double_root}});
    }
    json phi1 = json::array();
    for (double r : prof.phi1_roots) phi1.push_back(r);
    json poles = json::array();
    for (double p : prof.poles) poles.push_back(p);
    return json{{"case_id", prof.case_id},
                {"poles", poles},
                {"h_roots", roots},
                {"phi1_roots", phi1}};
}

Input input_from_json(const json& j, double tol) {
    Input in;
    in.echo = j;
    if (j.contains("re")) {
        in.kind = InputKind::Density;
        in.rho = density_from_json(j, tol);
        in.lambda = lambda_from_rho(*in.rho, tol);
        in.omega = omega_from_lambda(*in.lambda);
    } else if (j.contains("lambda")) {
        in.kind = InputKind::Lambda;
        in.lambda = lambda_from_json(j, tol);
        in.omega = omega_from_lambda(*in.lambda);
    } else if (j.contains("omega")) {
        in.kind = InputKind::Omega;
        in.omega = omega_from_matrix(matrix4_from_json_array(j.at("omega"), "omega"));
    } else {
        throw ParseError("unrecognized input: expected top-level key 're', 'lambda' or 'omega'");
    }
    return in;
}

Input load_input(const std::string& path, double tol) {
    std::ifstream f(path);
    if (!f) throw ParseError("cannot open input file: " + path);
    json j;
    try {
        f >> j;
    } catch (const json::exception& e) {
        throw ParseError("invalid JSON in " + path + ": " + e.what());
    }
    return input_from_json(j, tol);
}

std::string hprofile_csv(const HProfile& prof) {
    std::ostringstream out;
    out << "lambda,h,is_gap\n";
    for (const HSample& s : prof.samples) {
        out << fmt17(s.lambda) << ',' << fmt17(s.h) << ',' << (s.is_gap ? 1 : 0) << '\n';
    }
    return out.str();
}

std::string mesh_csv(const std::vector<Eigen::Vector3d>& points) {
    std::ostringstream out;
    out << "x,y,z\n";
    for (const Eigen::Vector3d& p : points) {
        out << fmt17(p(0)) << ',' << fmt17(p(1)) << ',' << fmt17(p(2)) << '\n';
    }
    return out.str();
}

void atomic_write(const std::string& path, const std::string& content) {
    namespace fs = std::filesystem;
    const fs::path target(path);
    fs::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f) throw Error("cannot open " + tmp.string() + " for writing");
        f << content;
        if (!f.good()) {
            f.close();
            fs::remove(tmp);
            throw Error("write failed for " + tmp.string());
        }
    }
    fs::rename(tmp, target);
}

}  // namespace lcf
