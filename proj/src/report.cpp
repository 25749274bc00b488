#include "lcf/report.hpp"

namespace lcf {

json analysis_report(const Input& in, const ReportOptions& opt) {
    json rep;
    rep["input"] = json{{"kind", to_string(in.kind)}, {"data", in.echo}};
    if (in.lambda) rep["lambda"] = matrix_to_json(in.lambda->entries);

    const OmegaMatrix& om = in.omega;
    rep["omega"] = matrix_to_json(om.omega);
    rep["omega0"] = json{{"n0", om.n0},
                         {"n", vector_to_json(om.n)},
                         {"alpha", vector_to_json(om.alpha)},
                         {"R", matrix_to_json(om.R)}};

    const GEigenSystem es = g_eigensystem(om, opt.dtol);
    rep["case_id"] = es.case_id;
    rep["eigensystem"] = eigensystem_to_json(es);

    const CanonicalResult canon = in.lambda ? canonicalize(*in.lambda, opt.dtol)
                                            : canonicalize_omega(om, opt.dtol);
    rep["canonical"] = canonical_to_json(canon);
    rep["rho_canonical"] = density_to_json(canon.rho_canonical);
    rep["rho_validation"] = validation_to_json(canon.rho_validation);

    const Ellipsoid ell = ellipsoid_of(canon);
    rep["ellipsoid"] = ellipsoid_to_json(ell);

    const SurfaceCheck surf =
        verify_on_surface(canon.lambda_canonical, ell, opt.surface_samples, opt.seed);
    rep["surface_check"] = json{{"max_residual", surf.max_residual},
                                {"samples", surf.n_samples},
                                {"zero_probability_outcomes", surf.n_zero_probability},
                                {"seed", opt.seed}};

    const CaseStructure cs = classify_structure(om, opt.dtol);
    rep["diagnostics"] = json{{"eigen_residual", es.max_residual},
                              {"oracle_mismatch", es.oracle_mismatch},
                              {"congruence_residual", canon.congruence_residual},
                              {"factor_residual", canon.factor_residual},
                              {"r", cs.r},
                              {"k", cs.k}};
    return rep;
}

}  // namespace lcf
