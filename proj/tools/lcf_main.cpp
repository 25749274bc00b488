// lcf: Lorentz canonical forms and steering ellipsoids of two-qubit states.
//
// Subcommands:
//   analyze    full pipeline report (JSON) for a density / Lambda / Omega input
//   hprofile   CSV samples of h(lambda) plus a root/pole annotation sidecar
//   ellipsoid  canonical-surface mesh CSV plus a center/axes sidecar
//   steer      single steering outcome for a measurement direction
//
// Exit codes: 0 success, 1 parse error, 2 validation failure,
// 3 spectral failure, 4 internal error.

#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "lcf/io.hpp"
#include "lcf/report.hpp"

namespace {

struct CommonOpts {
    std::string input;
    std::string out;
    double tol = lcf::kDefaultTol;
    double dtol = lcf::kDefaultDegeneracyTol;
};

void emit(const std::string& out_path, const std::string& content) {
    if (out_path.empty()) {
        std::cout << content;
        if (content.empty() || content.back() != '\n') std::cout << '\n';
    } else {
        lcf::atomic_write(out_path, content);
    }
}

std::string sidecar_path(const std::string& csv_path) {
    return csv_path + ".json";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Lorentz canonical forms of two-qubit states"};
    app.require_subcommand(1);

    CommonOpts opts;
    int samples = 1000;
    std::uint64_t seed = 1;
    double lambda_min = -0.5;
    double lambda_max = 1.5;
    double px = 0.0, py = 0.0, pz = 1.0;

    auto add_common = [&](CLI::App* cmd, bool needs_out_default) {
        cmd->add_option("--input", opts.input, "input JSON (density {re,im}, {lambda} or {omega})")
            ->required();
        cmd->add_option("--out", opts.out,
                        needs_out_default ? "output path (required)" : "output path (default: stdout)");
        cmd->add_option("--tol", opts.tol, "validation tolerance (default 1e-9)");
        cmd->add_option("--dtol", opts.dtol,
                        "relative degeneracy tolerance for the case census (default 1e-8)");
    };

    CLI::App* analyze = app.add_subcommand("analyze", "full canonical-form report");
    add_common(analyze, false);
    analyze->add_option("--samples", samples, "surface-check sample count (default 1000)");
    analyze->add_option("--seed", seed, "surface-check RNG seed (default 1)");

    CLI::App* hprofile = app.add_subcommand("hprofile", "sample h(lambda) to CSV");
    add_common(hprofile, true);
    hprofile->add_option("--lambda-min", lambda_min, "grid start (default -0.5)");
    hprofile->add_option("--lambda-max", lambda_max, "grid end (default 1.5)");
    hprofile->add_option("--samples", samples, "grid size (default 1000)");

    CLI::App* ellipsoid = app.add_subcommand("ellipsoid", "canonical surface mesh to CSV");
    add_common(ellipsoid, true);
    ellipsoid->add_option("--samples", samples, "mesh point count (default 1000)");

    CLI::App* steer_cmd = app.add_subcommand("steer", "steer along one direction");
    add_common(steer_cmd, false);
    steer_cmd->add_option("--px", px, "direction x (default 0)");
    steer_cmd->add_option("--py", py, "direction y (default 0)");
    steer_cmd->add_option("--pz", pz, "direction z (default 1)");

    CLI11_PARSE(app, argc, argv);

    try {
        const lcf::Input input = lcf::load_input(opts.input, opts.tol);

        if (app.got_subcommand(analyze)) {
            lcf::ReportOptions ropt;
            ropt.dtol = opts.dtol;
            ropt.surface_samples = samples;
            ropt.seed = seed;
            emit(opts.out, lcf::analysis_report(input, ropt).dump(1) + "\n");
        } else if (app.got_subcommand(hprofile)) {
            if (opts.out.empty()) throw lcf::ValidationError("hprofile requires --out");
            const lcf::HProfile prof =
                lcf::h_profile(input.omega, lambda_min, lambda_max, samples);
            lcf::atomic_write(opts.out, lcf::hprofile_csv(prof));
            lcf::atomic_write(sidecar_path(opts.out),
                              lcf::hprofile_annotation(prof).dump(1) + "\n");
        } else if (app.got_subcommand(ellipsoid)) {
            if (opts.out.empty()) throw lcf::ValidationError("ellipsoid requires --out");
            const lcf::CanonicalResult canon =
                input.lambda ? lcf::canonicalize(*input.lambda, opts.dtol)
                             : lcf::canonicalize_omega(input.omega, opts.dtol);
            const lcf::Ellipsoid ell = lcf::ellipsoid_of(canon);
            lcf::atomic_write(opts.out, lcf::mesh_csv(lcf::sample_surface(ell, samples)));
            lcf::json side = lcf::ellipsoid_to_json(ell);
            side["class"] = lcf::to_string(canon.cls);
            lcf::atomic_write(sidecar_path(opts.out), side.dump(1) + "\n");
        } else if (app.got_subcommand(steer_cmd)) {
            if (!input.lambda) {
                throw lcf::ValidationError(
                    "steer requires a density or Lambda input (an Omega does not "
                    "determine the steering map)");
            }
            Eigen::Vector3d p(px, py, pz);
            const double norm = p.norm();
            if (std::abs(norm - 1.0) > 1e-6) {
                throw lcf::NonUnitDirection("direction norm " + std::to_string(norm) +
                                            " is not within 1e-6 of 1");
            }
            p /= norm;
            emit(opts.out, lcf::outcome_to_json(lcf::steer(*input.lambda, p)).dump(1) + "\n");
        }
    } catch (const lcf::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 1;
    } catch (const lcf::ValidationError& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return 2;
    } catch (const lcf::SpectralError& e) {
        std::cerr << "spectral failure: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    }
    return 0;
}
