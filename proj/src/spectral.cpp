#include "lcf/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

#include <Eigen/Eigenvalues>

namespace lcf {

namespace {

double sq(double x) { return x * x; }

// h restricted to the merged pole structure; finite at uncoupled -alpha_i.
double h_merged(const CaseStructure& cs, double n0, double lam) {
    double v = n0 - lam;
    for (const HPole& p : cs.poles) v -= p.weight / (lam - p.position);
    return v;
}

double hp_merged(const CaseStructure& cs, double lam) {
    double v = -1.0;
    for (const HPole& p : cs.poles) v += p.weight / sq(lam - p.position);
    return v;
}

double hpp_merged(const CaseStructure& cs, double lam) {
    double v = 0.0;
    for (const HPole& p : cs.poles) v -= 2.0 * p.weight / (sq(lam - p.position) * (lam - p.position));
    return v;
}

// Bisection for f with f(a) and f(b) of opposite sign; returns the midpoint
// of the final bracket.
template <typename F>
double bisect(F&& f, double a, double b) {
    double fa = f(a);
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (a + b);
        if (mid <= a || mid >= b) break;  // bracket exhausted at double precision
        const double fm = f(mid);
        if (fm == 0.0) return mid;
        if ((fa < 0.0) == (fm < 0.0)) {
            a = mid;
            fa = fm;
        } else {
            b = mid;
        }
        if ((b - a) <= 1e-15 * std::max(1.0, std::abs(a) + std::abs(b))) break;
    }
    return 0.5 * (a + b);
}

// A few guarded Newton steps polishing a bisection root.
double newton_polish(const CaseStructure& cs, double n0, double x, double lo, double hi) {
    for (int i = 0; i < 3; ++i) {
        const double f = h_merged(cs, n0, x);
        const double fp = hp_merged(cs, x);
        if (fp == 0.0) break;
        const double nx = x - f / fp;
        if (!(nx > lo && nx < hi)) break;
        x = nx;
    }
    return x;
}

std::string roman_label(int zeros) {
    switch (zeros) {
        case 0: return "(i)";
        case 1: return "(ii)";
        case 2: return "(iii)";
        default: return "(iv)";
    }
}

std::string degeneracy_label(const std::vector<AlphaGroup>& groups) {
    if (groups.size() == 1) return "(C)";
    if (groups.size() == 3) return "(A)";
    const AlphaGroup* pair = nullptr;
    for (const AlphaGroup& g : groups) {
        if (g.members.size() == 2) pair = &g;
    }
    if (pair == nullptr) return "(A)";
    const int i = pair->members[0], j = pair->members[1];
    if (i == 0 && j == 1) return "(B1)";
    if (i == 1 && j == 2) return "(B2)";
    return "(B3)";  // alpha_1 = alpha_3
}

}  // namespace

const char* to_string(CanonicalClass c) {
    return c == CanonicalClass::Ic ? "Ic" : "IIc";
}

OmegaMatrix omega_from_matrix(const Eigen::Matrix4d& omega) {
    const double scale = std::max(1.0, omega.cwiseAbs().maxCoeff());
    if ((omega - omega.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale) {
        throw ValidationError("Omega must be symmetric");
    }
    OmegaMatrix om;
    om.omega = 0.5 * (omega + omega.transpose());
    om.n0 = om.omega(0, 0);

    const Eigen::Matrix3d S = om.omega.block<3, 3>(1, 1);
    const Eigen::Vector3d w = om.omega.block<3, 1>(1, 0);

    double offdiag = 0.0;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            if (i != j) offdiag = std::max(offdiag, std::abs(S(i, j)));
        }
    }
    if (offdiag <= 1e-13 * std::max(1.0, S.cwiseAbs().maxCoeff())) {
        om.R = Eigen::Matrix3d::Identity();
        om.alpha = S.diagonal();
    } else {
        Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> es(S);
        Eigen::Matrix3d R = es.eigenvectors().transpose();
        if (R.determinant() < 0.0) R.row(2) = -R.row(2);
        om.R = R;
        om.alpha = es.eigenvalues();
    }
    om.n = om.R * w;

    om.omega0 = Eigen::Matrix4d::Zero();
    om.omega0(0, 0) = om.n0;
    om.omega0.block<3, 1>(1, 0) = om.n;
    om.omega0.block<1, 3>(0, 1) = om.n.transpose();
    om.omega0.block<3, 3>(1, 1) = om.alpha.asDiagonal();
    return om;
}

OmegaMatrix omega_from_lambda(const RealParam& lam) {
    return omega_from_matrix(lam.entries.transpose() * minkowski_metric() * lam.entries);
}

CaseStructure classify_structure(const OmegaMatrix& om, double dtol) {
    CaseStructure cs;
    cs.scale = om.alpha.cwiseAbs().maxCoeff() + std::abs(om.n0);
    cs.tol_abs = dtol * cs.scale;

    int zeros = 0;
    for (int i = 0; i < 3; ++i) {
        cs.n_zero[static_cast<std::size_t>(i)] = std::abs(om.n(i)) <= cs.tol_abs;
        if (cs.n_zero[static_cast<std::size_t>(i)]) ++zeros;
    }

    // Partition the alpha values transitively: walk them in sorted order and
    // start a new group at every gap larger than the tolerance.
    std::array<int, 3> order{0, 1, 2};
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return om.alpha(a) < om.alpha(b); });
    for (int idx : order) {
        if (!cs.groups.empty() &&
            om.alpha(idx) - om.alpha(cs.groups.back().members.back()) <= cs.tol_abs) {
            cs.groups.back().members.push_back(idx);
        } else {
            AlphaGroup g;
            g.members.push_back(idx);
            cs.groups.push_back(g);
        }
    }
    for (AlphaGroup& g : cs.groups) {
        double sum = 0.0;
        for (int idx : g.members) {
            sum += om.alpha(idx);
            if (!cs.n_zero[static_cast<std::size_t>(idx)]) g.coupled.push_back(idx);
        }
        g.value = sum / static_cast<double>(g.members.size());
        // members of one group keep their original index order
        std::sort(g.members.begin(), g.members.end());
        std::sort(g.coupled.begin(), g.coupled.end());
    }

    for (const AlphaGroup& g : cs.groups) {
        const int m = static_cast<int>(g.members.size());
        if (!g.coupled.empty()) {
            HPole pole;
            pole.position = -g.value;
            for (int idx : g.coupled) pole.weight += sq(om.n(idx));
            cs.poles.push_back(pole);
            for (int c = 0; c < m - 1; ++c) cs.phi1_roots.push_back(-g.value);
        } else {
            for (int c = 0; c < m; ++c) cs.phi1_roots.push_back(-g.value);
        }
    }
    std::sort(cs.poles.begin(), cs.poles.end(),
              [](const HPole& a, const HPole& b) { return a.position < b.position; });
    std::sort(cs.phi1_roots.begin(), cs.phi1_roots.end());

    cs.k = static_cast<int>(cs.poles.size());
    cs.r = static_cast<int>(cs.phi1_roots.size());
    cs.case_id = roman_label(zeros) + degeneracy_label(cs.groups);
    return cs;
}

std::string classify_case(const OmegaMatrix& om, double dtol) {
    const CaseStructure cs = classify_structure(om, dtol);
    // bookkeeping identity: r roots of phi_1 plus k+1 roots of h give all four
    if (cs.r + cs.k + 1 != 4) {
        throw SpectralFailure("case bookkeeping violated: r + k + 1 != 4");
    }
    return cs.case_id;
}

double h_eval(const OmegaMatrix& om, double lambda) {
    double v = om.n0 - lambda;
    for (int i = 0; i < 3; ++i) {
        if (om.n(i) == 0.0) continue;
        const double d = lambda + om.alpha(i);
        if (std::abs(d) <= 1e-12) {
            throw PoleEvaluation("h evaluated within 1e-12 of the pole at lambda = " +
                                 std::to_string(-om.alpha(i)));
        }
        v -= sq(om.n(i)) / d;
    }
    return v;
}

double h_structure_eval(const CaseStructure& cs, double n0, double lambda) {
    return h_merged(cs, n0, lambda);
}

double h_deriv(const OmegaMatrix& om, double lambda) {
    double v = -1.0;
    for (int i = 0; i < 3; ++i) {
        if (om.n(i) == 0.0) continue;
        const double d = lambda + om.alpha(i);
        if (std::abs(d) <= 1e-12) {
            throw PoleEvaluation("h' evaluated within 1e-12 of the pole at lambda = " +
                                 std::to_string(-om.alpha(i)));
        }
        v += sq(om.n(i)) / sq(d);
    }
    return v;
}

std::vector<HRoot> isolate_h_roots(const CaseStructure& cs, double n0) {
    std::vector<HRoot> roots;
    const auto h = [&](double x) { return h_merged(cs, n0, x); };
    const auto hp = [&](double x) { return hp_merged(cs, x); };

    if (cs.poles.empty()) {
        roots.push_back({n0, -1.0, false});
        return roots;
    }

    const double p_min = cs.poles.front().position;
    const double p_max = cs.poles.back().position;
    const double span = std::max({p_max - p_min, std::abs(p_max), std::abs(n0), 1e-3});

    // One sign change per interior gap: h -> -inf right of a pole and
    // h -> +inf left of the next one.
    for (std::size_t j = 0; j + 1 < cs.poles.size(); ++j) {
        const double a = cs.poles[j].position;
        const double b = cs.poles[j + 1].position;
        const double width = b - a;
        double da = width * 1e-3;
        while (h(a + da) >= 0.0 && da > width * 1e-15) da *= 1e-3;
        double db = width * 1e-3;
        while (h(b - db) <= 0.0 && db > width * 1e-15) db *= 1e-3;
        if (h(a + da) >= 0.0 || h(b - db) <= 0.0) {
            continue;  // no isolable crossing; the count check below reports it
        }
        double x = bisect(h, a + da, b - db);
        x = newton_polish(cs, n0, x, a, b);
        roots.push_back({x, hp(x), false});
    }

    // Right of the largest pole h is strictly concave, so it has a unique
    // maximum there and at most two zeros.
    double b = p_max + span;
    while (h(b) > 0.0 || hp(b) > 0.0) b = p_max + 2.0 * (b - p_max);
    double da = span * 1e-3;
    while (hp(p_max + da) <= 0.0 && da > span * 1e-15) da *= 1e-3;
    const double a = p_max + da;
    if (hp(a) <= 0.0) {
        // weightless pole at double precision; treat the region as rootless
        return roots;
    }
    double lam_star = bisect(hp, a, b);
    // polish the critical point on h'
    for (int i = 0; i < 3; ++i) {
        const double f = hp_merged(cs, lam_star);
        const double fpp = hpp_merged(cs, lam_star);
        if (fpp == 0.0) break;
        const double nx = lam_star - f / fpp;
        if (!(nx > a && nx < b)) break;
        lam_star = nx;
    }
    const double hmax = h(lam_star);
    const double ztol = 1e-10 * std::max(1.0, cs.scale);

    if (hmax > ztol) {
        double dl = da;
        while (h(p_max + dl) >= 0.0 && dl > span * 1e-15) dl *= 1e-3;
        if (h(p_max + dl) < 0.0) {
            double x = bisect(h, p_max + dl, lam_star);
            x = newton_polish(cs, n0, x, p_max, lam_star);
            roots.push_back({x, hp(x), false});
        }
        double x = bisect(h, lam_star, b);
        x = newton_polish(cs, n0, x, lam_star, b);
        roots.push_back({x, hp(x), false});
    } else if (hmax >= -ztol) {
        roots.push_back({lam_star, 0.0, true});  // tangency
    }
    // hmax < -ztol: no real roots right of the largest pole; the caller
    // detects the deficient count.

    std::sort(roots.begin(), roots.end(),
              [](const HRoot& x, const HRoot& y) { return x.lambda < y.lambda; });
    return roots;
}

Eigen::Vector4d h_root_eigenvector(const OmegaMatrix& om, const CaseStructure& cs,
                                   double lambda) {
    Eigen::Vector4d x;
    x(0) = 1.0;
    for (int i = 0; i < 3; ++i) {
        x(i + 1) = cs.n_zero[static_cast<std::size_t>(i)]
                       ? 0.0
                       : -om.n(i) / (lambda + om.alpha(i));
    }
    return x;
}

HProfile h_profile(const OmegaMatrix& om, double lambda_min, double lambda_max,
                   int n_samples) {
    if (!(lambda_min < lambda_max) || n_samples < 2) {
        throw ValidationError("h_profile requires lambda_min < lambda_max and n_samples >= 2");
    }
    const CaseStructure cs = classify_structure(om);
    HProfile prof;
    prof.case_id = cs.case_id;
    for (const HPole& p : cs.poles) prof.poles.push_back(p.position);
    prof.h_roots = isolate_h_roots(cs, om.n0);
    for (const HRoot& r : prof.h_roots) {
        const int mult = r.double_root ? 2 : 1;
        for (int m = 0; m < mult; ++m) {
            prof.roots.push_back(r.lambda);
            prof.slopes_at_roots.push_back(r.slope);
        }
    }
    prof.phi1_roots = cs.phi1_roots;

    const double step = (lambda_max - lambda_min) / static_cast<double>(n_samples - 1);
    for (int i = 0; i < n_samples; ++i) {
        const double lam = lambda_min + step * static_cast<double>(i);
        bool near_pole = false;
        for (const HPole& p : cs.poles) {
            if (std::abs(lam - p.position) < 1e-6) near_pole = true;
        }
        if (near_pole) continue;
        prof.samples.push_back({lam, h_merged(cs, om.n0, lam), false});
    }
    // one gap marker per in-range discontinuity, independent of the grid
    for (const HPole& p : cs.poles) {
        if (p.position >= lambda_min && p.position <= lambda_max) {
            prof.samples.push_back({p.position, 0.0, true});
        }
    }
    std::sort(prof.samples.begin(), prof.samples.end(),
              [](const HSample& x, const HSample& y) { return x.lambda < y.lambda; });
    return prof;
}

namespace {

struct EigenEntry {
    double lambda = 0.0;
    Eigen::Vector4d vec;
    bool from_h = false;
    double slope = 0.0;
    bool null_forced = false;  // tangency vector
};

// Spatial phi_1 eigenvectors of one alpha group, embedded as four-vectors.
std::vector<Eigen::Vector4d> phi1_vectors(const OmegaMatrix& om, const AlphaGroup& g) {
    std::vector<Eigen::Vector4d> out;
    const auto embed = [](const Eigen::Vector3d& v) {
        Eigen::Vector4d x = Eigen::Vector4d::Zero();
        x.tail<3>() = v;
        return x;
    };
    for (int idx : g.members) {
        const bool coupled =
            std::find(g.coupled.begin(), g.coupled.end(), idx) != g.coupled.end();
        if (!coupled) out.push_back(embed(Eigen::Vector3d::Unit(idx)));
    }
    if (g.coupled.size() == 2) {
        const int i = g.coupled[0], j = g.coupled[1];
        Eigen::Vector3d v = Eigen::Vector3d::Zero();
        v(i) = om.n(j);
        v(j) = -om.n(i);
        out.push_back(embed(v.normalized()));
    } else if (g.coupled.size() == 3) {
        // orthonormal basis of the plane n . x = 0
        const Eigen::Vector3d nv(om.n(0), om.n(1), om.n(2));
        int least = 0;
        for (int i = 1; i < 3; ++i) {
            if (std::abs(nv(i)) < std::abs(nv(least))) least = i;
        }
        const Eigen::Vector3d u1 = nv.cross(Eigen::Vector3d::Unit(least)).normalized();
        const Eigen::Vector3d u2 = nv.cross(u1).normalized();
        out.push_back(embed(u1));
        out.push_back(embed(u2));
    }
    return out;
}

void fix_spacelike_sign(Eigen::Vector4d& x) {
    for (int i = 0; i < 4; ++i) {
        if (std::abs(x(i)) > 1e-12 * x.norm()) {
            if (x(i) < 0.0) x = -x;
            return;
        }
    }
}

}  // namespace

GEigenSystem g_eigensystem(const OmegaMatrix& om, double dtol) {
    // The case label follows the requested degeneracy tolerance; the numeric
    // work uses a machine-level structure so that couplings just below dtol
    // still contribute their poles (zeroing them shifts tiny eigenvalues by
    // n_i^2 / (gap * slope), which ruins eigenvalue ratios).
    const CaseStructure cls = classify_structure(om, dtol);
    const CaseStructure cs = classify_structure(om, 1e-15);
    const std::vector<HRoot> hroots = isolate_h_roots(cs, om.n0);

    int h_mult = 0;
    for (const HRoot& r : hroots) h_mult += r.double_root ? 2 : 1;
    if (h_mult != cs.k + 1) {
        throw SpectralFailure("h(lambda) has " + std::to_string(h_mult) +
                              " real roots right of its poles, expected " +
                              std::to_string(cs.k + 1) +
                              "; the input does not parametrize a physical state");
    }

    std::vector<EigenEntry> entries;
    for (const HRoot& r : hroots) {
        EigenEntry e;
        e.lambda = r.lambda;
        e.vec = h_root_eigenvector(om, cs, r.lambda);
        e.from_h = true;
        e.slope = r.slope;
        e.null_forced = r.double_root;
        entries.push_back(e);
        if (r.double_root) entries.push_back(e);  // algebraic multiplicity two
    }
    for (const AlphaGroup& g : cs.groups) {
        for (const Eigen::Vector4d& v : phi1_vectors(om, g)) {
            EigenEntry e;
            e.lambda = -g.value;
            e.vec = v;
            e.from_h = false;
            entries.push_back(e);
        }
    }
    if (entries.size() != 4) {
        throw SpectralFailure("expected four G-eigenvalues, produced " +
                              std::to_string(entries.size()));
    }

    std::stable_sort(entries.begin(), entries.end(),
                     [](const EigenEntry& a, const EigenEntry& b) {
                         return a.lambda > b.lambda;
                     });
    // within a degeneracy cluster the time-like/null h-root leads
    const double group_tol = std::max(cs.tol_abs, 1e-12 * std::max(1.0, cs.scale));
    std::size_t gstart = 0;
    for (std::size_t i = 1; i <= entries.size(); ++i) {
        if (i == entries.size() || entries[gstart].lambda - entries[i].lambda > group_tol) {
            std::stable_partition(
                entries.begin() + static_cast<std::ptrdiff_t>(gstart),
                entries.begin() + static_cast<std::ptrdiff_t>(i),
                [](const EigenEntry& e) { return e.from_h && e.slope <= 0.0; });
            gstart = i;
        }
    }

    GEigenSystem es;
    es.case_id = cls.case_id;
    es.omega0 = om.omega0;
    for (int i = 0; i < 4; ++i) {
        es.eigenvalues(i) = entries[static_cast<std::size_t>(i)].lambda;
    }

    if (es.eigenvalues.minCoeff() < -1e-9) {
        throw NegativeEigenvalue("G-eigenvalue " + std::to_string(es.eigenvalues.minCoeff()) +
                                 " is negative: unphysical input");
    }

    // causal typing; tangency roots are null by construction
    std::array<CausalType, 4> types{};
    for (int i = 0; i < 4; ++i) {
        const EigenEntry& e = entries[static_cast<std::size_t>(i)];
        if (e.null_forced) {
            types[static_cast<std::size_t>(i)] = CausalType::Null;
        } else {
            types[static_cast<std::size_t>(i)] = causal_type(e.vec.normalized());
        }
    }

    const bool tangent = std::any_of(entries.begin(), entries.end(),
                                     [](const EigenEntry& e) { return e.null_forced; });
    if (tangent) {
        es.cls = CanonicalClass::IIc;
        if (!entries[0].null_forced || !entries[1].null_forced) {
            throw SpectralFailure("tangency root of h is not the largest G-eigenvalue");
        }
        const double pair_tol = std::max(cs.tol_abs, 1e-7 * std::max(1.0, cs.scale));
        if (std::abs(es.eigenvalues(2) - es.eigenvalues(3)) > pair_tol) {
            throw SpectralFailure(
                "class IIc requires the two space-like G-eigenvalues to coincide");
        }
        if (types[2] != CausalType::SpaceLike || types[3] != CausalType::SpaceLike) {
            throw SpectralFailure("class IIc triad must contain two space-like vectors");
        }
    } else {
        es.cls = CanonicalClass::Ic;
        if (types[0] != CausalType::TimeLike) {
            throw SpectralFailure(
                "largest G-eigenvalue does not carry a time-like eigenvector; "
                "the input does not parametrize a physical state");
        }
        for (int i = 1; i < 4; ++i) {
            if (types[static_cast<std::size_t>(i)] != CausalType::SpaceLike) {
                throw SpectralFailure("tetrad must contain three space-like vectors");
            }
        }
    }

    // normalize: time-like to X^T G X = +1 with X(0) > 0, space-like to -1,
    // null to X(0) = 1
    for (int i = 0; i < 4; ++i) {
        Eigen::Vector4d x = entries[static_cast<std::size_t>(i)].vec;
        switch (types[static_cast<std::size_t>(i)]) {
            case CausalType::TimeLike: {
                x /= std::sqrt(minkowski_norm(x));
                if (x(0) < 0.0) x = -x;
                break;
            }
            case CausalType::SpaceLike: {
                x /= std::sqrt(-minkowski_norm(x));
                fix_spacelike_sign(x);
                break;
            }
            case CausalType::Null: {
                if (std::abs(x(0)) < 1e-12 * x.norm()) {
                    throw SpectralFailure("null eigenvector with vanishing time component");
                }
                x /= x(0);
                break;
            }
        }
        es.eigenvectors[static_cast<std::size_t>(i)] = x;
        es.causal_types[static_cast<std::size_t>(i)] = types[static_cast<std::size_t>(i)];
        es.from_h[static_cast<std::size_t>(i)] = entries[static_cast<std::size_t>(i)].from_h;
        es.slopes[static_cast<std::size_t>(i)] = entries[static_cast<std::size_t>(i)].slope;
    }

    // residuals of G Omega0 X = lambda X on Euclidean-normalized vectors
    const Eigen::Matrix4d gom = minkowski_metric() * om.omega0;
    const double mat_scale = std::max(1.0, gom.cwiseAbs().maxCoeff());
    for (int i = 0; i < 4; ++i) {
        const Eigen::Vector4d x = es.eigenvectors[static_cast<std::size_t>(i)].normalized();
        const double res = (gom * x - es.eigenvalues(i) * x).cwiseAbs().maxCoeff();
        es.max_residual = std::max(es.max_residual, res);
    }
    if (es.max_residual > 1e-8 * mat_scale) {
        throw SpectralFailure("eigenpair residual " + std::to_string(es.max_residual) +
                              " exceeds tolerance");
    }

    // dense eigensolver cross-check: the pipeline is authoritative for the
    // classification, the oracle guards against isolation misses
    Eigen::EigenSolver<Eigen::Matrix4d> dense(gom);
    Eigen::Vector4d oracle;
    for (int i = 0; i < 4; ++i) {
        const std::complex<double> ev = dense.eigenvalues()(i);
        if (std::abs(ev.imag()) > 1e-6 * mat_scale) {
            throw SpectralFailure("G Omega has complex eigenvalues: unphysical input");
        }
        oracle(i) = ev.real();
    }
    std::sort(oracle.data(), oracle.data() + 4, std::greater<double>());
    Eigen::Vector4d ours = es.eigenvalues;
    std::sort(ours.data(), ours.data() + 4, std::greater<double>());
    es.oracle_mismatch = (oracle - ours).cwiseAbs().maxCoeff();
    if (es.oracle_mismatch > 1e-6 * mat_scale) {
        throw SpectralFailure("root isolation disagrees with the dense eigensolver by " +
                              std::to_string(es.oracle_mismatch));
    }
    return es;
}

}  // namespace lcf
