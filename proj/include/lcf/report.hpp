#pragma once

#include <cstdint>

#include "lcf/io.hpp"

namespace lcf {

struct ReportOptions {
    double dtol = kDefaultDegeneracyTol;
    int surface_samples = 1000;
    std::uint64_t seed = 1;
};

// Full pipeline report for one input: Omega blocks, case label, G-eigensystem,
// canonical forms, ellipsoid geometry and residual diagnostics.
json analysis_report(const Input& in, const ReportOptions& opt = {});

}  // namespace lcf
