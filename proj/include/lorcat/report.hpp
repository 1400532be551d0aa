#pragma once

// Runs the checks a scene asks for and renders the resulting report.

#include <cstdint>
#include <string>
#include <vector>

#include "lorcat/scene.hpp"

namespace lorcat {

struct CheckResult {
    std::string name;
    bool pass = false;
    double residual = 0.0;
    std::string details;
};

struct Report {
    std::vector<CheckResult> checks;  // sorted by name
    bool pass = true;
};

struct CheckOptions {
    std::uint64_t seed = 0;
    std::size_t samples = 1000;
};

/// Check families understood in a scene's "checks" list.
inline const std::vector<std::string> kCheckFamilies = {"axioms", "limits", "no_privileged_frame", "functor",
                                                        "adjunction"};

/// Throws InvariantError for unknown check names.
Report run_checks(const Scene& scene, const CheckOptions& options);

std::string report_json(const Report& report, const CheckOptions& options);
std::string report_text(const Report& report);

}  // namespace lorcat
