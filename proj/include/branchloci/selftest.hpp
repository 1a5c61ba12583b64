#pragma once

#include <optional>
#include <string>
#include <vector>

namespace branchloci {

struct CriterionResult {
    int id = 0;
    std::string title;
    bool passed = false;
    std::string detail;
    double seconds = 0.0;
};

struct SelftestOptions {
    // Replaces every comparison tolerance; used to check that the harness can fail.
    std::optional<double> injected_tolerance;
};

std::vector<CriterionResult> run_acceptance(const SelftestOptions& options = {});

}  // namespace branchloci
