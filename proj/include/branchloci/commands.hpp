#pragma once

#include <string>

#include "branchloci/render.hpp"
#include "branchloci/selftest.hpp"

namespace branchloci {

namespace exit_status {
constexpr int success = 0;
constexpr int invalid_input = 1;
constexpr int constraint_violation = 2;
constexpr int internal_failure = 3;
}  // namespace exit_status

struct CommandResult {
    int exit_code = exit_status::success;
    std::string out;
    std::string err;
};

struct OutputOptions {
    bool pretty = false;
};

struct LocusOptions {
    double alpha0 = 0.3;
    double alpha1 = 1.0;
    double s0 = 2.6;
    double s1 = 4.0;
    int steps = 10;
};

// "a:b" or a single value "a" (giving a:a)
std::pair<double, double> parse_range(const std::string& text);

CommandResult cmd_validate(const std::string& dataset_text, const OutputOptions& opts = {});
CommandResult cmd_classify(const std::string& dataset_text, const OutputOptions& opts = {});
CommandResult cmd_fn(const std::string& dataset_text, const OutputOptions& opts = {});
CommandResult cmd_locus(const LocusOptions& locus);
CommandResult cmd_render(const RenderSpec& spec, const std::string& dataset_text, const LocusOptions& locus = {});
CommandResult cmd_selftest(const SelftestOptions& options = {}, const OutputOptions& opts = {});

// Moves `result.out` into the file at `path` (no-op for an empty path); I/O failure gives exit 1.
CommandResult write_output(CommandResult result, const std::string& path);

}  // namespace branchloci
