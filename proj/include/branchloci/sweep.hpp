#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "branchloci/dataset.hpp"

namespace branchloci {

struct LocusQuery {
    double alpha = 0.0;
    double s = 0.0;
};

struct LocusRow {
    double alpha = 0.0;
    double s = 0.0;
    double gamma1 = 0.0;
    double gamma2 = 0.0;
    double t = 0.0;
    double gamma2_residual = 0.0;
};

struct LocusSample {
    bool valid = false;  // false when the query violates the existence constraints
    LocusRow row;
};

// steps x steps grid over [alpha0, alpha1] x [s0, s1]; steps == 1 gives the lower corner.
std::vector<LocusQuery> rectangular_grid(double alpha0, double alpha1, double s0, double s1, int steps);
// Grid whose points all satisfy the existence constraints: alpha strictly inside (0, pi/3),
// s from just above the bound cosh(s) = cot^2(alpha/2) to `span` beyond it.
std::vector<LocusQuery> valid_region_grid(int steps, double margin = 0.05, double span = 2.5);

std::vector<LocusSample> evaluate_locus_serial(std::span<const LocusQuery> queries);
std::vector<LocusSample> evaluate_locus(std::span<const LocusQuery> queries);

struct CompositionStats {
    std::size_t compatible_pairs = 0;
    std::size_t invalid_compositions = 0;
    std::size_t genus_mismatches = 0;
    friend bool operator==(const CompositionStats&, const CompositionStats&) = default;
};

// Compose every compatible (d1, r, d2, s) over the list and check validity and the genus formula.
CompositionStats compose_sweep_serial(const std::vector<DataSet>& sets);
CompositionStats compose_sweep(const std::vector<DataSet>& sets);

}  // namespace branchloci
