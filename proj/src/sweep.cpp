#include "branchloci/sweep.hpp"

#include <cmath>
#include <numbers>

#include "branchloci/fnpipe.hpp"
#include "branchloci/polygon.hpp"

namespace branchloci {

namespace {

LocusSample evaluate_one(const LocusQuery& q) {
    LocusSample out;
    try {
        check_octagon_constraints(q.alpha, q.s);
    } catch (const ConstraintViolation&) {
        return out;
    }
    auto p = branch_locus_point(q.alpha, q.s);
    out.valid = true;
    out.row = {q.alpha, q.s, p.coords.lengths[0].value(), p.coords.lengths[1].value(), p.coords.twists[0],
               gamma2_route_residual(q.alpha, q.s)};
    return out;
}

CompositionStats compose_row(const std::vector<DataSet>& sets, std::size_t i) {
    CompositionStats stats;
    const auto& d1 = sets[i];
    const auto g1 = genus(d1);
    for (const auto& d2 : sets) {
        if (d2.n != d1.n) continue;
        const auto g2 = genus(d2);
        for (std::size_t r = 1; r <= d1.pairs.size(); ++r) {
            for (std::size_t s = 1; s <= d2.pairs.size(); ++s) {
                if (!check_compatibility(d1, r, d2, s)) continue;
                ++stats.compatible_pairs;
                auto composed = compose_compatible(d1, r, d2, s);
                if (!validate(composed).valid) {
                    ++stats.invalid_compositions;
                    continue;
                }
                if (genus(composed) != g1 + g2 + d1.n / d1.pairs[r - 1].n_i - 1) ++stats.genus_mismatches;
            }
        }
    }
    return stats;
}

}  // namespace

std::vector<LocusQuery> rectangular_grid(double alpha0, double alpha1, double s0, double s1, int steps) {
    std::vector<LocusQuery> out;
    if (steps < 1) return out;
    auto at = [steps](double lo, double hi, int i) { return steps == 1 ? lo : lo + (hi - lo) * i / (steps - 1); };
    for (int i = 0; i < steps; ++i)
        for (int j = 0; j < steps; ++j) out.push_back({at(alpha0, alpha1, i), at(s0, s1, j)});
    return out;
}

std::vector<LocusQuery> valid_region_grid(int steps, double margin, double span) {
    std::vector<LocusQuery> out;
    const double top = std::numbers::pi / 3.0;
    for (int i = 0; i < steps; ++i) {
        double alpha = top * (i + 1) / (steps + 1);
        double cot_half = 1.0 / std::tan(0.5 * alpha);
        double s_min = std::acosh(cot_half * cot_half);
        for (int j = 0; j < steps; ++j)
            out.push_back({alpha, s_min + margin + (steps == 1 ? 0.0 : span * j / (steps - 1))});
    }
    return out;
}

std::vector<LocusSample> evaluate_locus_serial(std::span<const LocusQuery> queries) {
    std::vector<LocusSample> out(queries.size());
    for (std::size_t i = 0; i < queries.size(); ++i) out[i] = evaluate_one(queries[i]);
    return out;
}

std::vector<LocusSample> evaluate_locus(std::span<const LocusQuery> queries) {
    std::vector<LocusSample> out(queries.size());
    const auto count = static_cast<std::ptrdiff_t>(queries.size());
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < count; ++i) out[i] = evaluate_one(queries[i]);
    return out;
}

CompositionStats compose_sweep_serial(const std::vector<DataSet>& sets) {
    CompositionStats total;
    for (std::size_t i = 0; i < sets.size(); ++i) {
        auto row = compose_row(sets, i);
        total.compatible_pairs += row.compatible_pairs;
        total.invalid_compositions += row.invalid_compositions;
        total.genus_mismatches += row.genus_mismatches;
    }
    return total;
}

CompositionStats compose_sweep(const std::vector<DataSet>& sets) {
    std::size_t pairs = 0, invalid = 0, mismatched = 0;
    const auto count = static_cast<std::ptrdiff_t>(sets.size());
#pragma omp parallel for schedule(dynamic) reduction(+ : pairs, invalid, mismatched)
    for (std::ptrdiff_t i = 0; i < count; ++i) {
        auto row = compose_row(sets, static_cast<std::size_t>(i));
        pairs += row.compatible_pairs;
        invalid += row.invalid_compositions;
        mismatched += row.genus_mismatches;
    }
    return {pairs, invalid, mismatched};
}

}  // namespace branchloci
