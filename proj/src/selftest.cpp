#include "branchloci/selftest.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <numbers>
#include <random>

#include "branchloci/dataset.hpp"
#include "branchloci/disc.hpp"
#include "branchloci/fnpipe.hpp"
#include "branchloci/oracle.hpp"
#include "branchloci/polygon.hpp"
#include "branchloci/serialize.hpp"
#include "branchloci/sweep.hpp"

namespace branchloci {

namespace {

constexpr double kPi = std::numbers::pi;
const double r2 = std::sqrt(2.0);
const double r5 = std::sqrt(5.0);

class Checker {
public:
    explicit Checker(const SelftestOptions& options) : options_(options) {}

    double tol(double nominal) const { return options_.injected_tolerance.value_or(nominal); }

    void relative(const std::string& what, double got, double want, double nominal) {
        double err = std::abs(got - want) / std::max(std::abs(want), 1e-300);
        record(err <= tol(nominal), what + ": got " + format_double(got) + ", expected " + format_double(want) +
                                        ", relative error " + format_significant(err, 3));
    }

    void absolute(const std::string& what, double got, double want, double nominal) {
        double err = std::abs(got - want);
        record(err <= tol(nominal), what + ": got " + format_double(got) + ", expected " + format_double(want) +
                                        ", error " + format_significant(err, 3));
    }

    void below(const std::string& what, double value, double nominal) {
        record(value <= tol(nominal), what + ": " + format_significant(value, 3) + " exceeds " +
                                          format_significant(tol(nominal), 3));
    }

    void truth(const std::string& what, bool ok) { record(ok, what); }

    void record(bool ok, const std::string& message) {
        ++checks_;
        if (!ok) failures_.push_back(message);
    }

    bool passed() const { return failures_.empty(); }

    std::string summary() const {
        if (failures_.empty()) return std::to_string(checks_) + " checks passed";
        std::string text = std::to_string(failures_.size()) + " of " + std::to_string(checks_) + " checks failed: ";
        for (std::size_t i = 0; i < failures_.size() && i < 3; ++i) text += (i ? "; " : "") + failures_[i];
        if (failures_.size() > 3) text += "; ...";
        return text;
    }

private:
    const SelftestOptions& options_;
    std::size_t checks_ = 0;
    std::vector<std::string> failures_;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

const std::string kOrder10 = "(10,0;(1,2),(2,5),(1,10))";
const std::string kOrder8 = "(8,0;(1,2),(3,8),(1,8))";
const std::string kOrder5 = "(5,0;(2,5),(2,5),(1,5))";

std::array<double, 6> order10_expected() {
    double len = 2.0 * std::acosh((2.0 + r5) / 2.0);
    double tw = 2.0 * std::acosh(0.25 * std::sqrt(25.0 + 9.0 * r5));
    return {len, len, 2.0 * std::asinh(std::sqrt((5.0 + 3.0 * r5) / 2.0)), tw, tw, -std::acosh((3.0 + r5) / 2.0)};
}

std::array<double, 6> order8_expected() {
    double len = 2.0 * std::acosh(1.0 + r2);
    return {len, len, 2.0 * std::asinh(2.0 * std::sqrt(4.0 + 3.0 * r2)), len, len, -2.0 * std::acosh(std::sqrt(2.0 + r2))};
}

void compare_fixed_point(Checker& check, const std::string& text, const std::array<double, 6>& want, double budget) {
    auto start = Clock::now();
    auto fn = fn_fixed_point(parse_data_set(text));
    double elapsed = seconds_since(start);
    const char* names[] = {"length 1", "length 2", "length 3", "twist 1", "twist 2", "twist 3"};
    for (int i = 0; i < 3; ++i) check.relative(names[i], fn.lengths[i].value(), want[i], 1e-9);
    for (int i = 0; i < 3; ++i) check.relative(names[3 + i], fn.twists[i], want[3 + i], 1e-9);
    check.truth("runtime " + format_significant(elapsed, 3) + " s within budget", elapsed < budget);
}

void criterion_order10(Checker& check) { compare_fixed_point(check, kOrder10, order10_expected(), 1.0); }

void criterion_order8(Checker& check) { compare_fixed_point(check, kOrder8, order8_expected(), 1.0); }

void criterion_dual_forms(Checker& check) {
    check.relative("order-10 twist 3 log form", -std::log((3.0 + r5 + std::sqrt(10.0 + 6.0 * r5)) / 2.0),
                   -std::acosh((3.0 + r5) / 2.0), 1e-12);
    check.relative("order-10 twist 1 log form", std::log((17.0 + 9.0 * r5 + 3.0 * std::sqrt(70.0 + 34.0 * r5)) / 8.0),
                   2.0 * std::acosh(0.25 * std::sqrt(25.0 + 9.0 * r5)), 1e-12);
    check.relative("order-8 length 1 log form", 2.0 * std::log(1.0 + r2 + std::sqrt(2.0 + 2.0 * r2)),
                   2.0 * std::acosh(1.0 + r2), 1e-12);
    check.relative("order-8 length 3 log form", 2.0 * std::log(3.0 + 2.0 * r2 + 2.0 * std::sqrt(4.0 + 3.0 * r2)),
                   2.0 * std::asinh(2.0 * std::sqrt(4.0 + 3.0 * r2)), 1e-12);
    check.relative("order-8 twist 3 log form", -2.0 * std::log(std::sqrt(1.0 + r2) + std::sqrt(2.0 + r2)),
                   -2.0 * std::acosh(std::sqrt(2.0 + r2)), 1e-12);
}

double d(const DiscPoint& a, const DiscPoint& b) { return hyperbolic_distance(a, b).value(); }

void criterion_geometric(Checker& check) {
    const DiscPoint origin(0.0, 0.0);
    {
        auto fp = solve_fixed_point(parse_data_set(kOrder10));
        const auto& M = fp.polygon.midpoints;
        auto want = order10_expected();
        check.relative("order-10 M1M2 + M7M6", d(M[0], M[1]) + d(M[6], M[5]), want[0], 1e-9);
        check.relative("order-10 M3M4 + M9M8", d(M[2], M[3]) + d(M[8], M[7]), want[1], 1e-9);
        check.relative("order-10 M10M5", d(M[9], M[4]), want[2], 1e-9);
        auto perp = common_perpendicular(geodesic_through(M[0], M[1]), geodesic_through(M[9], M[4]));
        check.relative("order-10 -2*CP3", -2.0 * d(origin, perp.foot2), want[5], 1e-9);
        for (int i = 0; i < 3; ++i) {
            check.relative("order-10 pipeline length " + std::to_string(i + 1), fp.coords.lengths[i].value(), want[i], 1e-9);
            check.relative("order-10 pipeline twist " + std::to_string(i + 1), fp.coords.twists[i], want[3 + i], 1e-9);
        }
        auto rot = polygon_rotation(fp.polygon);
        for (int i = 0; i < 3; ++i) {
            auto orbit = orbit_of_curve(fp.polygon, fp.pants.curves[i], rot);
            for (const auto& c : orbit)
                check.relative("order-10 F-invariance of length " + std::to_string(i + 1),
                               curve_length(fp.polygon, c).value(), want[i], 1e-9);
        }
    }
    {
        auto fp = solve_fixed_point(parse_data_set(kOrder8));
        const auto& M = fp.polygon.midpoints;
        const auto& V = fp.polygon.vertices;
        auto want = order8_expected();
        check.relative("order-8 M1M2 + M6M5", d(M[0], M[1]) + d(M[5], M[4]), want[0], 1e-9);
        check.relative("order-8 M3M4 + M8M7", d(M[2], M[3]) + d(M[7], M[6]), want[1], 1e-9);
        check.relative("order-8 V0V4", d(V[0], V[4]), want[2], 1e-9);
        auto perp = common_perpendicular(geodesic_through(M[0], M[1]), geodesic_through(V[0], V[4]));
        check.relative("order-8 -2*OP1", -2.0 * d(origin, perp.foot2), want[5], 1e-9);
        check.relative("order-8 2*M1M2 (feet at midpoints)", 2.0 * d(M[0], M[1]), want[3], 1e-9);
        for (int i = 0; i < 3; ++i) {
            check.relative("order-8 pipeline length " + std::to_string(i + 1), fp.coords.lengths[i].value(), want[i], 1e-9);
            check.relative("order-8 pipeline twist " + std::to_string(i + 1), fp.coords.twists[i], want[3 + i], 1e-9);
        }
    }
}

void criterion_intermediates(Checker& check) {
    auto e = embed(realize_type1(parse_data_set(kOrder8)));
    const auto& M = e.midpoints;
    const double R = std::sqrt(r2 - 1.0);
    check.absolute("R = |M1|", std::abs(M[0].z()), R, 1e-10);
    check.absolute("M1.x", M[0].x(), 0.0, 1e-10);
    check.absolute("M1.y", M[0].y(), -R, 1e-10);
    auto g1 = geodesic_through(M[0], M[1]);
    check.truth("gamma1 is an arc", !g1.is_diameter());
    if (!g1.is_diameter()) {
        const auto& arc = g1.as_arc();
        check.absolute("arc center a", arc.center.real(), std::sqrt(-0.5 + 1.0 / r2), 1e-10);
        check.absolute("arc center b", arc.center.imag(), -std::sqrt(0.5 + 1.0 / r2), 1e-10);
        check.absolute("arc radius", arc.radius, R, 1e-10);
    }
    auto g3 = geodesic_through(e.vertices[0], e.vertices[4]);
    auto perp = common_perpendicular(g1, g3);
    check.absolute("Q1.x = M1.x", perp.foot1.x(), M[0].x(), 1e-10);
    check.absolute("Q1.y = M1.y", perp.foot1.y(), M[0].y(), 1e-10);
    const double p1x = -0.5 * std::sqrt(-6.0 + 5.0 * r2 - 2.0 * std::sqrt(2.0 * (10.0 - 7.0 * r2)));
    const double p1y = -0.5 * std::sqrt(2.0 + 3.0 * r2 - 2.0 * std::sqrt(2.0 * (2.0 + r2)));
    check.absolute("P1.x", perp.foot2.x(), p1x, 1e-10);
    check.absolute("P1.y", perp.foot2.y(), p1y, 1e-10);
    check.absolute("gamma3 slope", g3.is_diameter() ? g3.as_diameter().direction.imag() / g3.as_diameter().direction.real() : 0.0,
                   r2 + 1.0, 1e-10);
}

void criterion_shared(Checker& check) {
    auto a = nlohmann::json(fn_fixed_point(parse_data_set(kOrder5))).dump();
    auto b = nlohmann::json(fn_fixed_point(parse_data_set(kOrder10))).dump();
    check.truth("order-5 routes to the decagon", solve_fixed_point(parse_data_set(kOrder5)).family == "order-10 decagon");
    check.truth("byte-identical FN JSON", a == b);
}

void criterion_locus(Checker& check) {
    auto start = Clock::now();
    auto grid = valid_region_grid(20);
    auto samples = evaluate_locus(grid);
    double worst = 0.0;
    std::size_t valid = 0;
    bool pattern = true;
    for (const auto& q : grid) {
        auto p = branch_locus_point(q.alpha, q.s);
        const auto& c = p.coords;
        pattern = pattern && c.lengths.size() == 3 && c.twists.size() == 3 && c.lengths[0] == c.lengths[2] &&
                  c.twists[1] == 0.0 && c.twists[2] == -c.twists[0];
    }
    for (const auto& s : samples) {
        if (!s.valid) continue;
        ++valid;
        worst = std::max(worst, s.row.gamma2_residual);
    }
    double elapsed = seconds_since(start);
    check.truth("all 400 grid points valid", valid == grid.size());
    check.truth("pattern (g1, g2, g1, t, 0, -t) exact", pattern);
    check.below("max two-route gamma2 residual", worst, 1e-9);
    auto octagon = build_glued_octagon(kPi / 4.0, 3.0);
    check.absolute("3 alpha + 2 beta", 3.0 * octagon.alpha + 2.0 * octagon.beta, kPi, 4e-16 * kPi);

    auto rejects = [](double alpha, double s, ConstraintViolation::Bound bound) {
        try {
            branch_locus_point(alpha, s);
        } catch (const ConstraintViolation& e) {
            return e.bound() == bound;
        }
        return false;
    };
    auto accepts = [](double alpha, double s) {
        try {
            branch_locus_point(alpha, s);
            build_glued_octagon(alpha, s);
            return true;
        } catch (const ConstraintViolation&) {
            return false;
        }
    };
    using Bound = ConstraintViolation::Bound;
    check.truth("alpha = 0 rejected", rejects(0.0, 3.0, Bound::AngleRange));
    check.truth("alpha = pi/3 rejected", rejects(kPi / 3.0, 3.0, Bound::AngleRange));
    check.truth("alpha = 1.2 rejected", rejects(1.2, 3.0, Bound::AngleRange));
    check.truth("alpha just below pi/3 accepted", accepts(kPi / 3.0 - 1e-6, 3.0));
    const double alpha = kPi / 4.0;
    const double bound = std::acosh(std::pow(1.0 / std::tan(alpha / 2.0), 2));
    check.truth("s = 2 rejected at alpha = pi/4", rejects(alpha, 2.0, Bound::SideLength));
    check.truth("s just below the bound rejected", rejects(alpha, bound - 1e-9, Bound::SideLength));
    check.truth("s just above the bound accepted", accepts(alpha, bound + 1e-9));
    check.truth("runtime " + format_significant(elapsed, 3) + " s under 2 s", elapsed < 2.0);
}

struct Expectation {
    std::string text;
    std::int64_t genus;
    std::string cls;
};

void criterion_datasets(Checker& check) {
    auto start = Clock::now();
    const std::vector<Expectation> quoted = {
        {kOrder10, 2, "Type1-irreducible"},
        {kOrder8, 2, "Type1-irreducible"},
        {"(4,0;(1,2)^[2],(1,4),(3,4))", 2, "Type2"},
        {"(4,0;(1,2),(1,4),(1,4))", 1, "Type1-irreducible"},
        {"(4,0;(1,2),(3,4),(3,4))", 1, "Type1-irreducible"},
        {kOrder5, 2, "Type1-irreducible"},
    };
    for (const auto& q : quoted) {
        auto ds = parse_data_set(q.text);
        check.truth(q.text + " valid", validate(ds).valid);
        check.truth(q.text + " genus " + std::to_string(q.genus), genus(ds) == q.genus);
        check.truth(q.text + " class " + q.cls, class_name(classify(ds)) == q.cls);
    }
    auto f = parse_data_set("(4,0;(1,2),(1,4),(1,4))");
    auto finv = parse_data_set("(4,0;(1,2),(3,4),(3,4))");
    check.truth("(F, F^-1) compatible at (3, 3)", check_compatibility(f, 3, finv, 3));
    check.truth("composition equals (4,0;(1,2),(1,2),(1,4),(3,4))",
                compose_compatible(f, 3, finv, 3) == parse_data_set("(4,0;(1,2)^[2],(1,4),(3,4))"));

    std::size_t disagreements = 0;
    for (const auto& c : oracle::enumerate_candidates(8, 3)) {
        bool lib = validate(c).valid;
        auto g = oracle::genus_of(c);
        if (lib != oracle::is_valid(c) || (lib && genus(c) != *g)) ++disagreements;
    }
    check.truth("validate/genus agree with the reference on every enumerated candidate", disagreements == 0);
    auto sets = oracle::enumerate(8, 3);
    auto reference = oracle::check_compositions(sets);
    auto stats = compose_sweep(sets);
    check.truth("enumeration found compatible pairs", reference.compatible_pairs > 0);
    check.truth("genus formula holds on all " + std::to_string(reference.compatible_pairs) + " compatible pairs",
                reference.failures == 0);
    check.truth("library sweep agrees", stats.compatible_pairs == reference.compatible_pairs &&
                                            stats.invalid_compositions == 0 && stats.genus_mismatches == 0);
    for (const auto& s : sets) {
        auto cls = classify(s);
        if (cls.kind != ActionKind::Rotational && cls.kind != ActionKind::Type1 && cls.kind != ActionKind::Type2)
            check.truth("classify is total", false);
    }
    double elapsed = seconds_since(start);
    check.truth("runtime " + format_significant(elapsed, 3) + " s under 30 s", elapsed < 30.0);
}

void criterion_family(Checker& check) {
    for (double dd : {0.5, 1.0, 2.0, 5.0}) {
        auto [l, len] = min_length_family(dd);
        check.absolute("l* at d = " + format_double(dd), l, 0.0, 1e-8);
        check.absolute("minimum at d = " + format_double(dd), len, dd, 1e-8);
    }
    const double a = std::acosh(2.0 + r5);
    auto [c1, c2] = irregular_lengths({a, a, a, a, a}, 2.0 * kPi / 5.0, 2.0 * kPi / 5.0);
    check.absolute("irregular c1 at regular parameters", c1.value(), 2.0 * std::acosh((2.0 + r5) / 2.0), 1e-10);
    check.absolute("irregular c2 at regular parameters", c2.value(), 2.0 * std::acosh((2.0 + r5) / 2.0), 1e-10);
}

void criterion_properties(Checker& check) {
    std::mt19937_64 rng(20240617);
    std::uniform_real_distribution<double> radius(0.0, 0.9), angle(-kPi, kPi);
    auto point = [&] { return DiscPoint(std::polar(radius(rng), angle(rng))); };
    double tri = 0.0, iso = 0.0, contain = 0.0, ortho = 0.0, mid = 0.0, assoc = 0.0;
    for (int i = 0; i < 1000; ++i) {
        auto p = point(), q = point(), r = point();
        tri = std::max(tri, d(p, r) - d(p, q) - d(q, r));
        auto f = rotation(point(), angle(rng)) * Isometry::translate_to_origin(point().z());
        iso = std::max(iso, std::abs(d(f(p), f(q)) - d(p, q)));
        auto g = geodesic_through(p, q);
        contain = std::max({contain, g.residual(p.z()), g.residual(q.z())});
        if (!g.is_diameter()) {
            const auto& a = g.as_arc();
            ortho = std::max(ortho, std::abs(std::norm(a.center) - 1.0 - a.radius * a.radius) /
                                        std::max(1.0, std::norm(a.center)));
        }
        auto m = hyperbolic_midpoint(p, q);
        mid = std::max({mid, std::abs(d(p, m) - d(m, q)), g.residual(m.z())});
        auto h = rotation(point(), angle(rng));
        auto k = Isometry::reflection(g);
        assoc = std::max({assoc, std::abs(((f * h) * k).apply(r.z()) - (f * (h * k)).apply(r.z())),
                          std::abs((f * (h * k)).apply(r.z()) - f.apply(h.apply(k.apply(r.z()))))});
    }
    check.below("triangle inequality slack", tri, 1e-10);
    check.below("isometry distance drift", iso, 1e-11);
    check.below("geodesic containment residual", contain, 1e-10);
    check.below("arc orthogonality residual", ortho, 1e-10);
    check.below("midpoint residual", mid, 1e-10);
    check.below("composition residual", assoc, 1e-12);

    for (const auto& text : {kOrder10, kOrder8}) {
        auto e = embed(realize_type1(parse_data_set(text)));
        check.below(text + " Gauss-Bonnet residual", std::abs(gauss_bonnet_residual(e)), 1e-8);
        auto rot = polygon_rotation(e);
        auto inv = rot.inverse();
        const int k = e.source.k;
        double worst = 0.0;
        for (int m = 0; m < k; ++m) {
            auto lhs = pairing_isometry(e, (m + e.source.rotation_shift) % k);
            auto rhs = rot * pairing_isometry(e, m) * inv;
            for (int s = 0; s < 20; ++s) {
                auto p = point();
                worst = std::max(worst, std::abs(lhs.apply(p.z()) - rhs.apply(p.z())));
            }
        }
        check.below(text + " pairing equivariance", worst, 1e-10);
    }
}

}  // namespace

std::vector<CriterionResult> run_acceptance(const SelftestOptions& options) {
    const std::vector<std::pair<std::string, std::function<void(Checker&)>>> criteria = {
        {"order-10 fixed point", criterion_order10},
        {"order-8 fixed point", criterion_order8},
        {"dual closed forms", criterion_dual_forms},
        {"geometric vs analytic agreement", criterion_geometric},
        {"order-8 intermediate values", criterion_intermediates},
        {"shared fixed point of order 5 and order 10", criterion_shared},
        {"compatible-pair branch locus", criterion_locus},
        {"data-set suite and composition genus", criterion_datasets},
        {"one-parameter family minimum", criterion_family},
        {"property suites", criterion_properties},
    };
    std::vector<CriterionResult> results;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Checker check(options);
        auto start = Clock::now();
        CriterionResult r;
        r.id = static_cast<int>(i + 1);
        r.title = criteria[i].first;
        try {
            criteria[i].second(check);
            r.passed = check.passed();
            r.detail = check.summary();
        } catch (const std::exception& e) {
            r.passed = false;
            r.detail = std::string("exception: ") + e.what();
        }
        r.seconds = seconds_since(start);
        results.push_back(std::move(r));
    }
    return results;
}

}  // namespace branchloci
