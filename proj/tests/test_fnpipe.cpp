#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <numeric>

#include "branchloci/fnpipe.hpp"

using namespace branchloci;
using std::numbers::pi;

namespace {

const double kSqrt2 = std::sqrt(2.0);
const double kSqrt5 = std::sqrt(5.0);

const DataSet kDecagon{10, 0, 0, {{1, 2}, {2, 5}, {1, 10}}};
const DataSet kOctagon{8, 0, 0, {{1, 2}, {3, 8}, {1, 8}}};
const DataSet kPentagonal{5, 0, 0, {{2, 5}, {2, 5}, {1, 5}}};

EmbeddedPolygon decagon() { return embed(realize_type1(kDecagon)); }
EmbeddedPolygon octagon() { return embed(realize_type1(kOctagon)); }

bool has_violation(const ValidationReport& r, const std::string& condition) {
    for (const auto& v : r.violations)
        if (v.condition == condition) return true;
    return false;
}

void expect_relative(double actual, double expected, double tol) {
    EXPECT_LE(std::abs(actual - expected), tol * std::abs(expected)) << actual << " vs " << expected;
}

}  // namespace

TEST(Itinerary, ParseAndLabels) {
    auto it = parse_itinerary("M1M2M7M6");
    ASSERT_EQ(it.size(), 4u);
    EXPECT_EQ(it[0], midpoint_ref(1));
    EXPECT_EQ(it[2].index, 6);
    EXPECT_EQ(it[3].label(), "M6");
    auto v = parse_itinerary("V0V4");
    EXPECT_EQ(v[0], vertex_ref(0));
    EXPECT_EQ(v[1].label(), "V4");
    auto big = parse_itinerary("M10M5");
    EXPECT_EQ(big[0].index, 9);
    EXPECT_THROW(parse_itinerary("M0"), std::invalid_argument);
    EXPECT_THROW(parse_itinerary("X1"), std::invalid_argument);
    EXPECT_THROW(parse_itinerary("MM1"), std::invalid_argument);
    EXPECT_THROW(make_curve(decagon(), "odd", parse_itinerary("M1M2M7")), std::invalid_argument);
    EXPECT_THROW(position(decagon(), midpoint_ref(11)), std::out_of_range);
}

TEST(Orbit, SecondCurveIsImageUnderSquaredRotation) {
    auto e = decagon();
    auto seed = make_curve(e, "g1", parse_itinerary("M1M2M7M6"));
    auto orbit = orbit_of_curve(e, seed, rotation(e.center, 2 * (2 * pi / 10)));
    auto target = make_curve(e, "g2", parse_itinerary("M3M4M9M8"));
    bool found = false;
    for (const auto& c : orbit) {
        if (c.itinerary.size() != target.itinerary.size()) continue;
        bool same = true;
        for (std::size_t j = 0; j < c.itinerary.size(); ++j) same = same && c.itinerary[j] == target.itinerary[j];
        found = found || same;
    }
    EXPECT_TRUE(found);
    EXPECT_EQ(10 % orbit.size(), 0u);
}

TEST(Orbit, IdentityGivesSeedOnly) {
    auto e = decagon();
    auto seed = make_curve(e, "g1", parse_itinerary("M1M2M7M6"));
    auto orbit = orbit_of_curve(e, seed, Isometry::identity());
    ASSERT_EQ(orbit.size(), 1u);
    EXPECT_EQ(orbit[0].itinerary, seed.itinerary);
}

TEST(Orbit, SizeDividesRotationOrder) {
    auto e = decagon();
    auto seed = make_curve(e, "g3", parse_itinerary("M10M5"));
    for (int step = 1; step <= 9; ++step) {
        auto orbit = orbit_of_curve(e, seed, rotation(e.center, step * 2 * pi / 10));
        int order = 10 / std::gcd(step, 10);
        EXPECT_EQ(order % static_cast<int>(orbit.size()), 0) << step;
    }
}

TEST(Pants, BuiltInDecompositionsAreValid) {
    for (const auto& d : {kDecagon, kOctagon}) {
        auto fp = solve_fixed_point(d);
        auto report = verify_pants(fp.polygon, fp.pants);
        EXPECT_TRUE(report.valid) << format_data_set(d);
        EXPECT_EQ(fp.pants.curves.size(), 3u);
    }
}

TEST(Pants, DecagonCurveItineraries) {
    auto fp = solve_fixed_point(kDecagon);
    EXPECT_EQ(fp.pants.curves[0].itinerary, parse_itinerary("M1M2M7M6"));
    EXPECT_EQ(fp.pants.curves[1].itinerary, parse_itinerary("M3M4M9M8"));
    EXPECT_EQ(fp.pants.curves[2].itinerary, parse_itinerary("M10M5"));
}

TEST(Pants, CrossingCurvesAreRejected) {
    auto e = decagon();
    PantsDecomposition pd;
    pd.curves.push_back(make_curve(e, "a", parse_itinerary("M10M5")));
    pd.curves.push_back(make_curve(e, "b", parse_itinerary("M1M6")));
    auto report = verify_pants(e, pd);
    EXPECT_FALSE(report.valid);
    EXPECT_TRUE(has_violation(report, "crossing"));
    EXPECT_TRUE(has_violation(report, "count"));
}

TEST(Pants, SharedBoundaryPointIsNotDisjoint) {
    auto e = decagon();
    PantsDecomposition pd;
    pd.curves.push_back(make_curve(e, "a", parse_itinerary("M1M2M7M6")));
    pd.curves.push_back(make_curve(e, "b", parse_itinerary("M1M2M7M6")));
    pd.curves.push_back(make_curve(e, "c", parse_itinerary("M10M5")));
    EXPECT_TRUE(has_violation(verify_pants(e, pd), "disjoint"));
}

TEST(Pants, BrokenCurveIsNotGeodesic) {
    auto e = decagon();
    auto bent = make_curve(e, "bent", parse_itinerary("M1M3M8M4M9M6"));
    PantsDecomposition pd{{bent}, {}};
    EXPECT_TRUE(has_violation(verify_pants(e, pd), "geodesic"));
    EXPECT_THROW(curve_length(e, bent), GeometryError);
}

TEST(Lengths, DecagonClosedForms) {
    auto e = decagon();
    double g1 = curve_length(e, make_curve(e, "g1", parse_itinerary("M1M2M7M6"))).value();
    double g3 = curve_length(e, make_curve(e, "g3", parse_itinerary("M10M5"))).value();
    expect_relative(g1, 2 * std::acosh((2 + kSqrt5) / 2), 1e-10);
    expect_relative(g3, 2 * std::asinh(std::sqrt((5 + 3 * kSqrt5) / 2)), 1e-10);
    double a = std::acosh(2 + kSqrt5);
    double via_sides = 2 * std::acosh(std::pow(std::cosh(a / 2), 2) - std::pow(std::sinh(a / 2), 2) * std::cos(2 * pi / 5));
    expect_relative(g1, via_sides, 1e-10);
    EXPECT_NEAR(g1, 2.765142618158057, 1e-12);
    EXPECT_NEAR(g3, 3.2338433350237756, 1e-12);
}

TEST(Lengths, OctagonClosedForms) {
    auto fp = solve_fixed_point(kOctagon);
    expect_relative(fp.coords.lengths[0].value(), 2 * std::acosh(1 + kSqrt2), 1e-10);
    expect_relative(fp.coords.lengths[2].value(), 2 * std::asinh(2 * std::sqrt(4 + 3 * kSqrt2)), 1e-10);
    EXPECT_NEAR(fp.coords.lengths[0].value(), 3.057141838962, 1e-11);
    EXPECT_NEAR(fp.coords.lengths[2].value(), 4.89690489535615, 1e-11);
}

TEST(Lengths, InvariantUnderRealizingRotation) {
    for (const auto& d : {kDecagon, kOctagon}) {
        auto fp = solve_fixed_point(d);
        auto rot = polygon_rotation(fp.polygon);
        for (const auto& c : fp.pants.curves) {
            auto images = orbit_of_curve(fp.polygon, c, rot);
            double base = curve_length(fp.polygon, c).value();
            for (const auto& img : images) EXPECT_NEAR(curve_length(fp.polygon, img).value(), base, 1e-10 * base);
        }
    }
}

TEST(Twists, DecagonClosedForms) {
    auto fp = solve_fixed_point(kDecagon);
    expect_relative(fp.coords.twists[0], 2 * std::acosh(0.25 * std::sqrt(25 + 9 * kSqrt5)), 1e-10);
    expect_relative(fp.coords.twists[1], fp.coords.twists[0], 1e-10);
    expect_relative(fp.coords.twists[2], -std::acosh((3 + kSqrt5) / 2), 1e-10);
    EXPECT_NEAR(fp.coords.twists[0], 2.2161692096322847, 1e-12);
    EXPECT_NEAR(fp.coords.twists[2], -1.6169216675118852, 1e-12);
}

TEST(Twists, DecagonFeet) {
    auto fp = solve_fixed_point(kDecagon);
    const auto& e = fp.polygon;
    // feet on the central diameter sit at distance 5^(1/4) - sqrt(sqrt5 - 1) from the center
    auto feet3 = twist_feet(e, fp.pants, 2);
    double p3 = std::pow(5.0, 0.25) - std::sqrt(kSqrt5 - 1);
    EXPECT_NEAR(p3, 0.3835628407183782, 1e-15);
    EXPECT_NEAR(std::abs(feet3.first.z()), p3, 1e-10);
    EXPECT_NEAR(std::abs(feet3.second.z()), p3, 1e-10);
    EXPECT_NEAR(cross(feet3.first.z(), e.midpoints[9].z()), 0.0, 1e-12);
    EXPECT_NEAR(std::abs(feet3.first.z() + feet3.second.z()), 0.0, 1e-12);
    expect_relative(fp.coords.twists[2], -2 * hyperbolic_distance(feet3.first, e.center).value(), 1e-10);

    // feet on the first curve: the twist runs from the foot on M1M2 to M2 ~ M7, then on to the matching foot on M7M6
    auto feet1 = twist_feet(e, fp.pants, 0);
    EXPECT_NEAR(std::abs(feet1.first.z()), std::abs(Complex(0.4175529000105273, -0.4649519871692455)), 1e-12);
    EXPECT_TRUE(geodesic_through(e.midpoints[0], e.midpoints[1]).contains(feet1.first));
    EXPECT_TRUE(geodesic_through(e.midpoints[6], e.midpoints[5]).contains(feet1.second));
    double to_end = hyperbolic_distance(feet1.first, e.midpoints[1]).value();
    expect_relative(hyperbolic_distance(e.midpoints[6], feet1.second).value(), to_end, 1e-10);
    expect_relative(fp.coords.twists[0], 2 * to_end, 1e-10);
}

TEST(Twists, OctagonFeetAreMidpoints) {
    auto fp = solve_fixed_point(kOctagon);
    auto feet = twist_feet(fp.polygon, fp.pants, 0);
    bool at_midpoint = false;
    for (const auto& m : fp.polygon.midpoints) at_midpoint = at_midpoint || std::abs(m.z() - feet.first.z()) < 1e-10;
    EXPECT_TRUE(at_midpoint);
    expect_relative(fp.coords.twists[0], fp.coords.lengths[0].value(), 1e-10);
    expect_relative(fp.coords.twists[1], fp.coords.lengths[0].value(), 1e-10);
    expect_relative(fp.coords.twists[2], -2 * std::acosh(std::sqrt(2 + kSqrt2)), 1e-10);
    EXPECT_NEAR(fp.coords.twists[2], -2.44845244767808, 1e-11);
}

TEST(Twists, ReversedSeamFlipsTheSign) {
    auto fp = solve_fixed_point(kDecagon);
    for (int i = 0; i < 3; ++i) {
        auto pd = fp.pants;
        for (auto& seam : pd.seams)
            if (seam.curve == i) seam.reversed = !seam.reversed;
        EXPECT_EQ(twist_at(fp.polygon, pd, i), -twist_at(fp.polygon, fp.pants, i));
    }
}

TEST(Twists, MissingSeamThrows) {
    auto fp = solve_fixed_point(kDecagon);
    auto pd = fp.pants;
    pd.seams.clear();
    EXPECT_THROW(twist_at(fp.polygon, pd, 0), GeometryError);
    EXPECT_THROW(twist_at(fp.polygon, fp.pants, 3), GeometryError);
}

TEST(FixedPoint, MatchesRecordedClosedForms) {
    for (const auto& d : {kDecagon, kOctagon}) {
        auto fp = solve_fixed_point(d);
        for (int i = 0; i < 3; ++i) {
            expect_relative(fp.coords.lengths[i].value(), fp.closed_forms[i].value, 1e-10);
            expect_relative(fp.coords.twists[i], fp.closed_forms[3 + i].value, 1e-10);
            EXPECT_FALSE(fp.closed_forms[i].expression.empty());
        }
    }
}

TEST(FixedPoint, PentagonalRotationSharesTheFixedPoint) {
    auto a = fn_fixed_point(kDecagon);
    auto b = fn_fixed_point(kPentagonal);
    EXPECT_EQ(a.lengths, b.lengths);
    EXPECT_EQ(a.twists, b.twists);
}

TEST(FixedPoint, UnsupportedFamiliesAreRejected) {
    // genus 3, irreducible Type 1
    DataSet d{7, 0, 0, {{1, 7}, {2, 7}, {4, 7}}};
    ASSERT_TRUE(validate(d).valid);
    ASSERT_EQ(genus(d), 3);
    EXPECT_THROW(fn_fixed_point(d), UnsupportedDataSet);
    EXPECT_THROW(fn_fixed_point(DataSet{4, 0, 0, {{1, 2}, {1, 2}, {1, 4}, {3, 4}}}), UnsupportedDataSet);
}

TEST(Locus, ReferencePoint) {
    auto p = branch_locus_point(pi / 4, 3.0);
    // independent evaluation in extended precision
    long double s = 3.0L, a = std::numbers::pi_v<long double> / 4, ch = std::cosh(s);
    long double g1 = 2 * std::acosh(std::cosh(s / 2) * std::sin(a));
    long double g2 = std::acosh(ch * ch * ch * ch - 2 * ch * ch * ch + 2 * ch);
    long double x = std::atanh(std::cos(a) / std::tanh(s / 2));
    long double y = std::sinh(s - x) * std::tan(a);
    long double t = g1 / 2 - 0.5L * std::log((y + 1) / (y - 1));
    EXPECT_NEAR(p.coords.lengths[0].value(), static_cast<double>(g1), 1e-12);
    EXPECT_NEAR(p.coords.lengths[1].value(), static_cast<double>(g2), 1e-12);
    EXPECT_NEAR(p.coords.twists[0], static_cast<double>(t), 1e-12);
    EXPECT_NEAR(p.coords.lengths[0].value(), 2.1923242647535376, 1e-12);
    EXPECT_NEAR(p.coords.lengths[1].value(), 9.7114392523865297, 1e-12);
    EXPECT_NEAR(p.coords.twists[0], 0.79763900085429975, 1e-12);
}

TEST(Locus, PatternHoldsAcrossValidRegion) {
    for (double alpha = 0.3; alpha < pi / 3; alpha += 0.05)
        for (double s = 2.6; s < 5.0; s += 0.2) {
            if (std::cosh(s) <= std::pow(1 / std::tan(alpha / 2), 2)) continue;
            auto p = branch_locus_point(alpha, s);
            ASSERT_EQ(p.coords.lengths.size(), 3u);
            EXPECT_EQ(p.coords.lengths[2], p.coords.lengths[0]);
            EXPECT_EQ(p.coords.twists[1], 0.0);
            EXPECT_EQ(p.coords.twists[2], -p.coords.twists[0]);
        }
}

TEST(Locus, OutsideRegionIsRejected) {
    EXPECT_THROW(branch_locus_point(pi / 4, 2.0), ConstraintViolation);
    EXPECT_THROW(branch_locus_point(1.2, 3.0), ConstraintViolation);
}

TEST(MinLength, RecoversMinimumAtZero) {
    auto [l, len] = min_length_family(1.0);
    EXPECT_NEAR(l, 0.0, 1e-8);
    EXPECT_NEAR(len, 1.0, 1e-8);
    for (double d : {0.2, 2.5, 7.0}) {
        auto [ld, lend] = min_length_family(d);
        EXPECT_NEAR(ld, 0.0, 1e-8);
        EXPECT_NEAR(lend, d, 1e-8 * d);
    }
    EXPECT_THROW(min_length_family(0.0), std::invalid_argument);
}

TEST(MinLength, FamilyIsEvenAndStrictlyAboveMinimum) {
    for (double d : {0.5, 1.0, 3.0}) {
        EXPECT_EQ(family_length(d, d / 2), family_length(d, -d / 2));
        EXPECT_NEAR(family_length(d, 0.0), d, 1e-12);
        for (int i = 1; i <= 50; ++i) {
            double l = -2.0 + 4.0 * i / 51.0;
            if (std::abs(l) < 1e-12) continue;
            EXPECT_GT(family_length(d, l), d);
        }
    }
}

TEST(Irregular, RegularDecagonReduction) {
    double a = std::acosh(2 + kSqrt5);
    auto [c1, c2] = irregular_lengths({a, a, a, a, a}, 2 * pi / 5, 2 * pi / 5);
    expect_relative(c1.value(), 2 * std::acosh((2 + kSqrt5) / 2), 1e-12);
    expect_relative(c1.value(), fn_fixed_point(kDecagon).lengths[0].value(), 1e-10);
    EXPECT_EQ(c1, c2);
}

TEST(Irregular, MonotoneInAngleAndSymmetric) {
    std::array<double, 5> a{1.0, 1.3, 2.1, 0.7, 1.9};
    double prev = 0;
    for (int i = 1; i < 100; ++i) {
        double alpha = pi * i / 100;
        double c1 = irregular_lengths(a, alpha, 1.0).first.value();
        EXPECT_GT(c1, prev);
        prev = c1;
    }
    EXPECT_LE(prev, a[1] + a[2] + 1e-12);
    std::array<double, 5> swapped{1.0, 2.1, 1.3, 0.7, 1.9};
    EXPECT_NEAR(irregular_lengths(a, 1.1, 1.0).first.value(), irregular_lengths(swapped, 1.1, 1.0).first.value(), 1e-14);
    EXPECT_THROW(irregular_lengths({0.0, 1, 1, 1, 1}, 1.0, 1.0), std::invalid_argument);
    EXPECT_THROW(irregular_lengths(a, pi, 1.0), std::invalid_argument);
}
