#include <gtest/gtest.h>

#include <random>

#include "branchloci/dataset.hpp"
#include "branchloci/oracle.hpp"

using namespace branchloci;

namespace {

bool has_violation(const ValidationReport& r, const std::string& condition) {
    for (const auto& v : r.violations)
        if (v.condition == condition) return true;
    return false;
}

}  // namespace

TEST(Parse, DecagonDataSet) {
    auto d = parse_data_set("(10,0;(1,2),(2,5),(1,10))");
    EXPECT_EQ(d, (DataSet{10, 0, 0, {{1, 2}, {2, 5}, {1, 10}}}));
}

TEST(Parse, MultiplicityIsExpanded) {
    auto d = parse_data_set("(4,0;(1,2)^[2],(1,4),(3,4))");
    EXPECT_EQ(d.pairs, (std::vector<ConePair>{{1, 2}, {1, 2}, {1, 4}, {3, 4}}));
    EXPECT_EQ(parse_data_set("(4, 0; (1,2)^{[2]}, (1,4), (3,4))"), d);
}

TEST(Parse, FreeRotationForm) {
    EXPECT_EQ(parse_data_set("(2,1,1;)"), (DataSet{2, 1, 1, {}}));
    EXPECT_EQ(parse_data_set("  ( 6 , 1 , 1 ; )  "), (DataSet{6, 1, 1, {}}));
}

TEST(Parse, SyntaxErrorsCarryPosition) {
    try {
        parse_data_set("(");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.position(), 1u);
    }
    try {
        parse_data_set("(10,0;(1,2) (2,5))");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.position(), 12u);
    }
    EXPECT_THROW(parse_data_set("(10,0;(1,2)^[0])"), ParseError);
    EXPECT_THROW(parse_data_set("(10,0;(1,2)) x"), ParseError);
    EXPECT_THROW(parse_data_set("10,0;(1,2)"), ParseError);
}

TEST(Parse, DoesNotValidate) {
    auto d = parse_data_set("(10,0;(7,3))");
    EXPECT_FALSE(validate(d).valid);
}

TEST(Parse, FormatRoundTrip) {
    for (const char* text : {"(10,0;(1,2),(2,5),(1,10))", "(2,1,1;)", "(4,0;(1,2),(1,2),(1,4),(3,4))"})
        EXPECT_EQ(parse_data_set(format_data_set(parse_data_set(text))), parse_data_set(text));
}

TEST(Validate, QuotedDataSetsAreValid) {
    for (const char* text : {"(10,0;(1,2),(2,5),(1,10))", "(8,0;(1,2),(3,8),(1,8))", "(4,0;(1,2)^[2],(1,4),(3,4))",
                             "(4,0;(1,2),(1,4),(1,4))", "(4,0;(1,2),(3,4),(3,4))", "(5,0;(2,5),(2,5),(1,5))"}) {
        auto r = validate(parse_data_set(text));
        EXPECT_TRUE(r.valid) << text;
        EXPECT_TRUE(r.violations.empty()) << text;
    }
}

TEST(Validate, ConditionFiveFailure) {
    auto r = validate(parse_data_set("(10,0;(1,2),(1,5),(1,10))"));
    EXPECT_FALSE(r.valid);
    ASSERT_EQ(r.violations.size(), 1u);
    EXPECT_EQ(r.violations[0].condition, "v");
}

TEST(Validate, EachConditionReportedSeparately) {
    EXPECT_TRUE(has_violation(validate(DataSet{6, 1, 2, {}}), "i"));          // gcd(2,6) = 2
    EXPECT_TRUE(has_violation(validate(DataSet{6, 1, 1, {{1, 2}}}), "i"));    // r > 0 with pairs
    EXPECT_TRUE(has_violation(validate(DataSet{6, 1, 0, {}}), "i"));          // no pairs, r = 0
    EXPECT_TRUE(has_violation(validate(DataSet{6, 0, 0, {{1, 4}}}), "ii"));   // 4 does not divide 6
    EXPECT_TRUE(has_violation(validate(DataSet{6, 0, 0, {{2, 6}}}), "iii"));  // gcd(2,6) != 1
    EXPECT_TRUE(has_violation(validate(DataSet{6, 0, 0, {{0, 2}}}), "iii"));
    EXPECT_TRUE(has_violation(validate(DataSet{1, 0, 0, {}}), "n"));
    EXPECT_TRUE(has_violation(validate(DataSet{4, -1, 1, {}}), "g0"));
    EXPECT_TRUE(has_violation(validate(DataSet{4, 1, 5, {}}), "r"));
    // deleting (1,3) drops the lcm from 6 to 2
    EXPECT_TRUE(has_violation(validate(DataSet{6, 1, 0, {{1, 2}, {1, 3}, {1, 2}}}), "iv"));
    // g0 = 0 but lcm(2, 2) = 2 != 4
    EXPECT_TRUE(has_violation(validate(DataSet{4, 0, 0, {{1, 2}, {1, 2}}}), "iv"));
}

TEST(Validate, ConditionFourEdgeCasesForShortLists) {
    // l = 0 with g0 = 0: lcm of the empty list is 1, which is not n
    EXPECT_TRUE(has_violation(validate(DataSet{3, 0, 1, {}}), "iv"));
    // l = 0 with g0 > 0: the deletion clause is vacuous
    EXPECT_FALSE(has_violation(validate(DataSet{3, 1, 1, {}}), "iv"));
    // l = 1: deletion clause vacuous; g0 = 0 needs n_1 = n
    EXPECT_FALSE(has_violation(validate(DataSet{3, 0, 0, {{1, 3}}}), "iv"));
    EXPECT_TRUE(has_violation(validate(DataSet{6, 0, 0, {{1, 3}}}), "iv"));
    EXPECT_FALSE(has_violation(validate(DataSet{6, 1, 0, {{1, 3}}}), "iv"));
}

TEST(Validate, RiemannHurwitzIntegrality) {
    // (3,0;(1,3),(1,3)) passes (v)? 1+1 = 2 != 0 mod 3; use (2,0;(1,2)^3): genus 1/2
    auto r = validate(DataSet{2, 0, 0, {{1, 2}, {1, 2}, {1, 2}}});
    EXPECT_TRUE(has_violation(r, "rh"));
    EXPECT_TRUE(has_violation(r, "v"));
}

TEST(Genus, QuotedValues) {
    EXPECT_EQ(genus(parse_data_set("(10,0;(1,2),(2,5),(1,10))")), 2);
    EXPECT_EQ(genus(parse_data_set("(4,0;(1,2),(1,4),(1,4))")), 1);
    EXPECT_EQ(genus(parse_data_set("(8,0;(1,2),(3,8),(1,8))")), 2);
    EXPECT_EQ(genus(parse_data_set("(2,1,1;)")), 1);
}

TEST(Genus, InvalidDataSetThrowsWithReport) {
    try {
        genus(parse_data_set("(10,0;(1,2),(1,5),(1,10))"));
        FAIL();
    } catch (const InvalidDataSet& e) {
        EXPECT_FALSE(e.report().valid);
    }
}

TEST(Genus, RiemannHurwitzExactOverEnumeration) {
    for (const auto& d : oracle::enumerate(8, 3)) {
        auto g = genus(d);
        // (2 - 2g)/n == 2 - 2g0 + sum(1/n_i - 1) in exact rationals
        Rational lhs = Rational::make(2 - 2 * g, d.n);
        Rational rhs = Rational::make(2 - 2 * d.g0, 1);
        for (const auto& p : d.pairs) rhs = rhs + Rational::make(1, p.n_i) - Rational::make(1, 1);
        EXPECT_EQ(lhs, rhs) << format_data_set(d);
    }
}

TEST(Classify, QuotedClasses) {
    auto c = classify(parse_data_set("(10,0;(1,2),(2,5),(1,10))"));
    EXPECT_EQ(c.kind, ActionKind::Type1);
    EXPECT_TRUE(c.irreducible);
    EXPECT_EQ(classify(parse_data_set("(4,0;(1,2),(1,2),(1,4),(3,4))")).kind, ActionKind::Type2);
    EXPECT_FALSE(classify(parse_data_set("(4,0;(1,2),(1,2),(1,4),(3,4))")).irreducible);
    EXPECT_EQ(classify(parse_data_set("(6,1,1;)")).kind, ActionKind::Rotational);
}

TEST(Classify, RotationalCouplesMatchedAsMultiset) {
    // couples listed out of order
    EXPECT_EQ(classify(DataSet{5, 0, 0, {{2, 5}, {2, 5}, {3, 5}, {3, 5}}}).kind, ActionKind::Rotational);
    EXPECT_EQ(classify(DataSet{5, 1, 0, {{1, 5}, {4, 5}}}).kind, ActionKind::Rotational);
    // involution with several fixed-point couples (no "k = 1" restriction)
    EXPECT_EQ(classify(DataSet{2, 0, 0, {{1, 2}, {1, 2}, {1, 2}, {1, 2}, {1, 2}, {1, 2}}}).kind, ActionKind::Rotational);
    // mixed residues do not form couples
    EXPECT_NE(classify(DataSet{5, 0, 0, {{1, 5}, {4, 5}, {2, 5}, {3, 5}}}).kind, ActionKind::Rotational);
}

TEST(Classify, FullOrderPairAnywhere) {
    EXPECT_EQ(classify(DataSet{10, 0, 0, {{1, 10}, {1, 2}, {2, 5}}}).kind, ActionKind::Type1);
}

TEST(Classify, IrreducibleWithoutFullOrderConePoint) {
    // sphere with three cone points but no cone point of order n: irreducible, yet not Type 1
    DataSet d{30, 0, 0, {{1, 6}, {1, 10}, {11, 15}}};
    ASSERT_TRUE(validate(d).valid);
    EXPECT_EQ(genus(d), 11);
    auto c = classify(d);
    EXPECT_TRUE(c.irreducible);
    EXPECT_EQ(c.kind, ActionKind::Type2);
}

TEST(Classify, IrreducibleTypeOneOverEnumeration) {
    for (const auto& d : oracle::enumerate(8, 3)) {
        auto c = classify(d);
        EXPECT_EQ(c.irreducible, d.g0 == 0 && d.pairs.size() == 3);
        if (c.irreducible) EXPECT_EQ(c.kind, ActionKind::Type1) << format_data_set(d);
    }
}

TEST(Compatibility, Examples) {
    auto f = parse_data_set("(4,0;(1,2),(1,4),(1,4))");
    auto finv = parse_data_set("(4,0;(1,2),(3,4),(3,4))");
    EXPECT_TRUE(check_compatibility(f, 3, finv, 3));
    EXPECT_FALSE(check_compatibility(f, 1, finv, 2));
    auto dec = parse_data_set("(10,0;(1,2),(2,5),(1,10))");
    EXPECT_FALSE(check_compatibility(dec, 2, dec, 2));
    EXPECT_THROW(check_compatibility(f, 4, finv, 1), std::out_of_range);
    EXPECT_THROW(check_compatibility(f, 0, finv, 1), std::out_of_range);
}

TEST(Compose, ExampleOfDegreeFour) {
    auto f = parse_data_set("(4,0;(1,2),(1,4),(1,4))");
    auto finv = parse_data_set("(4,0;(1,2),(3,4),(3,4))");
    auto g = compose_compatible(f, 3, finv, 3);
    EXPECT_EQ(g, parse_data_set("(4,0;(1,2),(1,2),(1,4),(3,4))"));
    EXPECT_TRUE(validate(g).valid);
    EXPECT_EQ(genus(g), 2);
    EXPECT_EQ(genus(g), genus(f) + genus(finv) + 4 / 4 - 1);
    EXPECT_THROW(compose_compatible(f, 1, finv, 2), std::invalid_argument);
}

TEST(Compose, RandomCompatiblePairsUpToDegreeTwelve) {
    auto sets = oracle::enumerate(12, 4, 1, 6);
    struct Candidate {
        std::size_t a, r, b, s;
    };
    std::vector<Candidate> all;
    for (std::size_t a = 0; a < sets.size(); ++a)
        for (std::size_t b = 0; b < sets.size(); ++b)
            if (sets[a].n == sets[b].n)
                for (std::size_t r = 1; r <= sets[a].pairs.size(); ++r)
                    for (std::size_t s = 1; s <= sets[b].pairs.size(); ++s)
                        if (check_compatibility(sets[a], r, sets[b], s)) all.push_back({a, r, b, s});
    ASSERT_GE(all.size(), 20u);
    std::mt19937_64 rng(7);
    std::shuffle(all.begin(), all.end(), rng);
    for (std::size_t i = 0; i < 20; ++i) {
        const auto& c = all[i];
        auto composed = compose_compatible(sets[c.a], c.r, sets[c.b], c.s);
        ASSERT_TRUE(validate(composed).valid) << format_data_set(composed);
        auto k = sets[c.a].pairs[c.r - 1].n_i;
        EXPECT_EQ(genus(composed), genus(sets[c.a]) + genus(sets[c.b]) + sets[c.a].n / k - 1);
    }
}

TEST(Enumeration, SmallInstanceCountsAreFrozen) {
    // counts from an independent brute-force script over the same candidate space
    auto sets = oracle::enumerate(8, 3);
    EXPECT_EQ(sets.size(), 81u);
    auto check = oracle::check_compositions(sets);
    EXPECT_EQ(check.compatible_pairs, 1918u);
    EXPECT_EQ(check.failures, 0u);
}

TEST(Enumeration, ValidateAgreesWithReference) {
    for (const auto& d : oracle::enumerate_candidates(8, 3)) {
        EXPECT_EQ(validate(d).valid, oracle::is_valid(d)) << format_data_set(d);
    }
}

TEST(Enumeration, CompositionNeverInvalid) {
    auto sets = oracle::enumerate(8, 3);
    for (const auto& d1 : sets)
        for (const auto& d2 : sets)
            if (d1.n == d2.n)
                for (std::size_t r = 1; r <= d1.pairs.size(); ++r)
                    for (std::size_t s = 1; s <= d2.pairs.size(); ++s)
                        if (check_compatibility(d1, r, d2, s))
                            EXPECT_TRUE(validate(compose_compatible(d1, r, d2, s)).valid);
}

TEST(Classify, Total) {
    for (const auto& d : oracle::enumerate(8, 3)) {
        auto k = classify(d).kind;
        EXPECT_TRUE(k == ActionKind::Rotational || k == ActionKind::Type1 || k == ActionKind::Type2);
    }
}
