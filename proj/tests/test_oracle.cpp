#include <gtest/gtest.h>

#include "geoprod/oracle.hpp"
#include "geoprod/parser.hpp"
#include "support.hpp"

using namespace geoprod;

namespace {

OracleConfig config(std::int64_t trials, std::uint64_t seed = 7) {
    OracleConfig cfg;
    cfg.trials = trials;
    cfg.seed = seed;
    return cfg;
}

} // namespace

TEST(NumericCheck, PiIdentityPasses) {
    const Identity id = parse_identity("a3^(6pi) * a6^6 = a2^(5pi+2) * a8^(pi+4)");
    const OracleReport report = numeric_check(id, config(1000));
    EXPECT_EQ(report.verdict, oracle_verdict::pass);
    EXPECT_EQ(report.pass_count, 1000);
    EXPECT_EQ(report.skipped, 0);
    EXPECT_LE(report.max_rel_error, 1e-9);
}

TEST(NumericCheck, RefutedIdentityFailsEverywhere) {
    // the sides differ by a factor r
    const OracleReport report = numeric_check(parse_identity("a3*a4 = a5*a1"), config(500));
    EXPECT_EQ(report.verdict, oracle_verdict::fail);
    EXPECT_EQ(report.pass_count, 0);
    EXPECT_GT(report.max_rel_error, 0.09);
}

TEST(NumericCheck, RatioIsExactlyTwoAtRTwo) {
    const Identity id = parse_identity("a3*a4 = a5*a1");
    EXPECT_NEAR(static_cast<double>(evaluate_termwise(id.lhs, 1.0L, 2.0L) / evaluate_termwise(id.rhs, 1.0L, 2.0L)),
                2.0, 1e-15);
}

TEST(NumericCheck, EmptyProducts) {
    const OracleReport report = numeric_check(parse_identity("1 = 1"), config(50));
    EXPECT_EQ(report.verdict, oracle_verdict::pass);
    EXPECT_EQ(report.max_rel_error, 0.0);
}

TEST(NumericCheck, OverflowIsUnstable) {
    const OracleReport report = numeric_check(parse_identity("a50^100000 = a50^100000"), config(100));
    EXPECT_EQ(report.verdict, oracle_verdict::unstable);
    EXPECT_EQ(report.skipped, 100);
}

TEST(NumericCheck, SameSeedSameReport) {
    proptest::Gen gen(51);
    for (int k = 0; k < 50; ++k) {
        const Identity id{gen.product(), gen.product()};
        EXPECT_EQ(numeric_check(id, config(100, 99)), numeric_check(id, config(100, 99)));
    }
}

TEST(NumericCheck, RejectsBadConfig) {
    OracleConfig cfg;
    cfg.r_range = {0.5, 1.5};
    EXPECT_THROW(numeric_check(parse_identity("a1 = a1"), cfg), invalid_argument);
    cfg = OracleConfig{};
    cfg.a1_range = {-1.0, 1.0};
    EXPECT_THROW(numeric_check(parse_identity("a1 = a1"), cfg), invalid_argument);
    cfg = OracleConfig{};
    cfg.trials = 0;
    EXPECT_THROW(numeric_check(parse_identity("a1 = a1"), cfg), invalid_argument);
}

TEST(NumericCheck, AgreesWithSymbolicVerdict) {
    proptest::Gen gen(52);
    for (int k = 0; k < 300; ++k) {
        const StringProduct p = gen.product();
        const Identity same{p, gen.equivalent_partner(p)};
        ASSERT_TRUE(verify_identity(same).verified());
        EXPECT_EQ(numeric_check(same, config(200, k)).verdict, oracle_verdict::pass);

        const Identity shifted{p, gen.shifted_partner(p)};
        const Verdict v = verify_identity(shifted);
        if (std::fabs((v.lhs.weighted_sum - v.rhs.weighted_sum).to_real()) >= 1e-3L) {
            EXPECT_EQ(numeric_check(shifted, config(200, k)).pass_count, 0);
        }
    }
}

TEST(BruteForceFamily, Examples) {
    EXPECT_EQ(brute_force_family(2, 7, 6, false), (std::vector<IndexMultiset>{{1, 6}, {2, 5}, {3, 4}}));
    EXPECT_EQ(brute_force_family(3, 12, 8, false).size(), 6u);
    EXPECT_EQ(brute_force_family(3, 12, 8, true).size(), 10u);
    EXPECT_TRUE(brute_force_family(2, 1, 6, false).empty());
}

TEST(BruteForceFamily, RefusesLargeInputs) {
    EXPECT_THROW(brute_force_family(6, 10, 10, false), invalid_argument);
    EXPECT_THROW(brute_force_family(2, 10, 16, false), invalid_argument);
    EXPECT_THROW(brute_force_family(0, 10, 10, true), invalid_argument);
}

TEST(DegenerateProbe, RatioOneHidesRefutation) {
    const DegenerateReport masked = degenerate_probe(parse_identity("a3*a4 = a5*a1"), 2.0L);
    EXPECT_EQ(masked.lhs_value, 4.0L);
    EXPECT_EQ(masked.rhs_value, 4.0L);
    EXPECT_TRUE(masked.masks_refutation());

    const DegenerateReport genuine = degenerate_probe(parse_identity("a4*a3 = a6*a1"));
    EXPECT_TRUE(genuine.numerically_equal);
    EXPECT_TRUE(genuine.equivalent);
    EXPECT_FALSE(genuine.masks_refutation());

    const DegenerateReport single = degenerate_probe(parse_identity("a5 = a2"), 1.0L);
    EXPECT_EQ(single.lhs_value, 1.0L);
    EXPECT_EQ(single.rhs_value, 1.0L);
    EXPECT_TRUE(single.masks_refutation());

    EXPECT_THROW(degenerate_probe(parse_identity("a5 = a2*a1")), invalid_argument);
}
