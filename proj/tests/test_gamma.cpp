#include <cmath>
#include <numeric>
#include <vector>

#include <gtest/gtest.h>

#include "delcap/core_math.hpp"
#include "delcap/gamma.hpp"

using namespace delcap;

TEST(EstimateGamma, LengthOneIsAFairCoinMatch) {
    const GammaEstimate e = estimate_gamma(SourceSpec::markov(0.9), 1, 100000, 3, 1);
    EXPECT_NEAR(e.mean_lcs, 0.5, 0.01);
    EXPECT_TRUE(e.invariants_hold());
    const GammaEstimate u = estimate_gamma(SourceSpec::uniform(), 1, 100000, 3, 1);
    EXPECT_NEAR(u.mean_lcs, 0.5, 0.01);
}

TEST(EstimateGamma, IndependentOfWorkerCount) {
    for (const auto& src : {SourceSpec::uniform(), SourceSpec::markov(0.95), SourceSpec::uniform(4)}) {
        const GammaEstimate a = estimate_gamma(src, 3000, 40, 11, 1);
        const GammaEstimate b = estimate_gamma(src, 3000, 40, 11, 4);
        const GammaEstimate c = estimate_gamma(src, 3000, 40, 11, 7);
        EXPECT_EQ(a, b);
        EXPECT_EQ(a, c);
    }
}

TEST(EstimateGamma, SeedChangesSamples) {
    const auto a = collect_lcs_samples(SourceSpec::markov(0.9), 500, 20, 1, 1);
    const auto b = collect_lcs_samples(SourceSpec::markov(0.9), 500, 20, 2, 1);
    EXPECT_NE(a, b);
}

TEST(EstimateGamma, PairUsesStreamsTwoIAndTwoIPlusOne) {
    const SourceSpec src = SourceSpec::markov(0.9);
    const auto samples = collect_lcs_samples(src, 400, 5, 77, 2);
    for (std::size_t i = 0; i < 5; ++i) {
        EXPECT_EQ(samples[i], lcs_length_reference(src.generate(400, 77, 2 * i), src.generate(400, 77, 2 * i + 1)));
    }
}

TEST(EstimateGamma, ValidatesParameters) {
    EXPECT_THROW(estimate_gamma(SourceSpec::uniform(), 0, 10, 1), std::invalid_argument);
    EXPECT_THROW(estimate_gamma(SourceSpec::uniform(), 10, 0, 1), std::invalid_argument);
    EXPECT_THROW(SourceSpec::markov(1.0), std::domain_error);
    EXPECT_THROW(SourceSpec::uniform(1), std::invalid_argument);
}

TEST(SummarizeSamples, MatchesDirectComputation) {
    const std::vector<std::uint32_t> s{70, 75, 72, 80, 71, 79, 74};
    const GammaEstimate e = summarize_samples(s, 100, 0.9, 5, 0.95);
    const double mean = std::accumulate(s.begin(), s.end(), 0.0) / s.size();
    double ss = 0;
    for (auto v : s) ss += (v - mean) * (v - mean);
    const double sd = std::sqrt(ss / (s.size() - 1));
    EXPECT_NEAR(e.mean_lcs, mean, 1e-12);
    EXPECT_NEAR(e.stddev, sd, 1e-12);
    EXPECT_EQ(e.min_lcs, 70u);
    EXPECT_EQ(e.max_lcs, 80u);
    EXPECT_NEAR(e.ci_halfwidth, 1.959963984540054 * sd / std::sqrt(7.0), 1e-9);
    EXPECT_DOUBLE_EQ(e.mean_normalized, mean / 100);
    EXPECT_TRUE(e.invariants_hold());
}

TEST(SummarizeSamples, DefaultConfidenceIsNinetyNinePercent) {
    EXPECT_NEAR(normal_quantile_two_sided(kDefaultConfidence), 2.5758293035489, 1e-9);
    EXPECT_THROW(normal_quantile_two_sided(1.0), std::domain_error);
}

TEST(GammaSweep, SingleCellEqualsEstimate) {
    const std::vector<SourceSpec> src{SourceSpec::markov(0.95)};
    const std::vector<std::size_t> n{2000};
    const auto rows = gamma_sweep(src, n, 30, 9, 2);
    ASSERT_EQ(rows.size(), 1u);
    EXPECT_EQ(rows[0], estimate_gamma(src[0], 2000, 30, 9, 1));
}

TEST(GammaSweep, SourceMajorOrder) {
    const std::vector<SourceSpec> src{SourceSpec::uniform(), SourceSpec::markov(0.9)};
    const std::vector<std::size_t> n{100, 200, 300};
    const auto rows = gamma_sweep(src, n, 5, 1, 1);
    ASSERT_EQ(rows.size(), 6u);
    for (std::size_t i = 0; i < 6; ++i) {
        EXPECT_EQ(rows[i].n, n[i % 3]);
        EXPECT_EQ(rows[i].q.has_value(), i >= 3);
    }
    const std::vector<SourceSpec> none;
    EXPECT_THROW(gamma_sweep(none, n, 5, 1), std::invalid_argument);
}

TEST(ImpliedThreshold, KnownValues) {
    GammaEstimate e;
    e.mean_normalized = 0.8269;
    EXPECT_NEAR(implied_threshold(e).p, 0.1731, 1e-12);
    EXPECT_TRUE(implied_threshold(e).empirical);
    e.mean_normalized = 0.75;
    EXPECT_EQ(implied_threshold(e).p, 0.25);
    e.mean_normalized = 1.0;
    EXPECT_EQ(implied_threshold(e).p, 0.0);
    e.mean_normalized = 1.5;
    EXPECT_THROW(implied_threshold(e), std::domain_error);
}

TEST(GammaStatistics, ConcentratedAtTenThousand) {
    const GammaEstimate e = estimate_gamma(SourceSpec::uniform(), 10000, 1000, 1);
    EXPECT_LT(e.stddev / 10000.0, 0.01);
    EXPECT_GE(e.mean_normalized, kGammaLower - 0.02);
    EXPECT_LE(e.mean_normalized, kGammaUpper);
}

TEST(GammaStatistics, NormalizedMeanGrowsWithLength) {
    for (const auto& src : {SourceSpec::uniform(), SourceSpec::markov(0.95)}) {
        const double small = estimate_gamma(src, 2000, 100, 4).mean_normalized;
        const double large = estimate_gamma(src, 20000, 100, 4).mean_normalized;
        EXPECT_LE(small, large + 0.005);
    }
}

TEST(GammaStatistics, UpperTailWithinAzumaBound) {
    const std::size_t n = 10000;
    const auto samples = collect_lcs_samples(SourceSpec::uniform(), n, 200, 8);
    const double mean = std::accumulate(samples.begin(), samples.end(), 0.0) / samples.size();
    const double eps = 0.02;
    std::size_t above = 0;
    for (auto v : samples) above += v >= mean + eps * n ? 1 : 0;
    const double bound = std::exp2(-azuma_tail_exponent(eps) * static_cast<double>(n));
    EXPECT_LE(static_cast<double>(above) / samples.size(), bound);
}
