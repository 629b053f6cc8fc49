#include <cmath>
#include <random>
#include <set>
#include <vector>

#include <gtest/gtest.h>

#include "delcap/rng.hpp"
#include "delcap/sequence.hpp"
#include "support.hpp"

using namespace delcap;

TEST(Sequence, PackingRoundTripsForEveryWidth) {
    std::mt19937_64 gen(1);
    for (unsigned k : {2u, 3u, 4u, 5u, 16u, 17u, 200u, 256u}) {
        for (std::size_t len : {0u, 1u, 31u, 32u, 63u, 64u, 65u, 200u}) {
            std::vector<unsigned> v(len);
            for (auto& x : v) x = static_cast<unsigned>(gen() % k);
            const Sequence s = support::from_vec(v, k);
            ASSERT_EQ(s.size(), len);
            EXPECT_EQ(support::to_vec(s), v) << "K=" << k << " len=" << len;
            std::vector<Symbol> sym(v.begin(), v.end());
            EXPECT_EQ(s.symbols(), sym);
            EXPECT_EQ(Sequence(sym, k), s);
        }
    }
}

TEST(Sequence, StringRoundTrip) {
    EXPECT_EQ(Sequence::from_string("0110", 2).to_string(), "0110");
    EXPECT_EQ(Sequence::from_string("0129az", 36).to_string(), "0129az");
    EXPECT_THROW(Sequence::from_string("012", 2), std::invalid_argument);
    EXPECT_THROW(Sequence::from_string("0x", 2), std::invalid_argument);
}

TEST(Sequence, IndexIsLexicographicRankMostSignificantFirst) {
    EXPECT_EQ(Sequence::from_index(0b0011, 4).to_string(), "0011");
    EXPECT_EQ(Sequence::from_index(0b1000, 4).to_string(), "1000");
    for (unsigned n : {1u, 5u, 10u}) {
        for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v) {
            const Sequence s = Sequence::from_index(v, n);
            EXPECT_EQ(s.to_index(), v);
            if (v + 1 < (std::uint64_t{1} << n)) {
                EXPECT_LT(s, Sequence::from_index(v + 1, n));
            }
        }
    }
}

TEST(Sequence, AlphabetValidation) {
    EXPECT_THROW(Sequence(1), std::invalid_argument);
    EXPECT_THROW(Sequence(257), std::invalid_argument);
    Sequence s(3);
    EXPECT_THROW(s.push_back(3), std::invalid_argument);
    EXPECT_THROW(s.at(0), std::out_of_range);
}

TEST(Sequence, BinaryWordsMaskTrailingBits) {
    const Sequence a = Sequence::from_binary_words({~std::uint64_t{0}}, 5);
    const Sequence b = Sequence::from_string("11111", 2);
    EXPECT_EQ(a, b);
    EXPECT_THROW(Sequence::from_binary_words({0, 0}, 5), std::invalid_argument);
}

TEST(Sequence, SubsequenceWithoutDropsListedPositions) {
    const Sequence s = Sequence::from_string("012012", 3);
    const std::vector<std::size_t> del{0, 4};
    EXPECT_EQ(s.subsequence_without(del).to_string(), "1202");
    const std::vector<std::size_t> none;
    EXPECT_EQ(s.subsequence_without(none), s);
}

TEST(Sequence, EqualityIgnoresNothingButContent) {
    EXPECT_NE(Sequence::from_string("01", 2), Sequence::from_string("01", 3));
    EXPECT_NE(Sequence::from_string("01", 2), Sequence::from_string("010", 2));
    EXPECT_LT(Sequence::from_string("01", 2), Sequence::from_string("010", 2));
}

TEST(StreamRng, DeterministicPerSeedAndStream) {
    StreamRng a(42, 7), b(42, 7), c(42, 8), d(43, 7);
    std::vector<std::uint64_t> va, vb, vc, vd;
    for (int i = 0; i < 100; ++i) {
        va.push_back(a());
        vb.push_back(b());
        vc.push_back(c());
        vd.push_back(d());
    }
    EXPECT_EQ(va, vb);
    EXPECT_NE(va, vc);
    EXPECT_NE(va, vd);
}

TEST(StreamRng, StreamsDoNotShareValues) {
    std::set<std::uint64_t> seen;
    for (std::uint64_t stream = 0; stream < 200; ++stream) {
        StreamRng r(1, stream);
        for (int i = 0; i < 50; ++i) seen.insert(r());
    }
    EXPECT_EQ(seen.size(), 200u * 50u);
}

TEST(StreamRng, BelowStaysInRangeAndIsRoughlyUniform) {
    StreamRng r(5, 0);
    std::vector<int> hist(7, 0);
    const int draws = 70000;
    for (int i = 0; i < draws; ++i) {
        const auto v = r.below(7);
        ASSERT_LT(v, 7u);
        ++hist[v];
    }
    for (int h : hist) EXPECT_NEAR(h, draws / 7.0, 5 * std::sqrt(draws / 7.0));
}

TEST(StreamRng, Uniform01AndBernoulli) {
    StreamRng r(9, 3);
    int hits = 0;
    const int draws = 100000;
    for (int i = 0; i < draws; ++i) {
        const double u = r.uniform01();
        ASSERT_GE(u, 0.0);
        ASSERT_LT(u, 1.0);
        hits += r.bernoulli(0.3) ? 1 : 0;
    }
    const double sigma = std::sqrt(draws * 0.3 * 0.7);
    EXPECT_NEAR(hits, draws * 0.3, 4 * sigma);
}

TEST(StreamRng, MonobitBalance) {
    StreamRng r(123, 456);
    std::uint64_t ones = 0;
    const int words = 20000;
    for (int i = 0; i < words; ++i) ones += static_cast<std::uint64_t>(std::popcount(r()));
    const double bits = 64.0 * words;
    EXPECT_NEAR(static_cast<double>(ones), bits / 2, 4 * std::sqrt(bits / 4));
}
