#include <cmath>
#include <numeric>
#include <sstream>
#include <vector>

#include <gtest/gtest.h>

#include "delcap/codebook.hpp"
#include "oracles.hpp"

using namespace delcap;

namespace {

Codebook book(unsigned n, unsigned d, std::initializer_list<const char*> words) {
    std::vector<Sequence> w;
    for (const char* s : words) w.push_back(Sequence::from_string(s));
    return Codebook(n, d, std::move(w));
}

std::vector<std::uint64_t> adjacency_masks(const ConfusabilityGraph& g) {
    std::vector<std::uint64_t> adj(g.vertex_count(), 0);
    for (std::uint64_t u = 0; u < g.vertex_count(); ++u) {
        for (std::uint64_t v = 0; v < g.vertex_count(); ++v) {
            if (g.adjacent(u, v)) adj[u] |= std::uint64_t{1} << v;
        }
    }
    return adj;
}

// Every codeword, every set of at most D deleted positions: decode must
// return the codeword.
void expect_round_trip(const Codebook& cb) {
    const unsigned n = cb.n();
    for (const auto& c : cb.codewords()) {
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
            if (static_cast<unsigned>(std::popcount(mask)) > cb.deletions()) continue;
            std::vector<std::size_t> del;
            for (unsigned i = 0; i < n; ++i) {
                if ((mask >> i) & 1u) del.push_back(i);
            }
            const DecodeResult r = decode(cb, c.subsequence_without(del));
            ASSERT_EQ(r.status, DecodeStatus::Decoded) << c.to_string() << " mask " << mask;
            ASSERT_EQ(*r.codeword, c);
        }
    }
}

} // namespace

TEST(Codebook, SortsAndRejectsBadInput) {
    const Codebook cb = book(2, 1, {"11", "00"});
    EXPECT_EQ(cb[0].to_string(), "00");
    EXPECT_EQ(cb.indices(), (std::vector<std::uint64_t>{0, 3}));
    EXPECT_DOUBLE_EQ(cb.rate(), 0.5);
    EXPECT_THROW(book(2, 1, {"00", "00"}), std::invalid_argument);
    EXPECT_THROW(book(2, 1, {"000"}), std::invalid_argument);
    EXPECT_THROW(Codebook(2, 3), std::invalid_argument);
}

TEST(GreedyCodebook, HandExamples) {
    const Codebook lex = greedy_codebook(2, 1, GreedyOrder::Lexicographic);
    EXPECT_EQ(lex, book(2, 1, {"00", "11"}));
    for (unsigned n = 1; n <= 8; ++n) EXPECT_EQ(greedy_codebook(n, 0, GreedyOrder::MinDegreeFirst).size(), 1u << n);
    EXPECT_EQ(greedy_codebook(4, 2, GreedyOrder::Lexicographic).size(), 2u);
}

TEST(GreedyCodebook, EveryOrderIsValid) {
    for (unsigned n = 1; n <= 10; ++n) {
        for (unsigned d = 1; d <= std::min(3u, n); ++d) {
            const auto g = build_graph(n, d);
            for (auto order : {GreedyOrder::Lexicographic, GreedyOrder::MinDegreeFirst, GreedyOrder::SeededRandom}) {
                const Codebook cb = greedy_codebook(g, order, 5);
                EXPECT_GE(cb.size(), 1u);
                EXPECT_TRUE(verify_codebook(cb).valid) << n << ' ' << d;
            }
        }
    }
}

TEST(GreedyCodebook, SeededOrderIsReproducible) {
    const auto g = build_graph(9, 1);
    EXPECT_EQ(greedy_codebook(g, GreedyOrder::SeededRandom, 3), greedy_codebook(g, GreedyOrder::SeededRandom, 3));
    EXPECT_THROW(greedy_codebook(17, 1, GreedyOrder::Lexicographic), resource_error);
}

TEST(ExactMaxCodebook, HandExamples) {
    EXPECT_EQ(exact_max_codebook(2, 1).size(), 2u);
    EXPECT_EQ(exact_max_codebook(4, 2).size(), 2u);
    EXPECT_EQ(exact_max_codebook(1, 1).size(), 1u);
    EXPECT_EQ(exact_max_codebook(5, 0).size(), 32u);
    EXPECT_THROW(exact_max_codebook(11, 2), resource_error);
}

TEST(ExactMaxCodebook, MatchesSubsetEnumerationOracle) {
    for (unsigned n = 1; n <= 6; ++n) {
        for (unsigned d = 1; d <= std::min(2u, n); ++d) {
            const auto g = build_graph(n, d);
            const Codebook cb = exact_max_codebook(g);
            EXPECT_EQ(cb.size(), oracle::max_independent_set(adjacency_masks(g))) << "n=" << n << " D=" << d;
            EXPECT_TRUE(verify_codebook(cb).valid);
        }
    }
}

TEST(ExactMaxCodebook, KnownSingleDeletionOptima) {
    // Maximum single-deletion code sizes for n = 1..8.
    const std::vector<std::size_t> known{1, 2, 2, 4, 6, 10, 16, 30};
    for (unsigned n = 1; n <= 8; ++n) EXPECT_EQ(exact_max_codebook(n, 1).size(), known[n - 1]) << n;
}

TEST(ExactMaxCodebook, DominatesGreedyAndCaroWei) {
    for (unsigned n = 1; n <= 8; ++n) {
        for (unsigned d = 0; d <= std::min(3u, n); ++d) {
            if (n == 8 && d == 1) continue; // covered above; slowest cell
            const auto g = build_graph(n, d);
            const auto exact = static_cast<double>(exact_max_codebook(g).size());
            const GraphStats s = graph_stats(g);
            for (auto order : {GreedyOrder::Lexicographic, GreedyOrder::MinDegreeFirst}) {
                EXPECT_GE(exact, static_cast<double>(greedy_codebook(g, order).size()));
            }
            EXPECT_GE(exact + 1e-9, s.caro_wei_bound) << n << ' ' << d;
            EXPECT_GE(s.caro_wei_bound + 1e-9, s.turan_bound_average_degree) << n << ' ' << d;
        }
    }
}

TEST(ExactMaxCodebook, BudgetExhaustionReportsBestFound) {
    ExactLimits limits;
    limits.node_budget = 5;
    try {
        exact_max_codebook(8, 1, limits);
        FAIL() << "expected search_budget_exhausted";
    } catch (const search_budget_exhausted& e) {
        EXPECT_GE(e.best_found().size(), 26u);
        EXPECT_TRUE(verify_codebook(e.best_found()).valid);
    }
}

TEST(VtCodebook, EveryResidueCorrectsOneDeletion) {
    for (unsigned n = 1; n <= 10; ++n) {
        for (unsigned a = 0; a <= n; ++a) EXPECT_TRUE(verify_codebook(vt_codebook(n, a)).valid) << n << ' ' << a;
    }
    EXPECT_EQ(vt_codebook(8, 0).size(), 30u);
}

TEST(Sampler, OutputsAreValidAndReproducible) {
    const auto g = build_graph(10, 2);
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const Codebook cb = sample_codebook_thm3(g, 0.9, 0.1, seed);
        ASSERT_TRUE(verify_codebook(cb).valid) << seed;
    }
    EXPECT_EQ(sample_codebook_thm3(g, 0.9, 0.1, 4), sample_codebook_thm3(g, 0.9, 0.1, 4));
}

TEST(Sampler, ConstantStringsHaveLargestRetention) {
    const unsigned n = 10;
    const double q = 0.9, c = 0.1;
    const auto r = retention_probabilities(n, q, c);
    const double expected = std::exp2(c * n - 1) * std::pow(q, n - 1) / 2;
    EXPECT_NEAR(r.front(), expected, 1e-15);
    EXPECT_NEAR(r.back(), expected, 1e-15);
    EXPECT_DOUBLE_EQ(*std::max_element(r.begin(), r.end()), r.front());
}

TEST(Sampler, MeanSizeAboveExpectedRetainedMinusSurvivingEdges) {
    const auto g = build_graph(10, 2);
    const SamplerExpectation e = sampler_expectation(g, 0.9, 0.1);
    double total = 0;
    for (std::uint64_t seed = 0; seed < 200; ++seed) total += sample_codebook_thm3(g, 0.9, 0.1, seed).size();
    EXPECT_GE(total / 200, e.lower_bound());
}

TEST(Sampler, RejectsOutOfRangeConstant) {
    EXPECT_THROW(sample_codebook_thm3(10, 2, 0.9, std::log2(1 / 0.9), 1), std::domain_error);
    EXPECT_THROW(sample_codebook_thm3(10, 2, 0.9, 1.0, 1), std::domain_error);
    EXPECT_THROW(sample_codebook_thm3(10, 2, 0.9, 0.0, 1), std::domain_error);
    EXPECT_THROW(sample_codebook_thm3(10, 2, 1.0, 0.1, 1), std::domain_error);
}

TEST(VerifyCodebook, HandExamples) {
    EXPECT_TRUE(verify_codebook(book(2, 1, {"00", "11"})).valid);
    for (unsigned n = 2; n <= 12; ++n) {
        std::vector<Sequence> w{Sequence::from_index(0, n), Sequence::from_index((std::uint64_t{1} << n) - 1, n)};
        EXPECT_TRUE(verify_codebook(Codebook(n, n / 2, w)).valid) << n;
    }
    const ValidityReport bad = verify_codebook(book(4, 1, {"0101", "1010"}));
    EXPECT_FALSE(bad.valid);
    EXPECT_EQ(*bad.violating_lcs, 3u);
    EXPECT_EQ(bad.violating_pair->first.to_string(), "0101");
}

TEST(Decode, HandExamples) {
    const Codebook cb = book(2, 1, {"00", "11"});
    const DecodeResult a = decode(cb, Sequence::from_string("0"));
    EXPECT_EQ(a.status, DecodeStatus::Decoded);
    EXPECT_EQ(a.codeword->to_string(), "00");
    EXPECT_EQ(decode(cb, Sequence::from_string("01")).status, DecodeStatus::NoCandidate);
    EXPECT_THROW(decode(cb, Sequence::from_string("")), std::invalid_argument);
    EXPECT_THROW(decode(cb, Sequence::from_string("000")), std::invalid_argument);
    EXPECT_EQ(decode(book(4, 1, {"0101", "1010"}), Sequence::from_string("101")).status, DecodeStatus::Ambiguous);
}

TEST(Decode, ExhaustiveRoundTripForGreedyCodebooks) {
    for (unsigned n = 1; n <= 10; ++n) {
        for (unsigned d = 1; d <= std::min(2u, n); ++d) {
            expect_round_trip(greedy_codebook(n, d, GreedyOrder::MinDegreeFirst));
        }
    }
}

TEST(AdversaryAttack, FindsConfusablePair) {
    const auto a = adversary_attack(book(4, 1, {"0101", "1010"}));
    ASSERT_TRUE(a.has_value());
    EXPECT_EQ(a->received.size(), 3u);
    EXPECT_EQ(a->deletions_first, 1u);
    EXPECT_EQ(a->deletions_second, 1u);
    EXPECT_TRUE(is_subsequence(a->received, a->first));
    EXPECT_TRUE(is_subsequence(a->received, a->second));
}

TEST(AdversaryAttack, NoneOnValidCodebooks) {
    for (unsigned n = 1; n <= 10; ++n) {
        for (unsigned d = 1; d <= std::min(2u, n); ++d) {
            EXPECT_FALSE(adversary_attack(greedy_codebook(n, d, GreedyOrder::Lexicographic)).has_value());
        }
    }
}

TEST(AdversaryAttack, WitnessContractOnInvalidCodebooks) {
    // Whole space with D >= 1 is always attackable.
    for (unsigned n = 2; n <= 7; ++n) {
        std::vector<std::uint64_t> ids(std::size_t{1} << n);
        std::iota(ids.begin(), ids.end(), 0);
        for (unsigned d = 1; d <= 2; ++d) {
            const auto a = adversary_attack(Codebook::from_indices(n, d, ids));
            ASSERT_TRUE(a.has_value());
            EXPECT_GE(a->received.size() + d, n);
            EXPECT_TRUE(is_subsequence(a->received, a->first));
            EXPECT_TRUE(is_subsequence(a->received, a->second));
            EXPECT_EQ(a->deletions_first, n - a->received.size());
        }
    }
}

TEST(CodebookFile, RoundTrip) {
    const Codebook cb = greedy_codebook(7, 1, GreedyOrder::MinDegreeFirst);
    std::stringstream ss;
    write_codebook(ss, cb);
    EXPECT_EQ(ss.str().substr(0, ss.str().find('\n')), "n=7 D=1 count=" + std::to_string(cb.size()));
    EXPECT_EQ(read_codebook(ss), cb);
}

TEST(CodebookFile, ParserRejectsMalformedInput) {
    auto parse = [](const std::string& text) {
        std::istringstream is(text);
        return read_codebook(is);
    };
    EXPECT_NO_THROW(parse("n=2 D=1 count=2\r\n00\r\n11\r\n"));
    EXPECT_THROW(parse(""), format_error);
    EXPECT_THROW(parse("n=2 D=1\n00\n"), format_error);
    EXPECT_THROW(parse("n=2 D=1 count=2\n00\n111\n"), format_error);
    EXPECT_THROW(parse("n=2 D=1 count=2\n00\n00\n"), format_error);
    EXPECT_THROW(parse("n=2 D=1 count=3\n00\n11\n"), format_error);
    EXPECT_THROW(parse("n=2 D=1 count=2\n00\n12\n"), format_error);
    EXPECT_THROW(parse("n=2 D=x count=1\n00\n"), format_error);
    EXPECT_THROW(parse("n=2 D=3 count=1\n00\n"), format_error);
}
