#pragma once
// Seeded sequence sources: i.i.d. uniform over K symbols, and the symmetric
// first-order Markov bit source (fair first bit, each later bit repeats its
// predecessor with probability q). Output depends only on
// (seed, stream, parameters).

#include <bit>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "delcap/rng.hpp"
#include "delcap/sequence.hpp"

namespace delcap {

struct MarkovSource {
    double q = 0.5;
    std::uint64_t seed = 0;

    MarkovSource(double stay, std::uint64_t s) : q(stay), seed(s) {
        if (!(q > 0.0 && q < 1.0)) throw std::domain_error("MarkovSource: q must lie in (0, 1)");
    }
};

inline Sequence gen_uniform(std::size_t n, unsigned alphabet, std::uint64_t seed,
                            std::uint64_t stream) {
    if (alphabet < 2 || alphabet > kMaxAlphabet) {
        throw std::invalid_argument("gen_uniform: alphabet must lie in [2, 256]");
    }
    StreamRng rng(seed, stream);
    if (alphabet == 2) {
        std::vector<std::uint64_t> words((n + 63) / 64);
        for (auto& w : words) w = rng();
        return Sequence::from_binary_words(std::move(words), n);
    }
    Sequence s(alphabet);
    s.reserve(n);
    for (std::size_t i = 0; i < n; ++i) s.push_back(static_cast<Symbol>(rng.below(alphabet)));
    return s;
}

inline Sequence gen_markov(std::size_t n, double q, std::uint64_t seed, std::uint64_t stream) {
    if (n < 1) throw std::invalid_argument("gen_markov: n must be at least 1");
    if (!(q > 0.0 && q < 1.0)) throw std::domain_error("gen_markov: q must lie in (0, 1)");
    StreamRng rng(seed, stream);
    // Flip iff a 53-bit draw falls below (1-q) * 2^53.
    const auto flip_below = static_cast<std::uint64_t>(std::ldexp(1.0 - q, 53));
    std::vector<std::uint64_t> words((n + 63) / 64, 0);
    std::uint64_t bit = rng() >> 63;
    words[0] = bit;
    for (std::size_t i = 1; i < n; ++i) {
        if ((rng() >> 11) < flip_below) bit ^= 1u;
        words[i >> 6] |= bit << (i & 63);
    }
    return Sequence::from_binary_words(std::move(words), n);
}

inline Sequence gen_markov(std::size_t n, const MarkovSource& source, std::uint64_t stream) {
    return gen_markov(n, source.q, source.seed, stream);
}

namespace detail {
inline void require_binary(const Sequence& s, const char* who) {
    if (s.alphabet() != 2) throw std::invalid_argument(std::string(who) + ": binary sequence required");
    if (s.empty()) throw std::invalid_argument(std::string(who) + ": empty sequence");
}
} // namespace detail

/// Number of adjacent positions whose bits differ.
inline std::size_t transitions(const Sequence& s) {
    detail::require_binary(s, "transitions");
    const auto w = s.words();
    const std::size_t pairs = s.size() - 1; // (i, i+1) for i < pairs
    std::size_t count = 0;
    for (std::size_t k = 0; k * 64 < pairs; ++k) {
        std::uint64_t next = w[k] >> 1;
        if (k + 1 < w.size()) next |= w[k + 1] << 63;
        std::uint64_t diff = w[k] ^ next;
        const std::size_t valid = pairs - k * 64;
        if (valid < 64) diff &= (std::uint64_t{1} << valid) - 1;
        count += static_cast<std::size_t>(std::popcount(diff));
    }
    return count;
}

/// log2 of the source probability  (1/2) q^{n-1-T} (1-q)^T,  T = transitions(s).
inline double log2_markov_prob(const Sequence& s, double q) {
    if (!(q > 0.0 && q < 1.0)) throw std::domain_error("markov_prob: q must lie in (0, 1)");
    const double t = static_cast<double>(transitions(s));
    const double stays = static_cast<double>(s.size() - 1) - t;
    return -1.0 + stays * std::log2(q) + t * std::log2(1.0 - q);
}

inline constexpr std::size_t kLinearProbabilityMaxLength = 64;

/// Linear-space source probability; lengths above 64 must use the log2 form.
inline double markov_prob(const Sequence& s, double q) {
    if (!(q > 0.0 && q < 1.0)) throw std::domain_error("markov_prob: q must lie in (0, 1)");
    if (s.size() > kLinearProbabilityMaxLength) {
        throw std::domain_error("markov_prob: length above 64, use log2_markov_prob");
    }
    const auto t = static_cast<double>(transitions(s));
    const double stays = static_cast<double>(s.size() - 1) - t;
    return 0.5 * std::pow(q, stays) * std::pow(1.0 - q, t);
}

} // namespace delcap
