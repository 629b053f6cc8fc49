#pragma once
// Monte Carlo estimation of the normalised expected LCS of two independent
// source strings. Pair i is generated from streams 2i and 2i+1 of the master
// seed, and aggregation is an integer sum/min/max, so every field of a
// GammaEstimate is independent of the worker count.

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include <boost/math/distributions/normal.hpp>

#include "delcap/lcs.hpp"
#include "delcap/string_gen.hpp"

namespace delcap {

inline constexpr std::size_t kFullLength = 100000;
inline constexpr std::size_t kFullPairs = 1000;
inline constexpr std::size_t kDeskLength = 10000;
inline constexpr std::size_t kDeskPairs = 100;
inline constexpr double kDefaultConfidence = 0.99;

struct SourceSpec {
    enum class Kind { Uniform, Markov };

    Kind kind = Kind::Uniform;
    double q = 0.5;
    unsigned alphabet = 2;

    static SourceSpec uniform(unsigned alphabet = 2) {
        if (alphabet < 2 || alphabet > kMaxAlphabet) {
            throw std::invalid_argument("uniform source: alphabet must lie in [2, 256]");
        }
        return {Kind::Uniform, 0.5, alphabet};
    }

    static SourceSpec markov(double q) {
        if (!(q > 0.0 && q < 1.0)) throw std::domain_error("markov source: q must lie in (0, 1)");
        return {Kind::Markov, q, 2};
    }

    Sequence generate(std::size_t n, std::uint64_t seed, std::uint64_t stream) const {
        return kind == Kind::Markov ? gen_markov(n, q, seed, stream)
                                    : gen_uniform(n, alphabet, seed, stream);
    }

    std::optional<double> stay_probability() const {
        return kind == Kind::Markov ? std::optional<double>(q) : std::nullopt;
    }
};

struct GammaEstimate {
    std::optional<double> q; // empty for the uniform source
    std::size_t n = 0;
    std::size_t num_pairs = 0;
    double mean_lcs = 0.0;
    std::size_t min_lcs = 0;
    std::size_t max_lcs = 0;
    double stddev = 0.0;
    double mean_normalized = 0.0;
    double ci_halfwidth = 0.0;
    double confidence = kDefaultConfidence;
    std::uint64_t master_seed = 0;

    bool invariants_hold() const {
        return static_cast<double>(min_lcs) <= mean_lcs && mean_lcs <= static_cast<double>(max_lcs) &&
               max_lcs <= n && mean_normalized == mean_lcs / static_cast<double>(n);
    }

    friend bool operator==(const GammaEstimate&, const GammaEstimate&) = default;
};

inline unsigned default_workers() {
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

/// LCS length of every pair, in pair order.
inline std::vector<std::uint32_t> collect_lcs_samples(const SourceSpec& source, std::size_t n,
                                                      std::size_t num_pairs, std::uint64_t seed,
                                                      unsigned workers = 0) {
    if (n < 1) throw std::invalid_argument("gamma: n must be at least 1");
    if (num_pairs < 1) throw std::invalid_argument("gamma: num_pairs must be at least 1");
    if (workers == 0) workers = default_workers();
    workers = static_cast<unsigned>(std::min<std::size_t>(workers, num_pairs));

    std::vector<std::uint32_t> out(num_pairs, 0);
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i = next.fetch_add(1); i < num_pairs; i = next.fetch_add(1)) {
            const Sequence x = source.generate(n, seed, 2 * i);
            const Sequence y = source.generate(n, seed, 2 * i + 1);
            out[i] = static_cast<std::uint32_t>(lcs_length_fast(x, y));
        }
    };
    if (workers <= 1) {
        work();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
    }
    return out;
}

inline double normal_quantile_two_sided(double confidence) {
    if (!(confidence > 0.0 && confidence < 1.0)) {
        throw std::domain_error("confidence must lie in (0, 1)");
    }
    boost::math::normal standard;
    return boost::math::quantile(standard, 0.5 + confidence / 2.0);
}

inline GammaEstimate summarize_samples(std::span<const std::uint32_t> samples, std::size_t n,
                                       std::optional<double> q, std::uint64_t seed,
                                       double confidence = kDefaultConfidence) {
    if (samples.empty()) throw std::invalid_argument("summarize_samples: no samples");
    GammaEstimate e;
    e.q = q;
    e.n = n;
    e.num_pairs = samples.size();
    e.master_seed = seed;
    e.confidence = confidence;

    std::uint64_t sum = 0;
    unsigned __int128 sum_sq = 0;
    std::uint32_t lo = std::numeric_limits<std::uint32_t>::max(), hi = 0;
    for (std::uint32_t v : samples) {
        sum += v;
        sum_sq += static_cast<unsigned __int128>(v) * v;
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    const auto count = static_cast<double>(samples.size());
    e.mean_lcs = static_cast<double>(sum) / count;
    e.min_lcs = lo;
    e.max_lcs = hi;
    if (samples.size() > 1) {
        // Exact integer numerator: count*sum_sq - sum^2.
        const unsigned __int128 num =
            static_cast<unsigned __int128>(samples.size()) * sum_sq -
            static_cast<unsigned __int128>(sum) * sum;
        e.stddev = std::sqrt(static_cast<double>(num) / (count * (count - 1.0)));
    }
    e.mean_normalized = e.mean_lcs / static_cast<double>(n);
    e.ci_halfwidth = normal_quantile_two_sided(confidence) * e.stddev / std::sqrt(count);
    return e;
}

inline GammaEstimate estimate_gamma(const SourceSpec& source, std::size_t n, std::size_t num_pairs,
                                    std::uint64_t seed, unsigned workers = 0,
                                    double confidence = kDefaultConfidence) {
    const auto samples = collect_lcs_samples(source, n, num_pairs, seed, workers);
    return summarize_samples(samples, n, source.stay_probability(), seed, confidence);
}

/// One estimate per (source, n) cell, source-major. Every cell uses the same
/// master seed, so a one-cell sweep equals estimate_gamma on that cell.
inline std::vector<GammaEstimate> gamma_sweep(std::span<const SourceSpec> sources,
                                              std::span<const std::size_t> lengths,
                                              std::size_t num_pairs, std::uint64_t seed,
                                              unsigned workers = 0,
                                              double confidence = kDefaultConfidence) {
    if (sources.empty() || lengths.empty()) {
        throw std::invalid_argument("gamma_sweep: source and length lists must be nonempty");
    }
    std::vector<GammaEstimate> out;
    out.reserve(sources.size() * lengths.size());
    for (const auto& src : sources) {
        for (std::size_t n : lengths) {
            out.push_back(estimate_gamma(src, n, num_pairs, seed, workers, confidence));
        }
    }
    return out;
}

/// Deletion fraction below which the LCS graph argument gives positive rate,
/// taken at the empirical point estimate. Always flagged as empirical: a
/// finite-n mean is not a proven bound on the limit.
struct ImpliedThreshold {
    double p = 0.0;
    bool empirical = true;
};

inline ImpliedThreshold implied_threshold(const GammaEstimate& est) {
    if (!(est.mean_normalized >= 0.0 && est.mean_normalized <= 1.0)) {
        throw std::domain_error("implied_threshold: mean_normalized outside [0, 1]");
    }
    return {1.0 - est.mean_normalized, true};
}

} // namespace delcap
