#pragma once
// Confusability graph on all binary strings of length n: vertices are the
// lexicographic ranks 0..2^n-1, and u ~ v (u != v) iff LCS(u, v) >= n - D,
// i.e. an adversary deleting up to D bits from each can produce the same
// received string. Codebooks are exactly the independent sets.
//
// Up to `max_stored_n` the adjacency is kept as one bitset row per vertex.
// Between that and `max_n` the graph is an edge oracle: adjacency and
// degrees are computed on demand.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "delcap/core_math.hpp"
#include "delcap/lcs.hpp"
#include "delcap/rng.hpp"
#include "delcap/sequence.hpp"

namespace delcap {

/// Raised when a request would exceed a configured size limit.
class resource_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct GraphLimits {
    unsigned max_n = 20;
    unsigned max_stored_n = 16;
};

/// Bit word (bit i = symbol i) of the string with lexicographic rank `index`.
inline std::uint64_t vertex_word(std::uint64_t index, unsigned n) noexcept {
    return reverse_low_bits(index, n);
}

class ConfusabilityGraph {
public:
    unsigned n() const noexcept { return n_; }
    unsigned deletions() const noexcept { return deletions_; }
    std::size_t vertex_count() const noexcept { return std::size_t{1} << n_; }
    bool stored() const noexcept { return stored_; }

    /// Minimum LCS length that makes two distinct strings confusable.
    unsigned confusion_length() const noexcept { return n_ - deletions_; }

    bool adjacent(std::uint64_t u, std::uint64_t v) const {
        check_vertex(u);
        check_vertex(v);
        if (stored_) return (row_data(u)[v >> 6] >> (v & 63)) & 1u;
        return u != v && lcs_of(u, v) >= confusion_length();
    }

    /// Bitset row of u (bit v set iff u ~ v). Stored mode only.
    std::span<const std::uint64_t> row(std::uint64_t u) const {
        require_stored("row");
        check_vertex(u);
        return {row_data(u), words_per_row_};
    }

    std::size_t words_per_row() const noexcept { return words_per_row_; }

    std::uint64_t degree(std::uint64_t u) const {
        check_vertex(u);
        if (stored_) return degrees_[u];
        std::uint64_t d = 0;
        for (std::uint64_t v = 0; v < vertex_count(); ++v) {
            if (v != u && lcs_of(u, v) >= confusion_length()) ++d;
        }
        return d;
    }

    const std::vector<std::uint64_t>& degrees() const {
        require_stored("degrees");
        return degrees_;
    }

    std::uint64_t edge_count() const {
        require_stored("edge_count");
        return edge_count_;
    }

    std::vector<std::uint64_t> neighbors(std::uint64_t u) const {
        std::vector<std::uint64_t> out;
        for (std::uint64_t v = 0; v < vertex_count(); ++v) {
            if (adjacent(u, v)) out.push_back(v);
        }
        return out;
    }

    unsigned lcs_of(std::uint64_t u, std::uint64_t v) const noexcept {
        return detail::lcs_binary_word(vertex_word(u, n_), n_, vertex_word(v, n_), n_);
    }

    friend ConfusabilityGraph build_graph(unsigned, unsigned, unsigned, GraphLimits);

private:
    const std::uint64_t* row_data(std::uint64_t u) const noexcept {
        return adjacency_.data() + u * words_per_row_;
    }
    void check_vertex(std::uint64_t u) const {
        if (u >= vertex_count()) throw std::out_of_range("vertex outside graph");
    }
    void require_stored(const char* what) const {
        if (!stored_) {
            throw resource_error(std::string(what) +
                                 ": adjacency not stored for n = " + std::to_string(n_) +
                                 " (edge-oracle mode)");
        }
    }

    unsigned n_ = 0;
    unsigned deletions_ = 0;
    bool stored_ = false;
    std::size_t words_per_row_ = 0;
    std::vector<std::uint64_t> adjacency_;
    std::vector<std::uint64_t> degrees_;
    std::uint64_t edge_count_ = 0;
};

inline ConfusabilityGraph build_graph(unsigned n, unsigned deletions, unsigned workers = 0,
                                      GraphLimits limits = {}) {
    if (n < 1) throw std::invalid_argument("build_graph: n must be at least 1");
    if (deletions > n) throw std::invalid_argument("build_graph: D must not exceed n");
    if (n > limits.max_n || n > 63) {
        throw resource_error("build_graph: n = " + std::to_string(n) + " exceeds the limit of " +
                             std::to_string(limits.max_n) + " (2^n vertices, 4^n pairwise LCS)");
    }
    ConfusabilityGraph g;
    g.n_ = n;
    g.deletions_ = deletions;
    if (n > limits.max_stored_n) return g; // edge-oracle mode

    const std::size_t count = std::size_t{1} << n;
    g.stored_ = true;
    g.words_per_row_ = (count + 63) / 64;
    g.adjacency_.assign(count * g.words_per_row_, 0);
    g.degrees_.assign(count, 0);

    std::vector<std::uint64_t> words(count);
    for (std::size_t v = 0; v < count; ++v) words[v] = vertex_word(v, n);
    const unsigned threshold = n - deletions;

    // Each worker owns whole rows, so rows are written without sharing.
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t u = next.fetch_add(1); u < count; u = next.fetch_add(1)) {
            std::uint64_t* row = g.adjacency_.data() + u * g.words_per_row_;
            std::uint64_t deg = 0;
            for (std::size_t v = 0; v < count; ++v) {
                if (v == u) continue;
                if (detail::lcs_binary_word(words[u], n, words[v], n) >= threshold) {
                    row[v >> 6] |= std::uint64_t{1} << (v & 63);
                    ++deg;
                }
            }
            g.degrees_[u] = deg;
        }
    };
    if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
    if (workers <= 1 || count < 256) {
        work();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
    }
    std::uint64_t degree_sum = 0;
    for (auto d : g.degrees_) degree_sum += d;
    g.edge_count_ = degree_sum / 2;
    return g;
}

struct GraphStats {
    unsigned n = 0;
    unsigned deletions = 0;
    std::uint64_t vertices = 0;
    std::uint64_t edges = 0;
    std::map<std::uint64_t, std::uint64_t> degree_histogram; // degree -> vertex count
    std::uint64_t min_degree = 0;
    double mean_degree = 0.0;
    std::uint64_t max_degree = 0;
    double density = 0.0;
    double turan_bound = 0.0;
    double turan_bound_average_degree = 0.0;
    double caro_wei_bound = 0.0;
    std::uint64_t all_zeros_degree = 0;
};

inline GraphStats graph_stats(const ConfusabilityGraph& g) {
    const auto& deg = g.degrees();
    GraphStats s;
    s.n = g.n();
    s.deletions = g.deletions();
    s.vertices = g.vertex_count();
    s.edges = g.edge_count();
    for (auto d : deg) ++s.degree_histogram[d];
    s.min_degree = *std::min_element(deg.begin(), deg.end());
    s.max_degree = *std::max_element(deg.begin(), deg.end());
    s.mean_degree = 2.0 * static_cast<double>(s.edges) / static_cast<double>(s.vertices);
    const double pairs = static_cast<double>(s.vertices) * static_cast<double>(s.vertices - 1) / 2.0;
    s.density = pairs > 0 ? static_cast<double>(s.edges) / pairs : 0.0;
    s.turan_bound = delcap::turan_bound(s.vertices, s.edges);
    s.turan_bound_average_degree = delcap::turan_bound_average_degree(s.vertices, s.edges);
    s.caro_wei_bound = delcap::caro_wei_bound(deg);
    s.all_zeros_degree = deg[0];
    return s;
}

/// Degrees of `samples` vertices drawn uniformly from the graph; works in
/// edge-oracle mode, where full statistics are out of reach.
inline std::vector<std::pair<std::uint64_t, std::uint64_t>> sample_degrees(
    const ConfusabilityGraph& g, std::size_t samples, std::uint64_t seed) {
    StreamRng rng(seed, 0);
    std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
    out.reserve(samples);
    for (std::size_t i = 0; i < samples; ++i) {
        std::uint64_t v = rng.below(g.vertex_count());
        out.emplace_back(v, g.degree(v));
    }
    return out;
}

} // namespace delcap
