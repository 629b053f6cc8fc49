#pragma once
// Zero-error codebooks for the adversarial deletion channel at small n:
// construction (greedy, exact maximum, randomized retain-and-repair),
// verification, decoding, and a worst-case adversary.
//
// A codebook of length-n strings survives up to D deletions iff every pair
// of codewords has LCS <= n - D - 1.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <deque>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "delcap/graph.hpp"
#include "delcap/lcs.hpp"
#include "delcap/rng.hpp"
#include "delcap/sequence.hpp"
#include "delcap/string_gen.hpp"

namespace delcap {

class Codebook {
public:
    Codebook(unsigned n, unsigned deletions) : n_(n), deletions_(deletions) {
        if (deletions > n) throw std::invalid_argument("codebook: D must not exceed n");
    }

    /// Takes any order; stores codewords sorted. Rejects duplicates,
    /// wrong lengths and non-binary words.
    Codebook(unsigned n, unsigned deletions, std::vector<Sequence> words)
        : Codebook(n, deletions) {
        for (const auto& w : words) {
            if (w.alphabet() != 2) throw std::invalid_argument("codebook: codewords must be binary");
            if (w.size() != n) {
                throw std::invalid_argument("codebook: codeword '" + w.to_string() +
                                            "' has length " + std::to_string(w.size()) +
                                            ", expected " + std::to_string(n));
            }
        }
        std::sort(words.begin(), words.end());
        if (auto dup = std::adjacent_find(words.begin(), words.end()); dup != words.end()) {
            throw std::invalid_argument("codebook: duplicate codeword '" + dup->to_string() + "'");
        }
        words_ = std::move(words);
    }

    static Codebook from_indices(unsigned n, unsigned deletions, std::span<const std::uint64_t> ids) {
        std::vector<Sequence> words;
        words.reserve(ids.size());
        for (auto id : ids) words.push_back(Sequence::from_index(id, n));
        return Codebook(n, deletions, std::move(words));
    }

    unsigned n() const noexcept { return n_; }
    unsigned deletions() const noexcept { return deletions_; }
    std::size_t size() const noexcept { return words_.size(); }
    const std::vector<Sequence>& codewords() const noexcept { return words_; }
    const Sequence& operator[](std::size_t i) const { return words_.at(i); }

    std::vector<std::uint64_t> indices() const {
        std::vector<std::uint64_t> out;
        out.reserve(words_.size());
        for (const auto& w : words_) out.push_back(w.to_index());
        return out;
    }

    /// log2(size) / n; zero for an empty codebook.
    double rate() const {
        return words_.empty() ? 0.0 : std::log2(static_cast<double>(words_.size())) / n_;
    }

    friend bool operator==(const Codebook&, const Codebook&) = default;

private:
    unsigned n_;
    unsigned deletions_;
    std::vector<Sequence> words_;
};

// ---------------------------------------------------------------------------
// Greedy

enum class GreedyOrder { Lexicographic, MinDegreeFirst, SeededRandom };

/// Scan vertices in the given order, keep each one not yet excluded and
/// exclude its confusable neighbours.
inline Codebook greedy_codebook(const ConfusabilityGraph& g, GreedyOrder order,
                                std::uint64_t seed = 0) {
    const std::size_t count = g.vertex_count();
    std::vector<std::uint64_t> sequence(count);
    for (std::size_t v = 0; v < count; ++v) sequence[v] = v;
    if (order == GreedyOrder::MinDegreeFirst) {
        const auto& deg = g.degrees();
        std::stable_sort(sequence.begin(), sequence.end(),
                         [&](auto a, auto b) { return deg[a] < deg[b]; });
    } else if (order == GreedyOrder::SeededRandom) {
        StreamRng rng(seed, 0);
        for (std::size_t i = count; i > 1; --i) {
            std::swap(sequence[i - 1], sequence[rng.below(i)]);
        }
    }
    std::vector<std::uint64_t> excluded(g.words_per_row(), 0);
    std::vector<std::uint64_t> chosen;
    for (auto v : sequence) {
        if ((excluded[v >> 6] >> (v & 63)) & 1u) continue;
        chosen.push_back(v);
        const auto row = g.row(v);
        for (std::size_t w = 0; w < excluded.size(); ++w) excluded[w] |= row[w];
    }
    return Codebook::from_indices(g.n(), g.deletions(), chosen);
}

inline Codebook greedy_codebook(unsigned n, unsigned deletions, GreedyOrder order,
                                std::uint64_t seed = 0, GraphLimits limits = {}) {
    if (n > limits.max_stored_n) {
        throw resource_error("greedy_codebook: n = " + std::to_string(n) +
                             " needs stored adjacency (limit " +
                             std::to_string(limits.max_stored_n) + ")");
    }
    return greedy_codebook(build_graph(n, deletions, 0, limits), order, seed);
}

// ---------------------------------------------------------------------------
// Exact maximum independent set
//
// Maximum clique in the complement graph, branch-and-bound over bitsets.
// Vertices are relabelled by increasing confusability degree; at each node
// the candidates are greedily partitioned into colour classes (cliques of the
// confusability graph, so a codebook takes at most one word per class) and
// the class count bounds how many more codewords the branch can add. A
// vertex that would open a class above the pruning level is re-numbered into
// a lower class when a single conflicting vertex can be moved aside.
//
// The single-deletion graphs at n = 9 and 10 are notoriously hard for this
// kind of bound, so the search carries an optional node/time budget.

struct ExactLimits {
    unsigned max_n = 10;
    std::uint64_t node_budget = 0;                 // 0 = unlimited
    std::chrono::milliseconds time_budget{0};       // 0 = unlimited
};

/// Raised when the exact search runs out of budget; carries the best
/// codebook found so far (a lower bound, not a proven optimum).
class search_budget_exhausted : public resource_error {
public:
    search_budget_exhausted(const std::string& what, Codebook best)
        : resource_error(what), best_(std::move(best)) {}
    const Codebook& best_found() const noexcept { return best_; }

private:
    Codebook best_;
};

struct ExactSearchResult {
    Codebook codebook;
    std::uint64_t nodes = 0;
};

namespace detail {

class MaxCliqueSearch {
public:
    using Bits = std::vector<std::uint64_t>;

    MaxCliqueSearch(std::vector<Bits> adj, std::size_t count)
        : count_(count), words_((count + 63) / 64), adj_(std::move(adj)) {}

    void set_budget(std::uint64_t nodes, std::chrono::milliseconds time) {
        node_budget_ = nodes;
        if (time.count() > 0) deadline_ = std::chrono::steady_clock::now() + time;
    }

    /// Returns false if the budget ran out; best() is then only a lower bound.
    bool solve(std::vector<std::size_t> incumbent) {
        best_ = std::move(incumbent);
        Bits p(words_, 0);
        for (std::size_t v = 0; v < count_; ++v) p[v >> 6] |= std::uint64_t{1} << (v & 63);
        expand(p.data(), 0);
        return !aborted_;
    }

    const std::vector<std::size_t>& best() const noexcept { return best_; }
    std::uint64_t nodes() const noexcept { return nodes_; }

private:
    // Scratch owned by one recursion depth; reused across siblings.
    struct Frame {
        Bits next;
        Bits uncoloured;
        Bits q;
        Bits classes; // class k occupies words [k*words, (k+1)*words)
        std::vector<std::size_t> order;
        std::vector<std::size_t> colour;
    };

    static void set(std::uint64_t* s, std::size_t v) { s[v >> 6] |= std::uint64_t{1} << (v & 63); }
    static void reset(std::uint64_t* s, std::size_t v) { s[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }

    Frame& frame(std::size_t depth) {
        while (frames_.size() <= depth) {
            Frame f;
            f.next.assign(words_, 0);
            f.uncoloured.assign(words_, 0);
            f.q.assign(words_, 0);
            f.classes.assign(count_ * words_, 0);
            frames_.push_back(std::move(f));
        }
        return frames_[depth];
    }

    bool over_budget() {
        if (node_budget_ != 0 && nodes_ >= node_budget_) return true;
        if (deadline_ && (nodes_ & 1023) == 0 && std::chrono::steady_clock::now() >= *deadline_) {
            return true;
        }
        return false;
    }

    // Number of neighbours of v inside `cls`, stopping at 2; `witness`
    // receives one of them.
    std::size_t conflicts(std::size_t v, const std::uint64_t* cls, std::size_t& witness) const {
        std::size_t found = 0;
        const auto& row = adj_[v];
        for (std::size_t w = 0; w < words_ && found < 2; ++w) {
            const std::uint64_t m = cls[w] & row[w];
            if (m != 0) {
                found += static_cast<std::size_t>(std::popcount(m));
                witness = w * 64 + static_cast<std::size_t>(std::countr_zero(m));
            }
        }
        return found;
    }

    bool renumber(std::size_t v, std::size_t limit, std::uint64_t* classes) const {
        for (std::size_t k1 = 0; k1 < limit; ++k1) {
            std::uint64_t* c1 = classes + k1 * words_;
            std::size_t w = 0;
            const std::size_t c = conflicts(v, c1, w);
            if (c == 0) {
                set(c1, v);
                return true;
            }
            if (c != 1) continue;
            for (std::size_t k2 = k1 + 1; k2 < limit; ++k2) {
                std::uint64_t* c2 = classes + k2 * words_;
                std::size_t unused = 0;
                if (conflicts(w, c2, unused) == 0) {
                    reset(c1, w);
                    set(c1, v);
                    set(c2, w);
                    return true;
                }
            }
        }
        return false;
    }

    void expand(std::uint64_t* p, std::size_t depth) {
        ++nodes_;
        if (over_budget()) {
            aborted_ = true;
            return;
        }
        const std::size_t need =
            best_.size() + 1 > current_.size() ? best_.size() + 1 - current_.size() : 0;

        Frame& f = frame(depth);
        f.order.clear();
        f.colour.clear();
        std::uint64_t* uncoloured = f.uncoloured.data();
        std::uint64_t* q = f.q.data();
        std::copy(p, p + words_, uncoloured);
        std::size_t k = 0; // classes opened so far
        for (;;) {
            bool any = false;
            for (std::size_t w = 0; w < words_; ++w) any = any || uncoloured[w] != 0;
            if (!any) break;
            std::copy(uncoloured, uncoloured + words_, q);
            std::uint64_t* cls = f.classes.data() + k * words_;
            std::fill(cls, cls + words_, 0);
            ++k;
            bool used = false;
            for (std::size_t w = 0; w < words_; ++w) {
                while (q[w] != 0) {
                    const std::size_t v = w * 64 + static_cast<std::size_t>(std::countr_zero(q[w]));
                    reset(uncoloured, v);
                    reset(q, v);
                    if (k >= need && need > 1 && renumber(v, std::min(need - 1, k - 1), f.classes.data())) {
                        continue;
                    }
                    set(cls, v);
                    used = true;
                    const auto& row = adj_[v];
                    for (std::size_t x = w; x < words_; ++x) q[x] &= ~row[x];
                    if (k >= need) {
                        f.order.push_back(v);
                        f.colour.push_back(k);
                    }
                }
            }
            if (!used) --k;
        }

        for (std::size_t i = f.order.size(); i-- > 0;) {
            if (aborted_ || current_.size() + f.colour[i] <= best_.size()) return;
            const std::size_t v = f.order[i];
            current_.push_back(v);
            bool empty = true;
            const auto& row = adj_[v];
            std::uint64_t* next = f.next.data();
            for (std::size_t w = 0; w < words_; ++w) {
                next[w] = p[w] & row[w];
                empty = empty && next[w] == 0;
            }
            if (empty) {
                if (current_.size() > best_.size()) best_ = current_;
            } else {
                expand(next, depth + 1);
            }
            current_.pop_back();
            reset(p, v);
        }
    }

    std::size_t count_;
    std::size_t words_;
    std::vector<Bits> adj_;
    std::deque<Frame> frames_; // deque: references survive growth
    std::vector<std::size_t> current_;
    std::vector<std::size_t> best_;
    std::uint64_t nodes_ = 0;
    std::uint64_t node_budget_ = 0;
    std::optional<std::chrono::steady_clock::time_point> deadline_;
    bool aborted_ = false;
};

} // namespace detail

/// Varshamov-Tenengolts class {x : sum_i i*x_i = a (mod n+1)}, positions
/// counted from 1. Every class corrects one deletion.
inline Codebook vt_codebook(unsigned n, unsigned residue) {
    if (n < 1 || n > 24) throw std::invalid_argument("vt_codebook: n must lie in [1, 24]");
    std::vector<std::uint64_t> ids;
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v) {
        const Sequence s = Sequence::from_index(v, n);
        std::uint64_t moment = 0;
        for (std::size_t i = 0; i < n; ++i) moment += (i + 1) * s[i];
        if (moment % (n + 1) == residue % (n + 1)) ids.push_back(v);
    }
    return Codebook::from_indices(n, 1, ids);
}

inline bool is_independent(const ConfusabilityGraph& g, std::span<const std::uint64_t> ids) {
    for (std::size_t i = 0; i < ids.size(); ++i) {
        for (std::size_t j = i + 1; j < ids.size(); ++j) {
            if (g.adjacent(ids[i], ids[j])) return false;
        }
    }
    return true;
}

inline ExactSearchResult exact_max_search(const ConfusabilityGraph& g, ExactLimits limits = {}) {
    if (g.n() > limits.max_n) {
        throw resource_error("exact_max_codebook: n = " + std::to_string(g.n()) +
                             " exceeds the exact-search limit of " + std::to_string(limits.max_n));
    }
    const std::size_t count = g.vertex_count();
    const auto& deg = g.degrees();

    std::vector<std::uint64_t> label(count);
    for (std::size_t v = 0; v < count; ++v) label[v] = v;
    std::stable_sort(label.begin(), label.end(), [&](auto a, auto b) { return deg[a] < deg[b]; });
    std::vector<std::size_t> position(count);
    for (std::size_t i = 0; i < count; ++i) position[label[i]] = i;

    const std::size_t words = (count + 63) / 64;
    std::vector<detail::MaxCliqueSearch::Bits> comp(count, detail::MaxCliqueSearch::Bits(words, 0));
    for (std::size_t i = 0; i < count; ++i) {
        for (std::size_t j = 0; j < count; ++j) {
            if (i != j && !g.adjacent(label[i], label[j])) {
                comp[i][j >> 6] |= std::uint64_t{1} << (j & 63);
            }
        }
    }

    // Incumbent: best greedy result, or a VT class when D = 1.
    std::vector<std::uint64_t> start;
    for (auto order : {GreedyOrder::MinDegreeFirst, GreedyOrder::Lexicographic}) {
        auto ids = greedy_codebook(g, order).indices();
        if (ids.size() > start.size()) start = std::move(ids);
    }
    if (g.deletions() == 1) {
        for (unsigned a = 0; a <= g.n(); ++a) {
            auto ids = vt_codebook(g.n(), a).indices();
            if (ids.size() > start.size() && is_independent(g, ids)) start = std::move(ids);
        }
    }
    std::vector<std::size_t> incumbent;
    for (auto id : start) incumbent.push_back(position[id]);

    detail::MaxCliqueSearch search(std::move(comp), count);
    search.set_budget(limits.node_budget, limits.time_budget);
    const bool finished = search.solve(std::move(incumbent));

    std::vector<std::uint64_t> ids;
    for (auto i : search.best()) ids.push_back(label[i]);
    Codebook best = Codebook::from_indices(g.n(), g.deletions(), ids);
    if (!finished) {
        throw search_budget_exhausted(
            "exact_max_codebook: search budget exhausted for n = " + std::to_string(g.n()) +
                ", D = " + std::to_string(g.deletions()) + " after " +
                std::to_string(search.nodes()) + " nodes; best found " +
                std::to_string(best.size()) + " (not proven optimal)",
            std::move(best));
    }
    return {std::move(best), search.nodes()};
}

/// Maximum independent set of the graph as a codebook.
inline Codebook exact_max_codebook(const ConfusabilityGraph& g, ExactLimits limits = {}) {
    return exact_max_search(g, limits).codebook;
}

inline Codebook exact_max_codebook(unsigned n, unsigned deletions, ExactLimits limits = {}) {
    if (n > limits.max_n) {
        throw resource_error("exact_max_codebook: n = " + std::to_string(n) +
                             " exceeds the exact-search limit of " + std::to_string(limits.max_n));
    }
    return exact_max_codebook(build_graph(n, deletions), limits);
}

// ---------------------------------------------------------------------------
// Randomized retain-and-repair construction
//
// Keep each string s independently with probability 2^{cn-1} p_q(s), where
// p_q is the Markov source law; then, for each confusable pair that both
// survived, drop one endpoint. Requires 0 < c < log2(1/q) and every
// retention probability <= 1.

inline double retention_log2(const Sequence& s, double q, double c) {
    return c * static_cast<double>(s.size()) - 1.0 + log2_markov_prob(s, q);
}

inline void check_sampler_parameters(unsigned n, double q, double c) {
    if (!(q > 0.0 && q < 1.0)) throw std::domain_error("sampler: q must lie in (0, 1)");
    if (!(c > 0.0)) throw std::domain_error("sampler: c must be positive");
    if (!(c < std::log2(1.0 / q))) {
        throw std::domain_error("sampler: c must be below log2(1/q) = " +
                                std::to_string(std::log2(1.0 / q)));
    }
    // Largest retention sits on a constant string (q >= 1/2) or an
    // alternating one (q < 1/2).
    const double worst = c * n - 2.0 + (n - 1) * std::log2(std::max(q, 1.0 - q));
    if (worst > 0.0) {
        throw std::domain_error("sampler: retention probability exceeds 1 for these parameters");
    }
}

struct SamplerExpectation {
    double expected_retained = 0.0;       // E[Q]
    double expected_surviving_edges = 0.0; // E[R]
    double lower_bound() const { return expected_retained - expected_surviving_edges; }
};

inline std::vector<double> retention_probabilities(unsigned n, double q, double c) {
    check_sampler_parameters(n, q, c);
    std::vector<double> r(std::size_t{1} << n);
    for (std::size_t v = 0; v < r.size(); ++v) {
        r[v] = std::exp2(retention_log2(Sequence::from_index(v, n), q, c));
    }
    return r;
}

/// E[Q] and E[R] computed directly from the graph's edge set.
inline SamplerExpectation sampler_expectation(const ConfusabilityGraph& g, double q, double c) {
    const auto r = retention_probabilities(g.n(), q, c);
    SamplerExpectation e;
    for (double x : r) e.expected_retained += x;
    for (std::size_t u = 0; u < g.vertex_count(); ++u) {
        for (std::size_t v = u + 1; v < g.vertex_count(); ++v) {
            if (g.adjacent(u, v)) e.expected_surviving_edges += r[u] * r[v];
        }
    }
    return e;
}

inline Codebook sample_codebook_thm3(const ConfusabilityGraph& g, double q, double c,
                                     std::uint64_t seed) {
    const auto r = retention_probabilities(g.n(), q, c);
    const std::size_t count = g.vertex_count();
    std::vector<bool> alive(count);
    for (std::size_t v = 0; v < count; ++v) {
        StreamRng rng(seed, v);
        alive[v] = rng.uniform01() < r[v];
    }
    // Repair in (u, v) order: drop the endpoint with lower retention
    // probability, the lexicographically larger one on ties.
    for (std::size_t u = 0; u < count; ++u) {
        if (!alive[u]) continue;
        for (std::size_t v = u + 1; v < count && alive[u]; ++v) {
            if (!alive[v] || !g.adjacent(u, v)) continue;
            if (r[u] < r[v]) alive[u] = false;
            else alive[v] = false;
        }
    }
    std::vector<std::uint64_t> ids;
    for (std::size_t v = 0; v < count; ++v) {
        if (alive[v]) ids.push_back(v);
    }
    return Codebook::from_indices(g.n(), g.deletions(), ids);
}

inline Codebook sample_codebook_thm3(unsigned n, unsigned deletions, double q, double c,
                                     std::uint64_t seed, GraphLimits limits = {}) {
    check_sampler_parameters(n, q, c);
    return sample_codebook_thm3(build_graph(n, deletions, 0, limits), q, c, seed);
}

// ---------------------------------------------------------------------------
// Verification, decoding, attack

struct ValidityReport {
    unsigned n = 0;
    unsigned deletions = 0;
    std::size_t count = 0;
    bool valid = true;
    // First violating pair in (i, j) order, with their LCS length.
    std::optional<std::pair<Sequence, Sequence>> violating_pair;
    std::optional<std::size_t> violating_lcs;
};

inline ValidityReport verify_codebook(const Codebook& cb) {
    ValidityReport rep;
    rep.n = cb.n();
    rep.deletions = cb.deletions();
    rep.count = cb.size();
    const std::size_t limit = cb.n() - cb.deletions(); // confusable at LCS >= limit
    const auto& w = cb.codewords();
    for (std::size_t i = 0; i < w.size(); ++i) {
        for (std::size_t j = i + 1; j < w.size(); ++j) {
            const std::size_t l = lcs_length_fast(w[i], w[j]);
            if (l >= limit) {
                rep.valid = false;
                rep.violating_pair.emplace(w[i], w[j]);
                rep.violating_lcs = l;
                return rep;
            }
        }
    }
    return rep;
}

enum class DecodeStatus { Decoded, NoCandidate, Ambiguous };

struct DecodeResult {
    DecodeStatus status = DecodeStatus::NoCandidate;
    std::optional<Sequence> codeword;
    std::vector<std::size_t> candidates; // codebook positions containing w
};

/// Returns the unique codeword containing `received` as a subsequence.
inline DecodeResult decode(const Codebook& cb, const Sequence& received) {
    if (received.alphabet() != 2) throw std::invalid_argument("decode: received word must be binary");
    if (received.size() > cb.n() || received.size() + cb.deletions() < cb.n()) {
        throw std::invalid_argument("decode: received length " + std::to_string(received.size()) +
                                    " outside [" + std::to_string(cb.n() - cb.deletions()) + ", " +
                                    std::to_string(cb.n()) + "]");
    }
    DecodeResult res;
    for (std::size_t i = 0; i < cb.size(); ++i) {
        if (is_subsequence(received, cb[i])) res.candidates.push_back(i);
    }
    if (res.candidates.size() == 1) {
        res.status = DecodeStatus::Decoded;
        res.codeword = cb[res.candidates.front()];
    } else {
        res.status = res.candidates.empty() ? DecodeStatus::NoCandidate : DecodeStatus::Ambiguous;
    }
    return res;
}

struct Attack {
    Sequence first;
    Sequence second;
    Sequence received;             // common subsequence of both, length >= n - D
    std::size_t deletions_first = 0;  // n - |received|
    std::size_t deletions_second = 0;
};

/// Finds two codewords the adversary can collapse onto one received string.
inline std::optional<Attack> adversary_attack(const Codebook& cb) {
    const std::size_t limit = cb.n() - cb.deletions();
    const auto& w = cb.codewords();
    for (std::size_t i = 0; i < w.size(); ++i) {
        for (std::size_t j = i + 1; j < w.size(); ++j) {
            if (lcs_length_fast(w[i], w[j]) < limit) continue;
            Sequence witness = lcs_witness(w[i], w[j]);
            const std::size_t del = cb.n() - witness.size();
            return Attack{w[i], w[j], std::move(witness), del, del};
        }
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// File format:
//   n=<n> D=<D> count=<k>
//   <codeword>            one n-character 0/1 string per line, sorted

class format_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline void write_codebook(std::ostream& os, const Codebook& cb) {
    os << "n=" << cb.n() << " D=" << cb.deletions() << " count=" << cb.size() << '\n';
    for (const auto& w : cb.codewords()) os << w.to_string() << '\n';
}

inline Codebook read_codebook(std::istream& is) {
    std::string header;
    if (!std::getline(is, header)) throw format_error("codebook file: missing header line");
    unsigned n = 0, deletions = 0;
    std::size_t count = 0;
    {
        std::istringstream hs(header);
        std::string a, b, c, extra;
        if (!(hs >> a >> b >> c) || (hs >> extra) || a.rfind("n=", 0) != 0 ||
            b.rfind("D=", 0) != 0 || c.rfind("count=", 0) != 0) {
            throw format_error("codebook file: header must read 'n=<n> D=<D> count=<k>'");
        }
        try {
            std::size_t pos = 0;
            n = static_cast<unsigned>(std::stoul(a.substr(2), &pos));
            if (pos != a.size() - 2) throw std::invalid_argument("n");
            deletions = static_cast<unsigned>(std::stoul(b.substr(2), &pos));
            if (pos != b.size() - 2) throw std::invalid_argument("D");
            count = std::stoul(c.substr(6), &pos);
            if (pos != c.size() - 6) throw std::invalid_argument("count");
        } catch (const std::exception&) {
            throw format_error("codebook file: malformed number in header '" + header + "'");
        }
    }
    if (n < 1 || n > 64 || deletions > n) {
        throw format_error("codebook file: need 1 <= n <= 64 and D <= n");
    }
    std::vector<Sequence> words;
    std::string line;
    std::size_t line_no = 1;
    while (std::getline(is, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (line.size() != n) {
            throw format_error("codebook file line " + std::to_string(line_no) + ": length " +
                               std::to_string(line.size()) + ", expected " + std::to_string(n));
        }
        try {
            words.push_back(Sequence::from_string(line, 2));
        } catch (const std::invalid_argument& e) {
            throw format_error("codebook file line " + std::to_string(line_no) + ": " + e.what());
        }
    }
    if (words.size() != count) {
        throw format_error("codebook file: header count " + std::to_string(count) + " but " +
                           std::to_string(words.size()) + " codewords");
    }
    try {
        return Codebook(n, deletions, std::move(words));
    } catch (const std::invalid_argument& e) {
        throw format_error(std::string("codebook file: ") + e.what());
    }
}

} // namespace delcap
