#pragma once
// Independent brute-force oracles shared by the test binaries. None of these
// call into the library's LCS or graph code.

#include <algorithm>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

namespace oracle {

/// True iff `w` is a subsequence of `v` (two-pointer scan).
inline bool is_subsequence(const std::vector<unsigned>& w, const std::vector<unsigned>& v) {
    std::size_t i = 0;
    for (std::size_t j = 0; j < v.size() && i < w.size(); ++j) {
        if (w[i] == v[j]) ++i;
    }
    return i == w.size();
}

/// LCS length by enumerating every subsequence of the shorter input.
inline std::size_t lcs_by_enumeration(std::vector<unsigned> x, std::vector<unsigned> y) {
    if (x.size() > y.size()) std::swap(x, y);
    std::size_t best = 0;
    const std::uint64_t subsets = std::uint64_t{1} << x.size();
    std::vector<unsigned> w;
    for (std::uint64_t mask = 0; mask < subsets; ++mask) {
        const auto bits = static_cast<std::size_t>(__builtin_popcountll(mask));
        if (bits <= best) continue;
        w.clear();
        for (std::size_t i = 0; i < x.size(); ++i) {
            if ((mask >> i) & 1u) w.push_back(x[i]);
        }
        if (is_subsequence(w, y)) best = bits;
    }
    return best;
}

/// Bits of `index` as a length-n string, most significant bit first.
inline std::vector<unsigned> binary_string(std::uint64_t index, unsigned n) {
    std::vector<unsigned> s(n);
    for (unsigned i = 0; i < n; ++i) s[i] = static_cast<unsigned>((index >> (n - 1 - i)) & 1u);
    return s;
}

/// Every string obtainable from `s` by deleting at most `d` symbols.
inline std::set<std::vector<unsigned>> deletion_ball(const std::vector<unsigned>& s, unsigned d) {
    std::set<std::vector<unsigned>> out{s};
    std::set<std::vector<unsigned>> frontier{s};
    for (unsigned step = 0; step < d; ++step) {
        std::set<std::vector<unsigned>> next;
        for (const auto& t : frontier) {
            for (std::size_t i = 0; i < t.size(); ++i) {
                auto u = t;
                u.erase(u.begin() + static_cast<std::ptrdiff_t>(i));
                next.insert(u);
            }
        }
        out.insert(next.begin(), next.end());
        frontier = std::move(next);
    }
    return out;
}

/// Maximum independent set size of a graph on at most 64 vertices given as
/// adjacency masks, by include/exclude enumeration of independent subsets.
/// The only pruning is the trivial one: stop when even taking every
/// remaining candidate cannot beat the best size seen.
inline std::size_t max_independent_set(const std::vector<std::uint64_t>& adj) {
    std::size_t best = 0;
    auto rec = [&](auto&& self, std::uint64_t candidates, std::size_t size) -> void {
        if (candidates == 0) {
            best = std::max(best, size);
            return;
        }
        if (size + static_cast<std::size_t>(__builtin_popcountll(candidates)) <= best) return;
        const unsigned v = static_cast<unsigned>(__builtin_ctzll(candidates));
        const std::uint64_t rest = candidates & ~(std::uint64_t{1} << v);
        self(self, rest & ~adj[v], size + 1);
        self(self, rest, size);
    };
    const std::uint64_t all = adj.size() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << adj.size()) - 1;
    rec(rec, all, 0);
    return best;
}

} // namespace oracle
