#pragma once
// Longest common subsequence at two tiers:
//   * lcs_length_reference: textbook two-row dynamic program, the oracle.
//   * lcs_length_fast: bit-parallel recurrence over 64-bit words
//       U = V & Match[y_j];  V' = (V + U) | (V & ~U)
//     where bit i of V is 0 once row i of the DP has "used" a match. After
//     all of y is consumed, LCS(x[0..i), y) = number of zero bits of V below i.
// Witness extraction is divide-and-conquer (Hirschberg) with the score rows
// produced by the bit-parallel kernel, so memory stays linear.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#if defined(__x86_64__)
#include <immintrin.h>
#endif

#include "delcap/sequence.hpp"

namespace delcap {

namespace detail {

inline void require_same_alphabet(const Sequence& x, const Sequence& y) {
    if (x.alphabet() != y.alphabet()) {
        throw std::invalid_argument("sequences use different alphabets");
    }
}

inline std::uint64_t low_mask(std::size_t bits) noexcept {
    return bits >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << bits) - 1);
}

/// a + b + carry_in; returns the carry out.
inline unsigned char add_with_carry(unsigned char carry_in, std::uint64_t a, std::uint64_t b,
                                    std::uint64_t& sum) noexcept {
#if defined(__x86_64__)
    unsigned long long s;
    unsigned char c = _addcarry_u64(carry_in, a, b, &s);
    sum = s;
    return c;
#else
    unsigned long long s;
    unsigned char c1 = __builtin_add_overflow(a, b, &s);
    unsigned char c2 = __builtin_add_overflow(s, static_cast<unsigned long long>(carry_in), &s);
    sum = s;
    return c1 | c2;
#endif
}

/// One row step of the bit-parallel recurrence over `words` words.
inline void advance_row(std::uint64_t* v, const std::uint64_t* match, std::size_t words) noexcept {
    unsigned char carry = 0;
    for (std::size_t w = 0; w < words; ++w) {
        const std::uint64_t cur = v[w];
        const std::uint64_t u = cur & match[w];
        std::uint64_t sum;
        carry = add_with_carry(carry, cur, u, sum);
        v[w] = sum | (cur & ~u);
    }
}

/// Binary specialisation advancing `Rows` rows per sweep over the words.
/// The match mask for symbol 1 is `ones`, for symbol 0 it is ~ones, chosen
/// per row by `flip[r]` (0 or all-ones). Bits above the x length may fill
/// with garbage; carries only move upward, so the low bits stay exact.
template <int Rows>
inline void advance_rows_binary(std::uint64_t* v, const std::uint64_t* ones, std::size_t words,
                                const std::uint64_t* flip) noexcept {
    unsigned char carry[Rows] = {};
    for (std::size_t w = 0; w < words; ++w) {
        const std::uint64_t x = ones[w];
        std::uint64_t cur = v[w];
#pragma GCC unroll 8
        for (int r = 0; r < Rows; ++r) {
            const std::uint64_t u = cur & (x ^ flip[r]);
            std::uint64_t sum;
            carry[r] = add_with_carry(carry[r], cur, u, sum);
            cur = sum | (cur & ~u);
        }
        v[w] = cur;
    }
}

inline std::size_t count_zero_bits(std::span<const std::uint64_t> v, std::size_t bits) noexcept {
    std::size_t zeros = 0;
    std::size_t full = bits / 64;
    for (std::size_t w = 0; w < full; ++w) zeros += static_cast<std::size_t>(std::popcount(~v[w]));
    if (bits % 64 != 0) {
        zeros += static_cast<std::size_t>(std::popcount(~v[full] & low_mask(bits % 64)));
    }
    return zeros;
}

/// LCS of two binary strings of length <= 64 given as bit words
/// (bit i = symbol i).
inline unsigned lcs_binary_word(std::uint64_t x, unsigned x_len, std::uint64_t y,
                                unsigned y_len) noexcept {
    std::uint64_t v = ~std::uint64_t{0};
    for (unsigned j = 0; j < y_len; ++j) {
        const std::uint64_t match = ((y >> j) & 1u) ? x : ~x;
        const std::uint64_t u = v & match;
        v = (v + u) | (v & ~u);
    }
    return static_cast<unsigned>(std::popcount(~v & low_mask(x_len)));
}

/// Per-symbol match masks for a symbol array: row s, bit i set iff x[i] == s.
class MatchMasks {
public:
    MatchMasks(std::span<const Symbol> x, unsigned alphabet)
        : words_((x.size() + 63) / 64), alphabet_(alphabet), bits_(alphabet * words_, 0) {
        for (std::size_t i = 0; i < x.size(); ++i) {
            bits_[x[i] * words_ + (i >> 6)] |= std::uint64_t{1} << (i & 63);
        }
    }

    MatchMasks(const Sequence& x) : MatchMasks(x.symbols(), x.alphabet()) {}

    std::size_t words() const noexcept { return words_; }
    const std::uint64_t* row(Symbol s) const noexcept { return bits_.data() + s * words_; }

private:
    std::size_t words_;
    unsigned alphabet_;
    std::vector<std::uint64_t> bits_;
};

/// Final bit vector after consuming y against x's masks.
inline std::vector<std::uint64_t> run_bit_parallel(const MatchMasks& masks,
                                                   std::span<const Symbol> y) {
    std::vector<std::uint64_t> v(masks.words(), ~std::uint64_t{0});
    for (Symbol s : y) advance_row(v.data(), masks.row(s), v.size());
    return v;
}

/// row[i] = LCS(x[0..i), y) for i = 0..|x|.
inline std::vector<std::uint32_t> lcs_prefix_row(std::span<const Symbol> x,
                                                 std::span<const Symbol> y, unsigned alphabet) {
    std::vector<std::uint32_t> row(x.size() + 1, 0);
    if (x.empty() || y.empty()) return row;
    MatchMasks masks(x, alphabet);
    auto v = run_bit_parallel(masks, y);
    std::uint32_t acc = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        acc += ((v[i >> 6] >> (i & 63)) & 1u) ? 0u : 1u;
        row[i + 1] = acc;
    }
    return row;
}

// Full-table DP with traceback; the traceback takes a match whenever the
// current symbols agree, which prefers the latest index pair.
inline void witness_small(std::span<const Symbol> x, std::span<const Symbol> y,
                          std::vector<Symbol>& out) {
    const std::size_t m = x.size(), n = y.size();
    std::vector<std::uint32_t> dp((m + 1) * (n + 1), 0);
    auto at = [&](std::size_t i, std::size_t j) -> std::uint32_t& { return dp[i * (n + 1) + j]; };
    for (std::size_t i = 1; i <= m; ++i) {
        for (std::size_t j = 1; j <= n; ++j) {
            at(i, j) = x[i - 1] == y[j - 1] ? at(i - 1, j - 1) + 1
                                            : std::max(at(i - 1, j), at(i, j - 1));
        }
    }
    std::vector<Symbol> rev;
    std::size_t i = m, j = n;
    while (i > 0 && j > 0) {
        if (x[i - 1] == y[j - 1]) {
            rev.push_back(x[i - 1]);
            --i;
            --j;
        } else if (at(i - 1, j) >= at(i, j - 1)) {
            --i;
        } else {
            --j;
        }
    }
    out.insert(out.end(), rev.rbegin(), rev.rend());
}

inline constexpr std::size_t kWitnessSmallCells = std::size_t{1} << 16;

inline void witness_split(std::span<const Symbol> x, std::span<const Symbol> y, unsigned alphabet,
                          std::vector<Symbol>& out) {
    if (x.empty() || y.empty()) return;
    if (y.size() == 1) {
        for (std::size_t i = x.size(); i-- > 0;) {
            if (x[i] == y[0]) {
                out.push_back(y[0]);
                return;
            }
        }
        return;
    }
    if (x.size() * y.size() <= kWitnessSmallCells) {
        witness_small(x, y, out);
        return;
    }
    const std::size_t mid = y.size() / 2;
    auto forward = lcs_prefix_row(x, y.first(mid), alphabet);

    std::vector<Symbol> x_rev(x.rbegin(), x.rend());
    std::vector<Symbol> y_rev(y.rbegin(), y.rbegin() + static_cast<std::ptrdiff_t>(y.size() - mid));
    auto backward = lcs_prefix_row(x_rev, y_rev, alphabet);
    x_rev = {};
    y_rev = {};

    const std::size_t m = x.size();
    std::size_t split = 0;
    std::uint32_t best = 0;
    for (std::size_t k = 0; k <= m; ++k) {
        std::uint32_t total = forward[k] + backward[m - k];
        if (total >= best) {
            best = total;
            split = k;
        }
    }
    forward = {};
    backward = {};
    witness_split(x.first(split), y.first(mid), alphabet, out);
    witness_split(x.subspan(split), y.subspan(mid), alphabet, out);
}

} // namespace detail

/// Quadratic two-row dynamic program. Correctness oracle for the other paths.
inline std::size_t lcs_length_reference(const Sequence& x, const Sequence& y) {
    detail::require_same_alphabet(x, y);
    const auto xs = x.symbols();
    const auto ys = y.symbols();
    std::vector<std::uint32_t> prev(ys.size() + 1, 0), cur(ys.size() + 1, 0);
    for (std::size_t i = 1; i <= xs.size(); ++i) {
        for (std::size_t j = 1; j <= ys.size(); ++j) {
            cur[j] = xs[i - 1] == ys[j - 1] ? prev[j - 1] + 1 : std::max(prev[j], cur[j - 1]);
        }
        std::swap(prev, cur);
    }
    return prev[ys.size()];
}

/// Bit-parallel LCS length, identical to lcs_length_reference.
inline std::size_t lcs_length_fast(const Sequence& x, const Sequence& y) {
    detail::require_same_alphabet(x, y);
    // Bit vector runs along the shorter sequence.
    const Sequence& a = x.size() <= y.size() ? x : y;
    const Sequence& b = x.size() <= y.size() ? y : x;
    if (a.empty()) return 0;

    if (a.alphabet() == 2) {
        const auto a_words = a.words();
        const auto b_words = b.words();
        if (a.size() <= 64 && b.size() <= 64) {
            return detail::lcs_binary_word(a_words[0], static_cast<unsigned>(a.size()), b_words[0],
                                           static_cast<unsigned>(b.size()));
        }
        std::vector<std::uint64_t> v(a_words.size(), ~std::uint64_t{0});
        const std::size_t nb = b.size();
        auto flip_at = [&](std::size_t j) -> std::uint64_t {
            return ((b_words[j >> 6] >> (j & 63)) & 1u) ? 0 : ~std::uint64_t{0};
        };
        constexpr int kRows = 4;
        std::size_t j = 0;
        for (; j + kRows <= nb; j += kRows) {
            std::uint64_t flip[kRows];
            for (int r = 0; r < kRows; ++r) flip[r] = flip_at(j + r);
            detail::advance_rows_binary<kRows>(v.data(), a_words.data(), v.size(), flip);
        }
        for (; j < nb; ++j) {
            const std::uint64_t flip = flip_at(j);
            detail::advance_rows_binary<1>(v.data(), a_words.data(), v.size(), &flip);
        }
        return detail::count_zero_bits(v, a.size());
    }

    detail::MatchMasks masks(a);
    const auto bs = b.symbols();
    if (masks.words() == 1) {
        std::uint64_t v = ~std::uint64_t{0};
        for (Symbol s : bs) {
            const std::uint64_t u = v & masks.row(s)[0];
            v = (v + u) | (v & ~u);
        }
        return static_cast<std::size_t>(std::popcount(~v & detail::low_mask(a.size())));
    }
    auto v = detail::run_bit_parallel(masks, bs);
    return detail::count_zero_bits(v, a.size());
}

inline std::size_t lcs_length(const Sequence& x, const Sequence& y) { return lcs_length_fast(x, y); }

/// Greedy left-to-right scan: is `w` a subsequence of `v`?
inline bool is_subsequence(const Sequence& w, const Sequence& v) {
    detail::require_same_alphabet(w, v);
    std::size_t k = 0;
    for (std::size_t i = 0; i < v.size() && k < w.size(); ++i) {
        if (v[i] == w[k]) ++k;
    }
    return k == w.size();
}

/// One maximal common subsequence, extracted in linear memory.
inline Sequence lcs_witness(const Sequence& x, const Sequence& y) {
    detail::require_same_alphabet(x, y);
    const auto xs = x.symbols();
    const auto ys = y.symbols();
    std::vector<Symbol> out;
    out.reserve(std::min(xs.size(), ys.size()));
    detail::witness_split(xs, ys, x.alphabet(), out);
    return Sequence(out, x.alphabet());
}

} // namespace delcap
