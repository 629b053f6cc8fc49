#pragma once
// Packed sequence over a small alphabet. Symbols are stored at the smallest
// power-of-two bit width that holds alphabet-1 (1 bit for binary), so a
// symbol never straddles a 64-bit word. Symbol i sits at bit offset
// i*width of the packed stream.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace delcap {

using Symbol = std::uint8_t;

inline constexpr unsigned kMaxAlphabet = 256;

/// Reverses the order of the low `n` bits of `x`; higher bits are dropped.
constexpr std::uint64_t reverse_low_bits(std::uint64_t x, unsigned n) noexcept {
    std::uint64_t r = 0;
    for (unsigned i = 0; i < n; ++i) {
        r = (r << 1) | ((x >> i) & 1u);
    }
    return r;
}

class Sequence {
public:
    explicit Sequence(unsigned alphabet = 2) : alphabet_(alphabet), width_(width_for(alphabet)) {}

    Sequence(std::span<const Symbol> symbols, unsigned alphabet) : Sequence(alphabet) {
        reserve(symbols.size());
        for (Symbol s : symbols) push_back(s);
    }

    /// Parses '0'-'9' then 'a'-'z' as symbol indices.
    static Sequence from_string(std::string_view text, unsigned alphabet = 2) {
        Sequence s(alphabet);
        s.reserve(text.size());
        for (char c : text) {
            int v = -1;
            if (c >= '0' && c <= '9') v = c - '0';
            else if (c >= 'a' && c <= 'z') v = c - 'a' + 10;
            if (v < 0 || static_cast<unsigned>(v) >= alphabet) {
                throw std::invalid_argument(std::string("symbol '") + c +
                                            "' outside alphabet of size " +
                                            std::to_string(alphabet));
            }
            s.push_back(static_cast<Symbol>(v));
        }
        return s;
    }

    /// Binary string of length n whose lexicographic rank is `index`
    /// (first symbol is the most significant bit).
    static Sequence from_index(std::uint64_t index, unsigned n) {
        if (n > 64) throw std::invalid_argument("from_index: length above 64");
        Sequence s(2);
        s.length_ = n;
        s.words_.assign(n == 0 ? 0 : 1, 0);
        if (n > 0) s.words_[0] = reverse_low_bits(index, n);
        return s;
    }

    /// Adopts packed binary words (bit i = symbol i); bits past n are cleared.
    static Sequence from_binary_words(std::vector<std::uint64_t> words, std::size_t n) {
        if (words.size() != (n + 63) / 64) {
            throw std::invalid_argument("from_binary_words: word count does not match length");
        }
        Sequence s(2);
        s.length_ = n;
        s.words_ = std::move(words);
        if (n % 64 != 0) s.words_.back() &= (std::uint64_t{1} << (n % 64)) - 1;
        return s;
    }

    std::size_t size() const noexcept { return length_; }
    bool empty() const noexcept { return length_ == 0; }
    unsigned alphabet() const noexcept { return alphabet_; }
    unsigned symbol_width() const noexcept { return width_; }

    Symbol operator[](std::size_t i) const noexcept {
        const std::size_t bit = i * width_;
        return static_cast<Symbol>((words_[bit >> 6] >> (bit & 63)) & symbol_mask());
    }

    Symbol at(std::size_t i) const {
        if (i >= length_) throw std::out_of_range("Sequence::at");
        return (*this)[i];
    }

    void reserve(std::size_t n) { words_.reserve((n * width_ + 63) / 64); }

    void push_back(Symbol s) {
        if (s >= alphabet_) throw std::invalid_argument("symbol outside alphabet");
        const std::size_t bit = length_ * width_;
        if ((bit >> 6) >= words_.size()) words_.push_back(0);
        words_[bit >> 6] |= static_cast<std::uint64_t>(s) << (bit & 63);
        ++length_;
    }

    std::vector<Symbol> symbols() const {
        std::vector<Symbol> out(length_);
        for (std::size_t i = 0; i < length_; ++i) out[i] = (*this)[i];
        return out;
    }

    std::string to_string() const {
        std::string out(length_, '0');
        for (std::size_t i = 0; i < length_; ++i) {
            Symbol v = (*this)[i];
            out[i] = v < 10 ? static_cast<char>('0' + v) : static_cast<char>('a' + v - 10);
        }
        return out;
    }

    /// Inverse of from_index; binary sequences of length <= 64 only.
    std::uint64_t to_index() const {
        if (alphabet_ != 2 || length_ > 64) {
            throw std::invalid_argument("to_index: needs a binary sequence of length <= 64");
        }
        return length_ == 0 ? 0 : reverse_low_bits(words_[0], static_cast<unsigned>(length_));
    }

    /// Packed storage; bits past size()*symbol_width() are zero.
    std::span<const std::uint64_t> words() const noexcept { return words_; }

    Sequence subsequence_without(std::span<const std::size_t> deleted_sorted) const {
        Sequence out(alphabet_);
        out.reserve(length_);
        std::size_t k = 0;
        for (std::size_t i = 0; i < length_; ++i) {
            if (k < deleted_sorted.size() && deleted_sorted[k] == i) {
                ++k;
                continue;
            }
            out.push_back((*this)[i]);
        }
        return out;
    }

    friend bool operator==(const Sequence& a, const Sequence& b) {
        return a.alphabet_ == b.alphabet_ && a.length_ == b.length_ && a.words_ == b.words_;
    }

    /// Lexicographic on symbols; shorter prefix first.
    friend bool operator<(const Sequence& a, const Sequence& b) {
        const std::size_t n = std::min(a.length_, b.length_);
        for (std::size_t i = 0; i < n; ++i) {
            if (a[i] != b[i]) return a[i] < b[i];
        }
        return a.length_ < b.length_;
    }

private:
    static unsigned width_for(unsigned alphabet) {
        if (alphabet < 2 || alphabet > kMaxAlphabet) {
            throw std::invalid_argument("alphabet size must lie in [2, 256]");
        }
        unsigned bits = static_cast<unsigned>(std::bit_width(alphabet - 1));
        return std::bit_ceil(bits);
    }

    std::uint64_t symbol_mask() const noexcept { return (std::uint64_t{1} << width_) - 1; }

    std::size_t length_ = 0;
    unsigned alphabet_;
    unsigned width_;
    std::vector<std::uint64_t> words_;
};

} // namespace delcap
