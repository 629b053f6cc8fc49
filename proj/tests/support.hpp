#pragma once
// Small helpers shared by the test binaries.

#include <cstdint>
#include <random>
#include <vector>

#include "delcap/sequence.hpp"

namespace support {

inline std::vector<unsigned> to_vec(const delcap::Sequence& s) {
    std::vector<unsigned> out;
    out.reserve(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) out.push_back(s[i]);
    return out;
}

inline delcap::Sequence from_vec(const std::vector<unsigned>& v, unsigned alphabet) {
    delcap::Sequence s(alphabet);
    for (unsigned x : v) s.push_back(static_cast<delcap::Symbol>(x));
    return s;
}

/// Uniform random sequence from a generator unrelated to the library's RNG.
inline delcap::Sequence random_sequence(std::mt19937_64& gen, std::size_t len, unsigned alphabet) {
    std::uniform_int_distribution<unsigned> dist(0, alphabet - 1);
    delcap::Sequence s(alphabet);
    for (std::size_t i = 0; i < len; ++i) s.push_back(static_cast<delcap::Symbol>(dist(gen)));
    return s;
}

/// Binary sequence with long runs: each symbol repeats with probability `stay`.
inline delcap::Sequence sticky_sequence(std::mt19937_64& gen, std::size_t len, double stay) {
    std::bernoulli_distribution keep(stay);
    delcap::Sequence s(2);
    unsigned bit = static_cast<unsigned>(gen() & 1u);
    for (std::size_t i = 0; i < len; ++i) {
        if (i > 0 && !keep(gen)) bit ^= 1u;
        s.push_back(static_cast<delcap::Symbol>(bit));
    }
    return s;
}

} // namespace support
