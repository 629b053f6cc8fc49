#pragma once
// Closed-form quantities for the adversarial deletion channel: binary
// entropy, the counting-argument rate exponent and its root, the LCS-based
// threshold, supersequence counts, and independent-set lower bounds.
//
// Every function here is pure.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace delcap {

using BigInt = boost::multiprecision::cpp_int;

// Bounds on the uniform-binary LCS constant (Lueker) and the two point
// estimates quoted alongside them. The toolkit exposes both estimates and
// does not pick one.
inline constexpr double kGammaLower = 0.788071;
inline constexpr double kGammaUpper = 0.826820;
inline constexpr double kGammaEstimate = 0.8182;
inline constexpr double kGammaEstimateAlternate = 0.8128;

inline constexpr double kThresholdBracketLow = 1e-6;
// The exponent is minimised at p = sqrt(2) - 1 and rises after it, so the
// bracket stops there; the root is unique below it.
inline constexpr double kThresholdBracketHigh = 0.41421356237309503;

inline double binary_entropy(double p) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw std::domain_error("binary_entropy: p must lie in [0, 1]");
    }
    if (p == 0.0 || p == 1.0) return 0.0;
    return -p * std::log2(p) - (1.0 - p) * std::log2(1.0 - p);
}

/// Rate exponent 1 - 2H(p) + p of the greedy bipartite construction.
/// Positive exponent means the greedy codebook has positive rate.
inline double thm1_exponent(double p) {
    if (!(p >= 0.0 && p < 0.5)) {
        throw std::domain_error("thm1_exponent: p must lie in [0, 1/2)");
    }
    return 1.0 - 2.0 * binary_entropy(p) + p;
}

namespace detail {

// The exponent must be strictly decreasing on the bisection bracket;
// checked once per process on a fine grid.
inline bool exponent_monotone_on_bracket() {
    static const bool ok = [] {
        constexpr int steps = 4096;
        double prev = thm1_exponent(kThresholdBracketLow);
        for (int i = 1; i <= steps; ++i) {
            double p = kThresholdBracketLow +
                       (kThresholdBracketHigh - kThresholdBracketLow) * i / steps;
            double cur = thm1_exponent(p);
            if (!(cur < prev)) return false;
            prev = cur;
        }
        return true;
    }();
    return ok;
}

} // namespace detail

/// Root of thm1_exponent on (0, sqrt(2) - 1) by bisection, to within `tolerance`.
inline double thm1_threshold(double tolerance = 1e-12) {
    if (!(tolerance > 0.0)) {
        throw std::domain_error("thm1_threshold: tolerance must be positive");
    }
    if (!detail::exponent_monotone_on_bracket()) {
        throw std::logic_error("thm1_threshold: exponent not monotone on bracket");
    }
    double lo = kThresholdBracketLow;
    double hi = kThresholdBracketHigh;
    if (!(thm1_exponent(lo) > 0.0 && thm1_exponent(hi) < 0.0)) {
        throw std::logic_error("thm1_threshold: bracket does not contain a sign change");
    }
    while (hi - lo > tolerance) {
        double mid = 0.5 * (lo + hi);
        if (thm1_exponent(mid) > 0.0) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

inline double thm2_threshold(double gamma) {
    if (!(gamma > 0.0 && gamma <= 1.0)) {
        throw std::domain_error("thm2_threshold: gamma must lie in (0, 1]");
    }
    return 1.0 - gamma;
}

inline BigInt binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    BigInt r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

/// Number of length-`super_len` strings over `alphabet` symbols that contain
/// a fixed length-`sub_len` string as a subsequence:
///   sum_{i=0}^{super_len-sub_len} C(super_len, i) (alphabet-1)^i.
/// The count does not depend on which sub-string is fixed.
inline BigInt count_supersequences(std::uint64_t sub_len, std::uint64_t super_len,
                                   std::uint64_t alphabet) {
    if (sub_len > super_len) {
        throw std::invalid_argument("count_supersequences: sub_len exceeds super_len");
    }
    if (alphabet < 2) {
        throw std::invalid_argument("count_supersequences: alphabet must be at least 2");
    }
    BigInt total = 0;
    BigInt power = 1;
    BigInt choose = 1; // C(super_len, i)
    for (std::uint64_t i = 0; i <= super_len - sub_len; ++i) {
        total += choose * power;
        power *= alphabet - 1;
        choose *= super_len - i;
        choose /= i + 1;
    }
    return total;
}

/// log2 of count_supersequences, in floating point, for lengths where the
/// exact integer is impractical.
inline double log2_count_supersequences(std::uint64_t sub_len, std::uint64_t super_len,
                                        std::uint64_t alphabet) {
    if (sub_len > super_len) {
        throw std::invalid_argument("log2_count_supersequences: sub_len exceeds super_len");
    }
    if (alphabet < 2) {
        throw std::invalid_argument("log2_count_supersequences: alphabet must be at least 2");
    }
    const double n = static_cast<double>(super_len);
    const double log2_km1 = std::log2(static_cast<double>(alphabet - 1));
    auto term = [&](std::uint64_t i) {
        double di = static_cast<double>(i);
        return (std::lgamma(n + 1) - std::lgamma(di + 1) - std::lgamma(n - di + 1)) /
                   std::log(2.0) +
               di * log2_km1;
    };
    double peak = -INFINITY;
    for (std::uint64_t i = 0; i <= super_len - sub_len; ++i) peak = std::max(peak, term(i));
    double acc = 0.0;
    for (std::uint64_t i = 0; i <= super_len - sub_len; ++i) acc += std::exp2(term(i) - peak);
    return peak + std::log2(acc);
}

/// Turan-type bound j^2/(2k+1) on the independence number of a graph with
/// j vertices and k edges, clamped to j so the edgeless case reports j.
inline double turan_bound(std::uint64_t num_vertices, std::uint64_t num_edges) {
    const double j = static_cast<double>(num_vertices);
    const double max_edges = j * (j - 1.0) / 2.0;
    if (static_cast<double>(num_edges) > max_edges) {
        throw std::invalid_argument("turan_bound: more edges than vertex pairs");
    }
    const double raw = j * j / (2.0 * static_cast<double>(num_edges) + 1.0);
    return std::min(j, raw);
}

/// Turan's theorem in average-degree form, j^2/(2k+j) = j/(d_avg+1).
/// Unlike the 2k+1 form above (which reports 4/3 for a single edge), this
/// never exceeds the independence number and never exceeds Caro-Wei.
inline double turan_bound_average_degree(std::uint64_t num_vertices, std::uint64_t num_edges) {
    const double j = static_cast<double>(num_vertices);
    if (static_cast<double>(num_edges) > j * (j - 1.0) / 2.0) {
        throw std::invalid_argument("turan_bound: more edges than vertex pairs");
    }
    if (num_vertices == 0) return 0.0;
    return j * j / (2.0 * static_cast<double>(num_edges) + j);
}

/// Caro-Wei bound: sum over vertices of 1/(d(u)+1).
inline double caro_wei_bound(std::span<const std::uint64_t> degrees) {
    double sum = 0.0;
    for (auto d : degrees) {
        if (d >= degrees.size()) {
            throw std::invalid_argument("caro_wei_bound: degree must be below vertex count");
        }
        sum += 1.0 / (static_cast<double>(d) + 1.0);
    }
    return sum;
}

/// Base-2 Azuma-Hoeffding exponent f(eps) with
///   Pr[L >= E[L] + eps n] <= 2^{-f(eps) n},
/// for a Doob martingale whose per-coordinate differences are bounded by
/// `step_bound` (2 for uniform strings).
inline double azuma_tail_exponent(double epsilon, double step_bound = 2.0) {
    if (!(epsilon > 0.0) || !(step_bound > 0.0)) {
        throw std::domain_error("azuma_tail_exponent: epsilon and step_bound must be positive");
    }
    return epsilon * epsilon / (2.0 * step_bound * step_bound * std::log(2.0));
}

struct ThresholdReport {
    double thm1_threshold = 0.0;
    double thm2_threshold_proven = 0.0;
    double thm2_threshold_conjectured = 0.0;
    double gamma_upper = kGammaUpper;
    double gamma_lower = kGammaLower;
    double gamma_estimate = kGammaEstimate;
    // Second published point estimate, reported next to the first.
    double gamma_estimate_alternate = kGammaEstimateAlternate;
    double thm2_threshold_alternate = 0.0;

    bool invariants_hold() const {
        return 0.0 < thm1_threshold && thm1_threshold < thm2_threshold_proven &&
               thm2_threshold_proven < 0.5 && gamma_lower <= gamma_estimate &&
               gamma_estimate <= gamma_upper && gamma_lower <= gamma_estimate_alternate &&
               gamma_estimate_alternate <= gamma_upper;
    }
};

inline ThresholdReport make_threshold_report(double gamma_estimate = kGammaEstimate,
                                             double tolerance = 1e-12) {
    if (!(gamma_estimate >= kGammaLower && gamma_estimate <= kGammaUpper)) {
        throw std::domain_error("gamma estimate must lie within the known bounds [" +
                                std::to_string(kGammaLower) + ", " +
                                std::to_string(kGammaUpper) + "]");
    }
    ThresholdReport r;
    r.thm1_threshold = thm1_threshold(tolerance);
    r.thm2_threshold_proven = thm2_threshold(kGammaUpper);
    r.gamma_estimate = gamma_estimate;
    r.thm2_threshold_conjectured = thm2_threshold(gamma_estimate);
    r.thm2_threshold_alternate = thm2_threshold(kGammaEstimateAlternate);
    return r;
}

} // namespace delcap
