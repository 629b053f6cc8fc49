#pragma once
// JSON and CSV forms of the toolkit's reports. Reals are written in shortest
// round-trip form, so a value parsed back from either format compares equal
// to the one written, and the two formats carry identical numbers.

#include <charconv>
#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "delcap/codebook.hpp"
#include "delcap/core_math.hpp"
#include "delcap/gamma.hpp"
#include "delcap/graph.hpp"

namespace delcap::io {

using json = nlohmann::ordered_json;

class parse_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline std::string format_real(double x) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, res.ptr);
}

template <class T>
T parse_number(std::string_view field, const char* what) {
    T value{};
    const char* end = field.data() + field.size();
    auto res = std::from_chars(field.data(), end, value);
    if (res.ec != std::errc{} || res.ptr != end) {
        throw parse_error(std::string("csv: malformed ") + what + " '" + std::string(field) + "'");
    }
    return value;
}

inline std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> out;
    std::string cell;
    std::istringstream ss(line);
    while (std::getline(ss, cell, ',')) out.push_back(cell);
    if (!line.empty() && line.back() == ',') out.emplace_back();
    return out;
}

/// Reads header + data rows, stripping CR; returns the data rows split.
inline std::vector<std::vector<std::string>> read_csv_rows(std::istream& is,
                                                           std::string_view expected_header) {
    std::string line;
    if (!std::getline(is, line)) throw parse_error("csv: missing header");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != expected_header) {
        throw parse_error("csv: header '" + line + "' does not match '" +
                          std::string(expected_header) + "'");
    }
    std::vector<std::vector<std::string>> rows;
    while (std::getline(is, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        rows.push_back(split_csv_line(line));
    }
    return rows;
}

// ---------------------------------------------------------------------------
// GammaEstimate

inline constexpr std::string_view kGammaCsvHeader =
    "q,n,pairs,mean,min,max,stddev,mean_normalized,ci,confidence,seed";

inline json to_json(const GammaEstimate& e) {
    json j;
    j["q"] = e.q ? json(*e.q) : json("uniform");
    j["n"] = e.n;
    j["pairs"] = e.num_pairs;
    j["mean"] = e.mean_lcs;
    j["min"] = e.min_lcs;
    j["max"] = e.max_lcs;
    j["stddev"] = e.stddev;
    j["mean_normalized"] = e.mean_normalized;
    j["ci"] = e.ci_halfwidth;
    j["confidence"] = e.confidence;
    j["seed"] = e.master_seed;
    return j;
}

inline GammaEstimate gamma_from_json(const json& j) {
    try {
        GammaEstimate e;
        const auto& q = j.at("q");
        if (q.is_string()) {
            if (q.get<std::string>() != "uniform") throw parse_error("json: q must be a number or \"uniform\"");
        } else {
            e.q = q.get<double>();
        }
        e.n = j.at("n").get<std::size_t>();
        e.num_pairs = j.at("pairs").get<std::size_t>();
        e.mean_lcs = j.at("mean").get<double>();
        e.min_lcs = j.at("min").get<std::size_t>();
        e.max_lcs = j.at("max").get<std::size_t>();
        e.stddev = j.at("stddev").get<double>();
        e.mean_normalized = j.at("mean_normalized").get<double>();
        e.ci_halfwidth = j.at("ci").get<double>();
        e.confidence = j.at("confidence").get<double>();
        e.master_seed = j.at("seed").get<std::uint64_t>();
        return e;
    } catch (const nlohmann::json::exception& ex) {
        throw parse_error(std::string("json: ") + ex.what());
    }
}

inline void write_gamma_csv_row(std::ostream& os, const GammaEstimate& e) {
    os << (e.q ? format_real(*e.q) : std::string("uniform")) << ',' << e.n << ',' << e.num_pairs
       << ',' << format_real(e.mean_lcs) << ',' << e.min_lcs << ',' << e.max_lcs << ','
       << format_real(e.stddev) << ',' << format_real(e.mean_normalized) << ','
       << format_real(e.ci_halfwidth) << ',' << format_real(e.confidence) << ',' << e.master_seed
       << '\n';
}

inline void write_gamma_csv(std::ostream& os, std::span<const GammaEstimate> rows) {
    os << kGammaCsvHeader << '\n';
    for (const auto& e : rows) write_gamma_csv_row(os, e);
}

inline std::vector<GammaEstimate> read_gamma_csv(std::istream& is) {
    std::vector<GammaEstimate> out;
    for (const auto& f : read_csv_rows(is, kGammaCsvHeader)) {
        if (f.size() != 11) throw parse_error("csv: expected 11 fields per gamma row");
        GammaEstimate e;
        if (f[0] != "uniform") e.q = parse_number<double>(f[0], "q");
        e.n = parse_number<std::size_t>(f[1], "n");
        e.num_pairs = parse_number<std::size_t>(f[2], "pairs");
        e.mean_lcs = parse_number<double>(f[3], "mean");
        e.min_lcs = parse_number<std::size_t>(f[4], "min");
        e.max_lcs = parse_number<std::size_t>(f[5], "max");
        e.stddev = parse_number<double>(f[6], "stddev");
        e.mean_normalized = parse_number<double>(f[7], "mean_normalized");
        e.ci_halfwidth = parse_number<double>(f[8], "ci");
        e.confidence = parse_number<double>(f[9], "confidence");
        e.master_seed = parse_number<std::uint64_t>(f[10], "seed");
        out.push_back(e);
    }
    return out;
}

// ---------------------------------------------------------------------------
// ThresholdReport

inline constexpr std::string_view kThresholdCsvHeader =
    "thm1_threshold,thm2_threshold_proven,thm2_threshold_conjectured,gamma_upper,gamma_lower,"
    "gamma_estimate,gamma_estimate_alternate,thm2_threshold_alternate";

inline json to_json(const ThresholdReport& r) {
    json j;
    j["thm1_threshold"] = r.thm1_threshold;
    j["thm2_threshold_proven"] = r.thm2_threshold_proven;
    j["thm2_threshold_conjectured"] = r.thm2_threshold_conjectured;
    j["gamma_upper"] = r.gamma_upper;
    j["gamma_lower"] = r.gamma_lower;
    j["gamma_estimate"] = r.gamma_estimate;
    j["gamma_estimate_alternate"] = r.gamma_estimate_alternate;
    j["thm2_threshold_alternate"] = r.thm2_threshold_alternate;
    return j;
}

inline ThresholdReport thresholds_from_json(const json& j) {
    try {
        ThresholdReport r;
        r.thm1_threshold = j.at("thm1_threshold").get<double>();
        r.thm2_threshold_proven = j.at("thm2_threshold_proven").get<double>();
        r.thm2_threshold_conjectured = j.at("thm2_threshold_conjectured").get<double>();
        r.gamma_upper = j.at("gamma_upper").get<double>();
        r.gamma_lower = j.at("gamma_lower").get<double>();
        r.gamma_estimate = j.at("gamma_estimate").get<double>();
        r.gamma_estimate_alternate = j.at("gamma_estimate_alternate").get<double>();
        r.thm2_threshold_alternate = j.at("thm2_threshold_alternate").get<double>();
        return r;
    } catch (const nlohmann::json::exception& ex) {
        throw parse_error(std::string("json: ") + ex.what());
    }
}

inline void write_thresholds_csv(std::ostream& os, const ThresholdReport& r) {
    os << kThresholdCsvHeader << '\n'
       << format_real(r.thm1_threshold) << ',' << format_real(r.thm2_threshold_proven) << ','
       << format_real(r.thm2_threshold_conjectured) << ',' << format_real(r.gamma_upper) << ','
       << format_real(r.gamma_lower) << ',' << format_real(r.gamma_estimate) << ','
       << format_real(r.gamma_estimate_alternate) << ',' << format_real(r.thm2_threshold_alternate)
       << '\n';
}

inline ThresholdReport read_thresholds_csv(std::istream& is) {
    const auto rows = read_csv_rows(is, kThresholdCsvHeader);
    if (rows.size() != 1 || rows[0].size() != 8) throw parse_error("csv: expected one 8-field threshold row");
    const auto& f = rows[0];
    ThresholdReport r;
    r.thm1_threshold = parse_number<double>(f[0], "thm1_threshold");
    r.thm2_threshold_proven = parse_number<double>(f[1], "thm2_threshold_proven");
    r.thm2_threshold_conjectured = parse_number<double>(f[2], "thm2_threshold_conjectured");
    r.gamma_upper = parse_number<double>(f[3], "gamma_upper");
    r.gamma_lower = parse_number<double>(f[4], "gamma_lower");
    r.gamma_estimate = parse_number<double>(f[5], "gamma_estimate");
    r.gamma_estimate_alternate = parse_number<double>(f[6], "gamma_estimate_alternate");
    r.thm2_threshold_alternate = parse_number<double>(f[7], "thm2_threshold_alternate");
    return r;
}

// ---------------------------------------------------------------------------
// Graph statistics, validity, decode, attack

inline json to_json(const GraphStats& s) {
    json j;
    j["n"] = s.n;
    j["D"] = s.deletions;
    j["vertices"] = s.vertices;
    j["edges"] = s.edges;
    j["min_degree"] = s.min_degree;
    j["mean_degree"] = s.mean_degree;
    j["max_degree"] = s.max_degree;
    j["density"] = s.density;
    j["turan_bound"] = s.turan_bound;
    j["turan_bound_average_degree"] = s.turan_bound_average_degree;
    j["caro_wei_bound"] = s.caro_wei_bound;
    j["all_zeros_degree"] = s.all_zeros_degree;
    json hist = json::array();
    for (const auto& [degree, count] : s.degree_histogram) hist.push_back({degree, count});
    j["degree_histogram"] = std::move(hist);
    return j;
}

inline GraphStats graph_stats_from_json(const json& j) {
    try {
        GraphStats s;
        s.n = j.at("n").get<unsigned>();
        s.deletions = j.at("D").get<unsigned>();
        s.vertices = j.at("vertices").get<std::uint64_t>();
        s.edges = j.at("edges").get<std::uint64_t>();
        s.min_degree = j.at("min_degree").get<std::uint64_t>();
        s.mean_degree = j.at("mean_degree").get<double>();
        s.max_degree = j.at("max_degree").get<std::uint64_t>();
        s.density = j.at("density").get<double>();
        s.turan_bound = j.at("turan_bound").get<double>();
        s.turan_bound_average_degree = j.at("turan_bound_average_degree").get<double>();
        s.caro_wei_bound = j.at("caro_wei_bound").get<double>();
        s.all_zeros_degree = j.at("all_zeros_degree").get<std::uint64_t>();
        for (const auto& entry : j.at("degree_histogram")) {
            s.degree_histogram[entry.at(0).get<std::uint64_t>()] = entry.at(1).get<std::uint64_t>();
        }
        return s;
    } catch (const nlohmann::json::exception& ex) {
        throw parse_error(std::string("json: ") + ex.what());
    }
}

inline constexpr std::string_view kDegreeCsvHeader = "degree,vertices";

inline void write_degree_histogram_csv(std::ostream& os, const GraphStats& s) {
    os << kDegreeCsvHeader << '\n';
    for (const auto& [degree, count] : s.degree_histogram) os << degree << ',' << count << '\n';
}

inline json to_json(const ValidityReport& r) {
    json j;
    j["n"] = r.n;
    j["D"] = r.deletions;
    j["count"] = r.count;
    j["valid"] = r.valid;
    if (r.violating_pair) {
        j["violating_pair"] = {r.violating_pair->first.to_string(), r.violating_pair->second.to_string()};
        j["violating_lcs"] = *r.violating_lcs;
    } else {
        j["violating_pair"] = nullptr;
        j["violating_lcs"] = nullptr;
    }
    return j;
}

inline ValidityReport validity_from_json(const json& j) {
    try {
        ValidityReport r;
        r.n = j.at("n").get<unsigned>();
        r.deletions = j.at("D").get<unsigned>();
        r.count = j.at("count").get<std::size_t>();
        r.valid = j.at("valid").get<bool>();
        if (!j.at("violating_pair").is_null()) {
            r.violating_pair.emplace(Sequence::from_string(j["violating_pair"].at(0).get<std::string>(), 2),
                                     Sequence::from_string(j["violating_pair"].at(1).get<std::string>(), 2));
            r.violating_lcs = j.at("violating_lcs").get<std::size_t>();
        }
        return r;
    } catch (const nlohmann::json::exception& ex) {
        throw parse_error(std::string("json: ") + ex.what());
    }
}

inline const char* to_string(DecodeStatus s) {
    switch (s) {
    case DecodeStatus::Decoded: return "decoded";
    case DecodeStatus::NoCandidate: return "no-candidate";
    case DecodeStatus::Ambiguous: return "ambiguous";
    }
    return "unknown";
}

inline json to_json(const DecodeResult& r, const Codebook& cb, const Sequence& received) {
    json j;
    j["received"] = received.to_string();
    j["status"] = to_string(r.status);
    j["codeword"] = r.codeword ? json(r.codeword->to_string()) : json(nullptr);
    json cands = json::array();
    for (auto i : r.candidates) cands.push_back(cb[i].to_string());
    j["candidates"] = std::move(cands);
    return j;
}

inline json to_json(const std::optional<Attack>& a, const Codebook& cb) {
    json j;
    j["n"] = cb.n();
    j["D"] = cb.deletions();
    j["found"] = a.has_value();
    if (a) {
        j["first"] = a->first.to_string();
        j["second"] = a->second.to_string();
        j["received"] = a->received.to_string();
        j["deletions_first"] = a->deletions_first;
        j["deletions_second"] = a->deletions_second;
    }
    return j;
}

} // namespace delcap::io
