#pragma once
// Command-line front end. run_cli() does all the work and reports through
// the given streams, so tests can drive it in-process.
//
// Exit codes:
//   0  success / PASS
//   1  internal or I/O failure
//   2  invalid arguments or malformed input
//   3  request exceeds a resource limit
//   4  codebook-verify FAIL, or attack found a confusable pair
//   5  decode found no candidate or several

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "delcap/delcap.hpp"

namespace delcap::cli {

enum ExitCode : int {
    kOk = 0,
    kInternal = 1,
    kValidation = 2,
    kResource = 3,
    kCheckFailed = 4,
    kDecodeFailed = 5,
};

inline constexpr const char* kSeedEnv = "DELCAP_SEED";

class io_failure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class Format { Json, Csv, Text };

struct RunConfig {
    std::uint64_t seed = 1;
    unsigned workers = 0;
    Format format = Format::Json;
    std::string output_path;
};

inline std::uint64_t default_seed() {
    const char* env = std::getenv(kSeedEnv);
    if (env == nullptr || *env == '\0') return 1;
    std::uint64_t v = 0;
    std::string_view s(env);
    auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc{} || res.ptr != s.data() + s.size()) {
        throw std::invalid_argument(std::string(kSeedEnv) + " must be an unsigned 64-bit integer");
    }
    return v;
}

/// Writes `content` to `path` via a sibling temporary, so a failed run never
/// leaves a partial file behind.
inline void write_file_atomically(const std::string& path, const std::string& content) {
    namespace fs = std::filesystem;
    const fs::path target(path);
    fs::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f) throw io_failure("cannot open '" + tmp.string() + "' for writing");
        f << content;
        f.flush();
        if (!f) throw io_failure("write to '" + tmp.string() + "' failed");
    }
    std::error_code ec;
    fs::rename(tmp, target, ec);
    if (ec) {
        fs::remove(tmp);
        throw io_failure("cannot move output into '" + path + "': " + ec.message());
    }
}

inline Codebook load_codebook(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw io_failure("cannot open codebook file '" + path + "'");
    return read_codebook(f);
}

inline std::optional<double> parse_q(const std::string& text) {
    if (text == "uniform") return std::nullopt;
    double q = 0.0;
    auto res = std::from_chars(text.data(), text.data() + text.size(), q);
    if (res.ec != std::errc{} || res.ptr != text.data() + text.size()) {
        throw std::invalid_argument("--q: expected a probability or 'uniform', got '" + text + "'");
    }
    if (!(q > 0.0 && q < 1.0)) throw std::invalid_argument("--q must lie in (0, 1)");
    return q;
}

inline SourceSpec source_for(const std::optional<double>& q, unsigned alphabet) {
    if (q) {
        if (alphabet != 2) throw std::invalid_argument("--alphabet applies only to the uniform source");
        return SourceSpec::markov(*q);
    }
    return SourceSpec::uniform(alphabet);
}

inline GreedyOrder parse_order(const std::string& s) {
    if (s == "lex") return GreedyOrder::Lexicographic;
    if (s == "min-degree") return GreedyOrder::MinDegreeFirst;
    if (s == "random") return GreedyOrder::SeededRandom;
    throw std::invalid_argument("--order must be lex, min-degree or random");
}

inline const char* order_name(GreedyOrder o) {
    switch (o) {
    case GreedyOrder::Lexicographic: return "lex";
    case GreedyOrder::MinDegreeFirst: return "min-degree";
    case GreedyOrder::SeededRandom: return "random";
    }
    return "lex";
}

inline void text_gamma(std::ostream& os, const GammaEstimate& e) {
    os << "source           " << (e.q ? "markov q=" + io::format_real(*e.q) : std::string("uniform"))
       << "\nn                " << e.n << "\npairs            " << e.num_pairs
       << "\nmean LCS         " << io::format_real(e.mean_lcs) << "\nmin / max        " << e.min_lcs
       << " / " << e.max_lcs << "\nstddev           " << io::format_real(e.stddev)
       << "\nmean / n         " << io::format_real(e.mean_normalized) << "\nci half-width    "
       << io::format_real(e.ci_halfwidth) << " (" << io::format_real(e.confidence * 100)
       << "% normal approx.)\nseed             " << e.master_seed << '\n';
}

struct Options {
    // thresholds
    double gamma_estimate = kGammaEstimate;
    // lcs
    std::string x, y;
    unsigned alphabet = 2;
    bool witness = false;
    // gamma / gamma-sweep
    std::string q = "0.95";
    std::size_t n_len = kDeskLength;
    std::size_t pairs = kDeskPairs;
    double confidence = kDefaultConfidence;
    std::vector<std::string> q_list;
    std::vector<std::size_t> n_list;
    // graph / codebook
    unsigned n = 8;
    unsigned deletions = 1;
    std::size_t samples = 0;
    std::string method = "greedy";
    std::string order = "min-degree";
    double stay = 0.9;
    double c = 0.1;
    std::string codebook_out;
    std::string codebook_in;
    std::string received;
    unsigned max_graph_n = GraphLimits{}.max_n;
    unsigned max_exact_n = ExactLimits{}.max_n;
    std::uint64_t node_budget = 0;
    std::uint64_t time_budget_ms = 0;
};

// Each command renders into `out` and returns its exit code.

inline int cmd_thresholds(const RunConfig& cfg, const Options& o, std::ostream& out) {
    const ThresholdReport r = make_threshold_report(o.gamma_estimate);
    switch (cfg.format) {
    case Format::Json: out << io::to_json(r).dump(2) << '\n'; break;
    case Format::Csv: io::write_thresholds_csv(out, r); break;
    case Format::Text:
        out << "thm1 threshold (greedy/entropy)       " << io::format_real(r.thm1_threshold)
            << "\nthm2 threshold, proven (1 - upper)    " << io::format_real(r.thm2_threshold_proven)
            << "\nthm2 threshold at gamma estimate      " << io::format_real(r.thm2_threshold_conjectured)
            << "\nthm2 threshold at alternate estimate  " << io::format_real(r.thm2_threshold_alternate)
            << "\ngamma bounds                          [" << io::format_real(r.gamma_lower) << ", "
            << io::format_real(r.gamma_upper) << "]\ngamma estimates                       "
            << io::format_real(r.gamma_estimate) << ", " << io::format_real(r.gamma_estimate_alternate)
            << '\n';
        break;
    }
    return kOk;
}

inline int cmd_lcs(const RunConfig& cfg, const Options& o, std::ostream& out) {
    const Sequence x = Sequence::from_string(o.x, o.alphabet);
    const Sequence y = Sequence::from_string(o.y, o.alphabet);
    const std::size_t len = lcs_length_fast(x, y);
    std::optional<Sequence> w;
    if (o.witness) w = lcs_witness(x, y);
    switch (cfg.format) {
    case Format::Json: {
        io::json j;
        j["x_length"] = x.size();
        j["y_length"] = y.size();
        j["alphabet"] = o.alphabet;
        j["lcs"] = len;
        if (w) j["witness"] = w->to_string();
        out << j.dump(2) << '\n';
        break;
    }
    case Format::Csv:
        out << "x_length,y_length,alphabet,lcs" << (w ? ",witness" : "") << '\n'
            << x.size() << ',' << y.size() << ',' << o.alphabet << ',' << len;
        if (w) out << ',' << w->to_string();
        out << '\n';
        break;
    case Format::Text:
        out << "lcs " << len << '\n';
        if (w) out << "witness " << w->to_string() << '\n';
        break;
    }
    return kOk;
}

inline int cmd_gamma(const RunConfig& cfg, const Options& o, std::ostream& out) {
    const auto q = parse_q(o.q);
    const GammaEstimate e =
        estimate_gamma(source_for(q, o.alphabet), o.n_len, o.pairs, cfg.seed, cfg.workers, o.confidence);
    const ImpliedThreshold t = implied_threshold(e);
    switch (cfg.format) {
    case Format::Json: {
        io::json j = io::to_json(e);
        j["implied_threshold"] = t.p;
        j["implied_threshold_empirical"] = t.empirical;
        out << j.dump(2) << '\n';
        break;
    }
    case Format::Csv: io::write_gamma_csv(out, std::span<const GammaEstimate>(&e, 1)); break;
    case Format::Text:
        text_gamma(out, e);
        out << "implied threshold " << io::format_real(t.p)
            << " (empirical point estimate at finite n, not a proven bound)\n";
        break;
    }
    return kOk;
}

inline int cmd_gamma_sweep(const RunConfig& cfg, const Options& o, std::ostream& out) {
    if (o.q_list.empty() || o.n_list.empty()) {
        throw std::invalid_argument("gamma-sweep: --q and --n lists must be nonempty");
    }
    std::vector<SourceSpec> sources;
    for (const auto& s : o.q_list) sources.push_back(source_for(parse_q(s), o.alphabet));
    const auto rows = gamma_sweep(sources, o.n_list, o.pairs, cfg.seed, cfg.workers, o.confidence);
    switch (cfg.format) {
    case Format::Json: {
        io::json j;
        j["seed"] = cfg.seed;
        io::json arr = io::json::array();
        for (const auto& e : rows) {
            io::json item = io::to_json(e);
            item["implied_threshold"] = implied_threshold(e).p;
            item["implied_threshold_empirical"] = true;
            arr.push_back(std::move(item));
        }
        j["estimates"] = std::move(arr);
        out << j.dump(2) << '\n';
        break;
    }
    case Format::Csv: io::write_gamma_csv(out, rows); break;
    case Format::Text:
        for (const auto& e : rows) {
            text_gamma(out, e);
            out << '\n';
        }
        break;
    }
    return kOk;
}

inline int cmd_graph(const RunConfig& cfg, const Options& o, std::ostream& out) {
    GraphLimits limits;
    limits.max_n = o.max_graph_n;
    const ConfusabilityGraph g = build_graph(o.n, o.deletions, cfg.workers, limits);
    if (!g.stored()) {
        // Edge-oracle mode: only sampled degrees are available.
        if (o.samples == 0) {
            throw resource_error("graph: n = " + std::to_string(o.n) +
                                 " is above the stored-adjacency limit; pass --samples for sampled degrees");
        }
        const auto sampled = sample_degrees(g, o.samples, cfg.seed);
        switch (cfg.format) {
        case Format::Json: {
            io::json j;
            j["n"] = g.n();
            j["D"] = g.deletions();
            j["vertices"] = g.vertex_count();
            j["seed"] = cfg.seed;
            io::json arr = io::json::array();
            for (const auto& [v, d] : sampled) arr.push_back({Sequence::from_index(v, g.n()).to_string(), d});
            j["sampled_degrees"] = std::move(arr);
            j["all_zeros_degree"] = g.degree(0);
            out << j.dump(2) << '\n';
            break;
        }
        case Format::Csv:
            out << "vertex,degree\n";
            for (const auto& [v, d] : sampled) out << Sequence::from_index(v, g.n()).to_string() << ',' << d << '\n';
            break;
        case Format::Text:
            out << "sampled degrees (seed " << cfg.seed << ")\n";
            for (const auto& [v, d] : sampled) out << Sequence::from_index(v, g.n()).to_string() << ' ' << d << '\n';
            break;
        }
        return kOk;
    }
    const GraphStats s = graph_stats(g);
    switch (cfg.format) {
    case Format::Json: out << io::to_json(s).dump(2) << '\n'; break;
    case Format::Csv: io::write_degree_histogram_csv(out, s); break;
    case Format::Text:
        out << "n " << s.n << "  D " << s.deletions << "\nvertices " << s.vertices << "\nedges "
            << s.edges << "\ndegree min/mean/max " << s.min_degree << " / "
            << io::format_real(s.mean_degree) << " / " << s.max_degree << "\ndensity "
            << io::format_real(s.density) << "\nturan bound " << io::format_real(s.turan_bound)
            << "\nturan bound (average degree) " << io::format_real(s.turan_bound_average_degree)
            << "\ncaro-wei bound " << io::format_real(s.caro_wei_bound) << "\nall-zeros degree "
            << s.all_zeros_degree << '\n';
        break;
    }
    return kOk;
}

inline int cmd_codebook_build(const RunConfig& cfg, const Options& o, std::ostream& out) {
    GraphLimits glimits;
    glimits.max_n = o.max_graph_n;
    if (o.n > glimits.max_stored_n) {
        throw resource_error("codebook-build: n = " + std::to_string(o.n) +
                             " needs stored adjacency (limit " + std::to_string(glimits.max_stored_n) + ")");
    }
    std::optional<GreedyOrder> order;
    std::optional<std::uint64_t> nodes;
    if (o.method == "greedy") order = parse_order(o.order);
    else if (o.method == "sample") check_sampler_parameters(o.n, o.stay, o.c);
    else if (o.method != "exact") throw std::invalid_argument("--method must be greedy, exact or sample");
    if (o.method == "exact" && o.n > o.max_exact_n) {
        throw resource_error("codebook-build: n = " + std::to_string(o.n) +
                             " exceeds the exact-search limit of " + std::to_string(o.max_exact_n));
    }

    const ConfusabilityGraph g = build_graph(o.n, o.deletions, cfg.workers, glimits);
    std::optional<Codebook> cb;
    if (order) {
        cb = greedy_codebook(g, *order, cfg.seed);
    } else if (o.method == "sample") {
        cb = sample_codebook_thm3(g, o.stay, o.c, cfg.seed);
    } else {
        ExactLimits el;
        el.max_n = o.max_exact_n;
        el.node_budget = o.node_budget;
        el.time_budget = std::chrono::milliseconds(o.time_budget_ms);
        auto res = exact_max_search(g, el);
        nodes = res.nodes;
        cb = std::move(res.codebook);
    }
    const ValidityReport rep = verify_codebook(*cb);

    if (!o.codebook_out.empty()) {
        std::ostringstream file;
        write_codebook(file, *cb);
        write_file_atomically(o.codebook_out, file.str());
    }
    switch (cfg.format) {
    case Format::Json: {
        io::json j;
        j["n"] = cb->n();
        j["D"] = cb->deletions();
        j["method"] = o.method;
        if (order) j["order"] = order_name(*order);
        if (o.method == "sample") {
            j["q"] = o.stay;
            j["c"] = o.c;
        }
        if (nodes) j["search_nodes"] = *nodes;
        j["seed"] = cfg.seed;
        j["size"] = cb->size();
        j["rate"] = cb->rate();
        j["verify"] = rep.valid ? "PASS" : "FAIL";
        if (!o.codebook_out.empty()) j["file"] = o.codebook_out;
        else {
            io::json words = io::json::array();
            for (const auto& w : cb->codewords()) words.push_back(w.to_string());
            j["codewords"] = std::move(words);
        }
        out << j.dump(2) << '\n';
        break;
    }
    case Format::Csv:
        out << "n,D,method,seed,size,rate,verify\n"
            << cb->n() << ',' << cb->deletions() << ',' << o.method << ',' << cfg.seed << ','
            << cb->size() << ',' << io::format_real(cb->rate()) << ',' << (rep.valid ? "PASS" : "FAIL")
            << '\n';
        break;
    case Format::Text:
        if (o.codebook_out.empty()) write_codebook(out, *cb);
        out << "size " << cb->size() << "\nrate " << io::format_real(cb->rate()) << "\nverify "
            << (rep.valid ? "PASS" : "FAIL") << "\nseed " << cfg.seed << '\n';
        break;
    }
    return rep.valid ? kOk : kCheckFailed;
}

inline int cmd_codebook_verify(const RunConfig& cfg, const Options& o, std::ostream& out) {
    const Codebook cb = load_codebook(o.codebook_in);
    const ValidityReport r = verify_codebook(cb);
    switch (cfg.format) {
    case Format::Json: out << io::to_json(r).dump(2) << '\n'; break;
    case Format::Csv:
        out << "n,D,count,valid,first,second,lcs\n"
            << r.n << ',' << r.deletions << ',' << r.count << ',' << (r.valid ? "PASS" : "FAIL") << ',';
        if (r.violating_pair) {
            out << r.violating_pair->first.to_string() << ',' << r.violating_pair->second.to_string()
                << ',' << *r.violating_lcs;
        } else {
            out << ",,";
        }
        out << '\n';
        break;
    case Format::Text:
        out << (r.valid ? "PASS" : "FAIL") << ' ' << r.count << " codewords, n=" << r.n << " D=" << r.deletions
            << '\n';
        if (r.violating_pair) {
            out << "confusable: " << r.violating_pair->first.to_string() << ' '
                << r.violating_pair->second.to_string() << " lcs " << *r.violating_lcs << '\n';
        }
        break;
    }
    return r.valid ? kOk : kCheckFailed;
}

inline int cmd_decode(const RunConfig& cfg, const Options& o, std::ostream& out) {
    const Codebook cb = load_codebook(o.codebook_in);
    const Sequence w = Sequence::from_string(o.received, 2);
    const DecodeResult r = decode(cb, w);
    switch (cfg.format) {
    case Format::Json: out << io::to_json(r, cb, w).dump(2) << '\n'; break;
    case Format::Csv:
        out << "received,status,codeword,candidates\n"
            << w.to_string() << ',' << io::to_string(r.status) << ','
            << (r.codeword ? r.codeword->to_string() : std::string()) << ',' << r.candidates.size()
            << '\n';
        break;
    case Format::Text:
        if (r.codeword) out << r.codeword->to_string() << '\n';
        else out << io::to_string(r.status) << " (" << r.candidates.size() << " candidates)\n";
        break;
    }
    return r.status == DecodeStatus::Decoded ? kOk : kDecodeFailed;
}

inline int cmd_attack(const RunConfig& cfg, const Options& o, std::ostream& out) {
    const Codebook cb = load_codebook(o.codebook_in);
    const auto a = adversary_attack(cb);
    switch (cfg.format) {
    case Format::Json: out << io::to_json(a, cb).dump(2) << '\n'; break;
    case Format::Csv:
        out << "found,first,second,received,deletions_first,deletions_second\n";
        if (a) {
            out << "true," << a->first.to_string() << ',' << a->second.to_string() << ','
                << a->received.to_string() << ',' << a->deletions_first << ',' << a->deletions_second << '\n';
        } else {
            out << "false,,,,,\n";
        }
        break;
    case Format::Text:
        if (a) {
            out << "confusable: " << a->first.to_string() << " and " << a->second.to_string()
                << " both yield " << a->received.to_string() << " (" << a->deletions_first
                << " deletions each)\n";
        } else {
            out << "none: no pair of codewords is confusable\n";
        }
        break;
    }
    return a ? kCheckFailed : kOk;
}

inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Deletion-channel capacity toolkit: thresholds, LCS constants, codebooks"};
    app.require_subcommand(1);
    app.fallthrough();

    RunConfig cfg;
    Options o;
    std::string format = "json";
    try {
        cfg.seed = default_seed();
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kValidation;
    }
    app.add_option("--seed", cfg.seed, std::string("Master seed (default: $") + kSeedEnv + " or 1)");
    app.add_option("--workers", cfg.workers, "Worker threads, 0 = available parallelism")
        ->check(CLI::NonNegativeNumber);
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
    app.add_option("--output", cfg.output_path, "Write the report to this file instead of stdout");

    auto* thresholds = app.add_subcommand("thresholds", "Capacity-threshold report");
    thresholds->add_option("--gamma-estimate", o.gamma_estimate, "Point estimate of gamma");

    auto* lcs = app.add_subcommand("lcs", "LCS length (and optionally a witness) of two strings");
    lcs->add_option("--x", o.x, "First string")->required();
    lcs->add_option("--y", o.y, "Second string")->required();
    lcs->add_option("--alphabet", o.alphabet, "Alphabet size");
    lcs->add_flag("--witness", o.witness, "Also print one longest common subsequence");

    auto* gamma = app.add_subcommand("gamma", "Monte Carlo LCS estimate for one source");
    gamma->add_option("--q", o.q, "Markov stay probability, or 'uniform'");
    gamma->add_option("--n", o.n_len, "String length")->check(CLI::PositiveNumber);
    gamma->add_option("--pairs", o.pairs, "Number of independent pairs")->check(CLI::PositiveNumber);
    gamma->add_option("--alphabet", o.alphabet, "Alphabet size (uniform source only)");
    gamma->add_option("--confidence", o.confidence, "Confidence level of the interval");

    auto* sweep = app.add_subcommand("gamma-sweep", "Monte Carlo estimates over a (q, n) grid");
    sweep->add_option("--q", o.q_list, "Stay probabilities and/or 'uniform'")->required()->delimiter(',');
    sweep->add_option("--n", o.n_list, "String lengths")->required()->delimiter(',');
    sweep->add_option("--pairs", o.pairs, "Pairs per cell")->check(CLI::PositiveNumber);
    sweep->add_option("--alphabet", o.alphabet, "Alphabet size (uniform source only)");
    sweep->add_option("--confidence", o.confidence, "Confidence level of the interval");

    auto* graph = app.add_subcommand("graph", "Confusability-graph statistics");
    graph->add_option("--n", o.n, "Codeword length")->required();
    graph->add_option("--D", o.deletions, "Maximum deletions")->required();
    graph->add_option("--samples", o.samples, "Sampled degrees, for n above the stored limit");
    graph->add_option("--max-n", o.max_graph_n, "Graph size limit");

    auto* build = app.add_subcommand("codebook-build", "Construct, verify and save a codebook");
    build->alias("codebook");
    build->add_option("--n", o.n, "Codeword length")->required();
    build->add_option("--D", o.deletions, "Maximum deletions")->required();
    build->add_option("--method", o.method, "greedy | exact | sample")
        ->check(CLI::IsMember({"greedy", "exact", "sample"}));
    build->add_option("--order", o.order, "Greedy order: lex | min-degree | random")
        ->check(CLI::IsMember({"lex", "min-degree", "random"}));
    build->add_option("--q", o.stay, "Sampler source stay probability");
    build->add_option("--c", o.c, "Sampler rate constant, 0 < c < log2(1/q)");
    build->add_option("--out", o.codebook_out, "Codebook file to write");
    build->add_option("--max-exact-n", o.max_exact_n, "Exact-search size limit");
    build->add_option("--node-budget", o.node_budget, "Exact search node budget, 0 = unlimited");
    build->add_option("--time-budget-ms", o.time_budget_ms, "Exact search time budget, 0 = unlimited");

    auto* verify = app.add_subcommand("codebook-verify", "Check a codebook file for confusable pairs");
    verify->add_option("--in", o.codebook_in, "Codebook file")->required();

    auto* dec = app.add_subcommand("decode", "Decode a received string against a codebook file");
    dec->add_option("--in", o.codebook_in, "Codebook file")->required();
    dec->add_option("--received", o.received, "Received 0/1 string")->required();

    auto* attack = app.add_subcommand("attack", "Search a codebook for a pair the adversary can merge");
    attack->add_option("--in", o.codebook_in, "Codebook file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kValidation;
    }
    cfg.format = format == "csv" ? Format::Csv : format == "text" ? Format::Text : Format::Json;

    std::ostringstream report;
    try {
        int code = kOk;
        if (thresholds->parsed()) code = cmd_thresholds(cfg, o, report);
        else if (lcs->parsed()) code = cmd_lcs(cfg, o, report);
        else if (gamma->parsed()) code = cmd_gamma(cfg, o, report);
        else if (sweep->parsed()) code = cmd_gamma_sweep(cfg, o, report);
        else if (graph->parsed()) code = cmd_graph(cfg, o, report);
        else if (build->parsed()) code = cmd_codebook_build(cfg, o, report);
        else if (verify->parsed()) code = cmd_codebook_verify(cfg, o, report);
        else if (dec->parsed()) code = cmd_decode(cfg, o, report);
        else if (attack->parsed()) code = cmd_attack(cfg, o, report);

        if (cfg.output_path.empty()) out << report.str();
        else write_file_atomically(cfg.output_path, report.str());
        return code;
    } catch (const search_budget_exhausted& e) {
        err << "error: " << e.what() << '\n';
        return kResource;
    } catch (const resource_error& e) {
        err << "error: " << e.what() << '\n';
        return kResource;
    } catch (const io_failure& e) {
        err << "error: " << e.what() << '\n';
        return kInternal;
    } catch (const format_error& e) {
        err << "error: " << e.what() << '\n';
        return kValidation;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kValidation;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << '\n';
        return kValidation;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << '\n';
        return kValidation;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return kInternal;
    }
}

} // namespace delcap::cli
