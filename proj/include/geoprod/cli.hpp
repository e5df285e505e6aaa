#pragma once

#include <cstdio>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "io.hpp"

namespace geoprod::cli {

/// Exit codes of the command-line front end.
enum exit_code : int { success = 0, refuted = 1, usage_error = 2 };

enum class output_format { text, json, latex };

namespace detail {

inline output_format parse_format(const std::string& name) {
    if (name == "json") {
        return output_format::json;
    }
    if (name == "latex") {
        return output_format::latex;
    }
    return output_format::text;
}

// The format must be known before CLI11 runs so that its own errors can be
// reported as JSON too.
inline output_format sniff_format(const std::vector<std::string>& argv) {
    for (std::size_t i = 1; i < argv.size(); ++i) {
        if (argv[i] == "--format" && i + 1 < argv.size()) {
            return parse_format(argv[i + 1]);
        }
        if (argv[i].starts_with("--format=")) {
            return parse_format(argv[i].substr(9));
        }
    }
    return output_format::text;
}

inline std::string format_real(long double value) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.18Lg", value);
    return buf;
}

inline std::string format_double(double value) {
    std::ostringstream os;
    os << value;
    return os.str();
}

// "a5^1", "a2^(1/2)": integer weights bare, everything else parenthesized.
inline std::string weighted_term(index_t index, const Rational& weight, output_format fmt) {
    if (fmt == output_format::latex) {
        return "a_{" + std::to_string(index) + "}^{" + weight.to_string() + "}";
    }
    const std::string w = weight.is_integer() ? weight.to_string() : "(" + weight.to_string() + ")";
    return "a" + std::to_string(index) + "^" + w;
}

inline render_style style_for(output_format fmt) {
    return fmt == output_format::latex ? render_style::latex : render_style::text;
}

inline nlohmann::json side_json(const StringProduct& p, const Signature& sig) {
    return {{"canonical", render(p)}, {"product", p}, {"signature", sig}};
}

struct Options {
    std::string format = "text";
    bool quiet = false;

    std::string expression;
    std::int64_t trials = 0;
    std::uint64_t seed = 0;

    index_t t = 0;
    index_t sum = 0;
    index_t max_index = 0;
    index_t parts = 0;
    bool repetition = false;

    std::vector<index_t> indices;
    index_t target = 0;
    std::string total;

    double a1 = 1.0;
    double r = 2.0;
};

class Runner {
public:
    Runner(const Options& opts, output_format fmt, std::ostream& out) : opts_(opts), fmt_(fmt), out_(out) {}

    int check() {
        const Identity id = parse_identity(opts_.expression);
        const Verdict verdict = verify_identity(id);
        std::optional<OracleReport> numeric;
        if (opts_.trials > 0) {
            OracleConfig cfg;
            cfg.trials = opts_.trials;
            cfg.seed = opts_.seed;
            numeric = numeric_check(id, cfg);
        }
        switch (fmt_) {
        case output_format::json: {
            nlohmann::json j = {{"verdict", verdict.verified() ? "verified" : "refuted"},
                                {"identity", render(id)},
                                {"lhs", side_json(id.lhs, verdict.lhs)},
                                {"rhs", side_json(id.rhs, verdict.rhs)}};
            if (numeric) {
                j["numeric"] = *numeric;
            }
            emit(j.dump());
            break;
        }
        case output_format::latex:
            emit(render(id.lhs, render_style::latex) + (verdict.verified() ? " = " : " \\neq ") +
                 render(id.rhs, render_style::latex));
            break;
        case output_format::text: {
            std::ostringstream os;
            if (verdict.verified()) {
                os << "verified: " << verdict.lhs << " on both sides";
            } else {
                os << "refuted: lhs " << verdict.lhs << "; rhs " << verdict.rhs;
            }
            if (numeric) {
                os << "\nnumeric: " << to_string(numeric->verdict) << ", " << numeric->trials
                   << " trials, max_rel_error=" << format_double(numeric->max_rel_error)
                   << ", skipped=" << numeric->skipped;
            }
            emit(os.str());
            break;
        }
        }
        return verdict.verified() ? success : refuted;
    }

    int canon() {
        const StringProduct p = parse_product(opts_.expression);
        const Signature sig = signature(p);
        switch (fmt_) {
        case output_format::json: emit(side_json(p, sig).dump()); break;
        case output_format::latex: emit(render(p, render_style::latex)); break;
        case output_format::text: {
            std::ostringstream os;
            os << render(p) << "\n" << sig;
            emit(os.str());
            break;
        }
        }
        return success;
    }

    int family() {
        const auto sets = enumerate_family({opts_.t, opts_.sum, opts_.max_index, opts_.repetition});
        if (fmt_ == output_format::json) {
            emit(nlohmann::json(sets).dump());
            return success;
        }
        for (const auto& set : sets) {
            if (fmt_ == output_format::latex) {
                emit(render(from_indices(set), render_style::latex));
                continue;
            }
            std::string line;
            for (index_t i : set) {
                line += (line.empty() ? "" : "+") + std::to_string(i);
            }
            emit(line);
        }
        return success;
    }

    int decompose() {
        const auto found = geoprod::decompose(opts_.t, opts_.sum, opts_.parts, opts_.max_index);
        if (fmt_ == output_format::json) {
            emit(nlohmann::json(found).dump());
            return success;
        }
        for (const auto& d : found) {
            emit(render(d.to_product(), style_for(fmt_)));
        }
        return success;
    }

    int collapse() {
        const StringProduct p = parse_product(opts_.expression);
        const auto result = geoprod::collapse(p);
        if (fmt_ == output_format::json) {
            nlohmann::json j = nullptr;
            if (result) {
                j = {{"index", result->index}, {"exponent", result->exponent}};
            }
            emit(nlohmann::json{{"collapse", j}}.dump());
            return success;
        }
        if (!result) {
            emit("none");
            return success;
        }
        emit(render(normalize(std::vector<Factor>{{result->index, ExactExponent{result->exponent}}}), style_for(fmt_)));
        return success;
    }

    int solve() {
        const auto total = Rational::from_string(opts_.total);
        if (!total) {
            throw invalid_argument("--total expects a rational such as 3/2, got '" + opts_.total + "'");
        }
        const index_t i = opts_.indices.at(0);
        const index_t j = opts_.indices.at(1);
        std::optional<WeightPair> weights;
        try {
            weights = solve_rational_weights(i, j, opts_.target, *total);
        } catch (const no_solution&) {
            // infeasible, reported as an empty result
        }
        if (fmt_ == output_format::json) {
            nlohmann::json out = {{"weights", nullptr}, {"identity", nullptr}};
            if (weights) {
                out["weights"] = {weights->first, weights->second};
                out["identity"] = solved_identity(i, j, *weights, *total, output_format::text);
            }
            emit(out.dump());
            return success;
        }
        emit(weights ? solved_identity(i, j, *weights, *total, fmt_) : "none");
        return success;
    }

    int eval() {
        const StringProduct p = parse_product(opts_.expression);
        SequenceSpec seq;
        seq.a1 = opts_.a1;
        seq.r = opts_.r;
        seq.max_index = opts_.max_index > 0 ? opts_.max_index : std::max<index_t>(p.max_index(), 1);
        const long double value = evaluate(p, seq);
        if (fmt_ == output_format::json) {
            emit(nlohmann::json{{"value", static_cast<double>(value)}}.dump());
        } else {
            emit(format_real(value));
        }
        return success;
    }

private:
    std::string solved_identity(index_t i, index_t j, const WeightPair& w, const Rational& total,
                                output_format fmt) const {
        const std::string times = fmt == output_format::latex ? " \\cdot " : " * ";
        return weighted_term(i, w.first, fmt) + times + weighted_term(j, w.second, fmt) + " = " +
               weighted_term(opts_.target, total, fmt);
    }

    void emit(const std::string& line) {
        if (!opts_.quiet) {
            out_ << line << "\n";
        }
    }

    const Options& opts_;
    output_format fmt_;
    std::ostream& out_;
};

inline int report_error(output_format fmt, std::ostream& out, std::ostream& err, const std::string& kind,
                        const std::string& message, const parse_error* parse = nullptr) {
    if (fmt == output_format::json) {
        nlohmann::json j = {{"kind", kind}, {"message", message}};
        if (parse != nullptr) {
            j["position"] = parse->position();
            j["expected"] = parse->expected();
            j["found"] = parse->found();
        }
        out << nlohmann::json{{"error", j}}.dump() << "\n";
    }
    err << "error: " << message << "\n";
    return usage_error;
}

} // namespace detail

/// Runs one CLI invocation; argv[0] is the program name.
inline int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
    const output_format sniffed = detail::sniff_format(argv);
    detail::Options opts;

    CLI::App app{"Canonical forms and identities for products of geometric-sequence terms", "geoprod"};
    app.require_subcommand(1);
    app.add_option("--format", opts.format, "Output format")->check(CLI::IsMember({"text", "json", "latex"}));
    app.add_flag("--quiet", opts.quiet, "Suppress standard output");

    auto* check = app.add_subcommand("check", "Decide an identity such as \"a4*a3 = a6*a1\"");
    check->add_option("identity", opts.expression, "Identity to verify")->required();
    check->add_option("--trials", opts.trials, "Numeric cross-check trials (0 disables)")
        ->check(CLI::NonNegativeNumber);
    check->add_option("--seed", opts.seed, "Seed for the numeric cross-check");

    auto* canon = app.add_subcommand("canon", "Canonical form and signature of a product");
    canon->add_option("product", opts.expression)->required();

    auto* family = app.add_subcommand("family", "All products of t terms with a given subscript sum");
    family->add_option("--t", opts.t, "Number of terms")->required();
    family->add_option("--sum", opts.sum, "Subscript sum")->required();
    family->add_option("--max-index", opts.max_index, "Largest allowed index")->required();
    family->add_flag("--repetition", opts.repetition, "Allow repeated indices");

    auto* decompose = app.add_subcommand("decompose", "Weighted decompositions with a fixed number of parts");
    decompose->add_option("--t", opts.t, "Total weight")->required();
    decompose->add_option("--sum", opts.sum, "Weighted subscript sum")->required();
    decompose->add_option("--parts", opts.parts, "Number of distinct indices")->required();
    decompose->add_option("--max-index", opts.max_index, "Largest allowed index")->required();

    auto* collapse = app.add_subcommand("collapse", "Rewrite a product as a single power a_k^T");
    collapse->add_option("product", opts.expression)->required();

    auto* solve = app.add_subcommand("solve", "Weights w1, w2 with a_i^w1 * a_j^w2 = a_k^t");
    solve->add_option("--indices", opts.indices, "Source indices I,J")->delimiter(',')->expected(2)->required();
    solve->add_option("--target", opts.target, "Target index K")->required();
    solve->add_option("--total", opts.total, "Target exponent t (rational)")->required();

    auto* eval = app.add_subcommand("eval", "Evaluate a product on a concrete sequence");
    eval->add_option("product", opts.expression)->required();
    eval->add_option("--a1", opts.a1, "First term")->required();
    eval->add_option("--r", opts.r, "Common ratio")->required();
    eval->add_option("--max-index", opts.max_index, "Sequence length (defaults to the largest index used)");

    std::vector<const char*> raw;
    raw.reserve(argv.size());
    for (const auto& a : argv) {
        raw.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(raw.size()), raw.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return success;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return success;
    } catch (const CLI::ParseError& e) {
        return detail::report_error(sniffed, out, err, "usage", e.what());
    }

    const output_format fmt = detail::parse_format(opts.format);
    detail::Runner runner(opts, fmt, out);
    try {
        if (check->parsed()) {
            return runner.check();
        }
        if (canon->parsed()) {
            return runner.canon();
        }
        if (family->parsed()) {
            return runner.family();
        }
        if (decompose->parsed()) {
            return runner.decompose();
        }
        if (collapse->parsed()) {
            return runner.collapse();
        }
        if (solve->parsed()) {
            return runner.solve();
        }
        if (eval->parsed()) {
            return runner.eval();
        }
    } catch (const parse_error& e) {
        return detail::report_error(fmt, out, err, "parse", e.what(), &e);
    } catch (const error& e) {
        return detail::report_error(fmt, out, err, "invalid", e.what());
    }
    return detail::report_error(fmt, out, err, "usage", "no subcommand given");
}

} // namespace geoprod::cli
