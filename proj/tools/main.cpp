#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "tiedlinks/driver.hpp"

namespace {

bool parse_eval(const std::string& text, tiedlinks::EvalPoint& pt) {
    // u=<q>,A=<q>,B=<q> in any order
    std::optional<tiedlinks::Rational> u, a, b;
    std::size_t pos = 0;
    while (pos < text.size()) {
        auto comma = text.find(',', pos);
        if (comma == std::string::npos) comma = text.size();
        const std::string item = text.substr(pos, comma - pos);
        const auto eq = item.find('=');
        if (eq == std::string::npos) return false;
        const std::string key = item.substr(0, eq);
        tiedlinks::Rational val;
        try {
            val = tiedlinks::rational_from_string(item.substr(eq + 1));
        } catch (const std::exception&) {
            return false;
        }
        if (key == "u") {
            u = val;
        } else if (key == "A") {
            a = val;
        } else if (key == "B") {
            b = val;
        } else {
            return false;
        }
        pos = comma + 1;
    }
    if (!u || !a || !b) return false;
    pt = {*u, *a, *b};
    return true;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Computes the tied-link invariant polynomial of tied braid words via the\n"
        "Markov trace on the algebra of braids and ties.\n\n"
        "Braid grammar (whitespace-separated): s<i> = positive crossing of strands\n"
        "i, i+1; s<i>^<e> = its e-th power; e<i> = a tie between strands i, i+1.\n"
        "An empty word is the identity braid."};

    std::vector<std::string> words;
    app.add_option("words", words, "tied braid words (quote each word)");
    int strands = 0;
    app.add_option("--strands", strands, "strand count override (>= 1 + max index)");
    std::string mode_str = "invariant";
    app.add_option("--mode", mode_str, "trace | invariant | verify")
        ->check(CLI::IsMember({"trace", "invariant", "verify"}));
    std::string format_str = "plain";
    app.add_option("--format", format_str, "plain | latex | json")
        ->check(CLI::IsMember({"plain", "latex", "json"}));
    std::string eval_str;
    app.add_option("--eval", eval_str, "evaluation point, e.g. u=2,A=1,B=3/2");
    std::uint64_t seed = 1;
    app.add_option("--seed", seed, "seed for the verification suites and sampled checks");
    std::string batch_path;
    app.add_option("--batch", batch_path, "file of one braid word per line (# comments)");
    bool debug_rewrites = false;
    app.add_flag("--debug-rewrites", debug_rewrites, "log every rewrite step to stderr");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : tiedlinks::kExitUsage;
    }

    tiedlinks::JobSpec spec;
    spec.seed = seed;
    spec.debug_rewrites = debug_rewrites;
    if (mode_str == "trace") spec.mode = tiedlinks::Mode::Trace;
    if (mode_str == "invariant") spec.mode = tiedlinks::Mode::Invariant;
    if (mode_str == "verify") spec.mode = tiedlinks::Mode::Verify;
    if (format_str == "plain") spec.format = tiedlinks::Format::Plain;
    if (format_str == "latex") spec.format = tiedlinks::Format::Latex;
    if (format_str == "json") spec.format = tiedlinks::Format::Json;
    if (!eval_str.empty()) {
        tiedlinks::EvalPoint pt;
        if (!parse_eval(eval_str, pt)) {
            std::cerr << "error: bad --eval value '" << eval_str << "'\n";
            return tiedlinks::kExitUsage;
        }
        spec.eval_point = pt;
    }
    std::optional<int> strands_opt;
    if (strands > 0) strands_opt = strands;
    for (const auto& w : words) spec.words.emplace_back(w, strands_opt);

    if (!batch_path.empty()) {
        return tiedlinks::batch(batch_path, spec, std::cout, std::cerr);
    }
    if (spec.mode != tiedlinks::Mode::Verify && spec.words.empty()) {
        // an explicitly empty word is still valid input; no words at all is usage error
        std::cerr << "error: no input words (pass '' for the identity braid)\n";
        return tiedlinks::kExitUsage;
    }
    return tiedlinks::run(spec, std::cout, std::cerr);
}
