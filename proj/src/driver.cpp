#include "tiedlinks/driver.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include "json.hpp"
#include "tiedlinks/errors.hpp"
#include "tiedlinks/invariant.hpp"
#include "tiedlinks/verify.hpp"

namespace tiedlinks {

namespace {

using nlohmann::json;

std::optional<std::size_t> first_unit_sigma_site(const TiedBraid& b) {
    for (std::size_t i = 0; i < b.letters.size(); ++i) {
        const auto& l = b.letters[i];
        if (l.kind == BraidKind::Sigma && (l.power == 1 || l.power == -1)) return i;
    }
    return std::nullopt;
}

json eval_block(const InvariantValue& v, const TracePoly& trace, const EvalPoint& pt) {
    json j;
    j["u"] = to_string(pt.u);
    j["A"] = to_string(pt.a);
    j["B"] = to_string(pt.b);
    j["trace"] = to_string(trace.eval(pt.u, pt.a, pt.b));
    j["even"] = to_string(v.value.even().eval(pt.u, pt.a, pt.b));
    j["odd"] = to_string(v.value.odd().eval(pt.u, pt.a, pt.b));
    j["L"] = to_string(ExtScalar::ell().eval(pt.u, pt.a, pt.b));
    return j;
}

// One json record per word; the invariant parts are rendered over (u, z, t)
// so they re-parse through the paper-form grammar.
json json_record(const std::string& text, std::optional<int> strands, const JobSpec& spec,
                 std::ostream& err) {
    json j;
    j["input"] = text;
    EngineLog log;
    if (spec.debug_rewrites) log.os = &err;
    const TiedBraid b = parse_braid(text, strands);
    const TracePoly trace = markov_trace(b, spec.debug_rewrites ? &log : nullptr);
    j["strands"] = b.strands;
    j["exponent"] = exponent(b);
    j["trace"] = trace.str();
    if (spec.mode == Mode::Invariant) {
        const InvariantValue v = normalize(trace, b.strands, exponent(b));
        j["invariant"] = {{"even", v.value.even().str("z", "t")},
                          {"odd", v.value.odd().str("z", "t")}};
        json checks;
        const auto site = first_unit_sigma_site(b);
        if (site) {
            checks["skein"] = check_skein(b, *site);
        } else {
            checks["skein"] = nullptr;
        }
        checks["markov"] = check_markov_invariance(b, spec.seed);
        j["checks"] = checks;
        if (spec.eval_point) j["eval"] = eval_block(v, trace, *spec.eval_point);
    } else if (spec.eval_point) {
        json e;
        e["u"] = to_string(spec.eval_point->u);
        e["A"] = to_string(spec.eval_point->a);
        e["B"] = to_string(spec.eval_point->b);
        e["trace"] = to_string(trace.eval(spec.eval_point->u, spec.eval_point->a,
                                          spec.eval_point->b));
        j["eval"] = e;
    }
    return j;
}

void plain_record(const std::string& text, std::optional<int> strands, const JobSpec& spec,
                  std::ostream& out, std::ostream& err) {
    const bool tex = spec.format == Format::Latex;
    EngineLog log;
    if (spec.debug_rewrites) log.os = &err;
    const TiedBraid b = parse_braid(text, strands);
    const TracePoly trace = markov_trace(b, spec.debug_rewrites ? &log : nullptr);
    out << "word: " << (text.empty() ? "(empty)" : text) << "\n";
    out << "strands: " << b.strands << "\n";
    out << "exponent: " << exponent(b) << "\n";
    out << "trace: " << (tex ? trace.latex() : trace.str()) << "\n";
    if (spec.mode == Mode::Invariant) {
        const InvariantValue v = normalize(trace, b.strands, exponent(b));
        if (tex) {
            out << "invariant: " << v.value.latex() << "\n";
        } else {
            out << "invariant even: " << v.value.even().str() << "\n";
            out << "invariant odd:  " << v.value.odd().str() << "\n";
        }
        if (spec.eval_point) {
            const auto& pt = *spec.eval_point;
            out << "eval at u=" << to_string(pt.u) << ", A=" << to_string(pt.a)
                << ", B=" << to_string(pt.b) << ": even = "
                << to_string(v.value.even().eval(pt.u, pt.a, pt.b)) << ", odd = "
                << to_string(v.value.odd().eval(pt.u, pt.a, pt.b)) << ", L = "
                << to_string(ExtScalar::ell().eval(pt.u, pt.a, pt.b)) << "\n";
        }
    } else if (spec.eval_point) {
        const auto& pt = *spec.eval_point;
        out << "eval at u=" << to_string(pt.u) << ", A=" << to_string(pt.a)
            << ", B=" << to_string(pt.b) << ": trace = "
            << to_string(trace.eval(pt.u, pt.a, pt.b)) << "\n";
    }
    out << "\n";
}

int run_verify(const JobSpec& spec, std::ostream& out) {
    int failed_total = 0;
    for (const SuiteResult& r : verify_all(spec.seed)) {
        failed_total += r.failed;
        if (spec.format == Format::Json) {
            json j;
            j["suite"] = r.name;
            j["passed"] = r.passed;
            j["failed"] = r.failed;
            j["failures"] = r.failures;
            out << j.dump() << "\n";
        } else {
            out << (r.ok() ? "PASS" : "FAIL") << "  " << r.name << ": " << r.passed
                << " passed, " << r.failed << " failed\n";
            for (const auto& f : r.failures) out << "      " << f << "\n";
        }
    }
    if (spec.format != Format::Json) {
        out << (failed_total == 0 ? "all verification suites passed"
                                  : "verification failures found")
            << "\n";
    }
    return failed_total == 0 ? kExitOk : kExitFailure;
}

}  // namespace

int run(const JobSpec& spec, std::ostream& out, std::ostream& err) {
    if (spec.mode == Mode::Verify) return run_verify(spec, out);
    if (spec.words.empty()) {
        err << "error: no input words\n";
        return kExitUsage;
    }
    bool any_error = false;
    for (const auto& [text, strands] : spec.words) {
        try {
            if (spec.format == Format::Json) {
                out << json_record(text, strands, spec, err).dump() << "\n";
            } else {
                plain_record(text, strands, spec, out, err);
            }
        } catch (const ParseError& e) {
            any_error = true;
            if (spec.format == Format::Json) {
                json j{{"input", text}, {"error", e.what()}, {"position", e.position()}};
                out << j.dump() << "\n";
            } else {
                err << "error in '" << text << "': " << e.what() << "\n";
            }
        } catch (const std::exception& e) {
            any_error = true;
            if (spec.format == Format::Json) {
                json j{{"input", text}, {"error", e.what()}};
                out << j.dump() << "\n";
            } else {
                err << "error in '" << text << "': " << e.what() << "\n";
            }
        }
    }
    return any_error ? kExitFailure : kExitOk;
}

int batch(const std::string& path, const JobSpec& spec, std::ostream& out, std::ostream& err) {
    std::ifstream in(path);
    if (!in) {
        err << "error: cannot open '" << path << "'\n";
        return kExitUsage;
    }
    bool any_error = false;
    std::string line;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        std::string text = hash == std::string::npos ? line : line.substr(0, hash);
        // trim
        const auto b = text.find_first_not_of(" \t");
        if (b == std::string::npos) continue;
        const auto e = text.find_last_not_of(" \t");
        text = text.substr(b, e - b + 1);
        try {
            out << json_record(text, std::nullopt, spec, err).dump() << "\n";
        } catch (const ParseError& ex) {
            any_error = true;
            json j{{"input", text}, {"error", ex.what()}, {"position", ex.position()}};
            out << j.dump() << "\n";
        } catch (const std::exception& ex) {
            any_error = true;
            json j{{"input", text}, {"error", ex.what()}};
            out << j.dump() << "\n";
        }
    }
    return any_error ? kExitFailure : kExitOk;
}

}  // namespace tiedlinks
