#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "tiedlinks/driver.hpp"
#include "tiedlinks/expr.hpp"
#include "tiedlinks/invariant.hpp"

using namespace tiedlinks;
using nlohmann::json;

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    const std::string cmd = std::string(CLI_BINARY) + " " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::string out;
    char buf[4096];
    while (std::size_t n = fread(buf, 1, sizeof buf, p)) out.append(buf, n);
    const int status = pclose(p);
    return {WEXITSTATUS(status), out};
}

std::vector<json> ndjson_lines(const std::string& text) {
    std::vector<json> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty()) lines.push_back(json::parse(line));
    }
    return lines;
}

}  // namespace

TEST_CASE("plain invariant output") {
    const RunResult r = run_cli("\"s1 s1\"");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("strands: 2") != std::string::npos);
    CHECK(r.out.find("exponent: 2") != std::string::npos);
    CHECK(r.out.find("invariant odd:") != std::string::npos);
}

TEST_CASE("trace of the identity braid is 1") {
    const RunResult r = run_cli("--mode trace \"\"");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("trace: 1") != std::string::npos);
}

TEST_CASE("json records round-trip through the expression grammar") {
    const RunResult r = run_cli("--format json \"s1 s1\" \"e1 s1^-2\"");
    CHECK(r.exit_code == 0);
    const auto records = ndjson_lines(r.out);
    REQUIRE(records.size() == 2);

    const std::vector<std::string> words = {"s1 s1", "e1 s1^-2"};
    // the second word has no unit-power sigma site, so its skein check is null
    CHECK(records[0]["checks"]["skein"] == true);
    CHECK(records[1]["checks"]["skein"].is_null());
    for (std::size_t i = 0; i < records.size(); ++i) {
        const json& rec = records[i];
        CHECK(rec["input"] == words[i]);
        CHECK(rec["checks"]["markov"] == true);
        // the rendered even/odd parts re-parse to the same extension element
        const ExtScalar even = parse_paper_expr(rec["invariant"]["even"].get<std::string>());
        const ExtScalar odd = parse_paper_expr(rec["invariant"]["odd"].get<std::string>());
        const ExtScalar rebuilt = even + odd * ExtScalar::w();
        CHECK(rebuilt == invariant_F(parse_braid(words[i])).value);
    }
}

TEST_CASE("evaluation mode reports exact rationals") {
    // trace of the Hopf word at u=2, A=1, B=3: 1 + (u-1)(A+B) = 5
    const RunResult r = run_cli("--mode trace --eval u=2,A=1,B=3 \"s1 s1\"");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("trace = 5") != std::string::npos);
}

TEST_CASE("batch processing isolates bad lines and keeps order") {
    const std::string path = "cli_batch_input.txt";
    {
        std::ofstream f(path);
        f << "# comment line\n";
        f << "s1 s1\n";
        f << "sX\n";
        f << "e1 s1^-2\n";
        f << "\n";
    }
    const RunResult r = run_cli("--batch " + path);
    CHECK(r.exit_code == 1);  // one line failed
    const auto records = ndjson_lines(r.out);
    REQUIRE(records.size() == 3);
    CHECK(records[0]["input"] == "s1 s1");
    CHECK(records[0].contains("invariant"));
    CHECK(records[1]["input"] == "sX");
    CHECK(records[1].contains("error"));
    CHECK(records[2]["input"] == "e1 s1^-2");
    CHECK(records[2].contains("invariant"));
    std::remove(path.c_str());
}

TEST_CASE("empty batch file is fine") {
    const std::string path = "cli_batch_empty.txt";
    {
        std::ofstream f(path);
    }
    const RunResult r = run_cli("--batch " + path);
    CHECK(r.exit_code == 0);
    CHECK(r.out.empty());
    std::remove(path.c_str());
}

TEST_CASE("usage errors exit with 2") {
    CHECK(run_cli("--mode bogus \"s1\"").exit_code == 2);
    CHECK(run_cli("").exit_code == 2);
    CHECK(run_cli("--eval u=zzz \"s1\"").exit_code == 2);
    CHECK(run_cli("--strands 2 \"s2\"").exit_code == 1);  // validation, not usage
}

TEST_CASE("latex format emits paper-style markup") {
    const RunResult r = run_cli("--format latex \"s1 s1\"");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\\mathsf{A}") != std::string::npos);
}

TEST_CASE("driver library runs without a subprocess") {
    JobSpec spec;
    spec.words = {{"s1 s1", std::nullopt}};
    spec.mode = Mode::Trace;
    std::ostringstream out, err;
    CHECK(run(spec, out, err) == kExitOk);
    CHECK(out.str().find("trace:") != std::string::npos);

    JobSpec bad;
    bad.words = {{"sX", std::nullopt}};
    std::ostringstream out2, err2;
    CHECK(run(bad, out2, err2) == kExitFailure);
    CHECK(err2.str().find("error") != std::string::npos);
}
