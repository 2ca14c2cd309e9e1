#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tiedlinks/rational.hpp"

namespace tiedlinks {

enum class Mode : uint8_t { Trace, Invariant, Verify };
enum class Format : uint8_t { Plain, Latex, Json };

struct EvalPoint {
    Rational u, a, b;
};

struct JobSpec {
    std::vector<std::pair<std::string, std::optional<int>>> words;
    Mode mode = Mode::Invariant;
    Format format = Format::Plain;
    std::optional<EvalPoint> eval_point;
    uint64_t seed = 1;
    bool debug_rewrites = false;
};

// Exit codes: 0 ok, 1 computation or verification failure, 2 usage error.
constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

/// Processes every word (or runs the verification suites in Verify mode),
/// writing one record per word to `out` and diagnostics to `err`.  Parse
/// errors produce an error record and processing continues.
int run(const JobSpec& spec, std::ostream& out, std::ostream& err);

/// Newline-delimited JSON over the lines of `path`, in input order; `#`
/// comments and blank lines are skipped.  Per-line errors become error
/// records and processing continues.
int batch(const std::string& path, const JobSpec& spec, std::ostream& out, std::ostream& err);

}  // namespace tiedlinks
