#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace tiedlinks {

struct SuiteResult {
    std::string name;
    int passed = 0;
    int failed = 0;
    std::vector<std::string> failures;  // first few, for diagnosis

    bool ok() const { return failed == 0; }
    void record(bool good, const std::string& what);
};

/// Skein rules III, IV, Va, Vb on randomized (word, site) pairs, n <= 5,
/// length <= 12.  `cases` counts (word, site) pairs; each checks all four rules.
SuiteResult verify_skein(int cases, uint64_t seed);

/// Invariance under the stabilization moves, conjugation and rotation on
/// randomized words, n <= 5, length <= 12.
SuiteResult verify_markov(int cases, uint64_t seed);

/// Closed form for trivial braids with ties, all 1 <= c <= max_components.
SuiteResult verify_unlink(int max_components);

/// Trace properties: rotation invariance, embedding stability, tie
/// idempotency, pre-expanded inverse consistency, the pre-skein trace
/// identity, and soundness of every defining relation of the monoid in
/// random contexts (cases_each per sub-suite / per relation).
SuiteResult verify_trace_axioms(int cases_each, uint64_t seed);

/// reduce_word completes within the step budget on random simple words
/// (n <= 6, length <= 20) and its output is rho-reducible.
SuiteResult verify_termination(int words, uint64_t seed);

/// All suites at the sizes used by the acceptance gate.
std::vector<SuiteResult> verify_all(uint64_t seed);

}  // namespace tiedlinks
