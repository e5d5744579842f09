#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pedlab/poset.hpp"
#include "pedlab/shapes.hpp"

namespace pedlab {

/// Suite-wide limits. max_cells caps shape sizes (and poset sizes where a
/// suite works on general posets); max_extensions gates the eigen suite; seed
/// drives the random-poset corpus.
struct Bounds {
    int max_cells = 6;
    int series_degree = 12;
    int max_extensions = 24;
    std::uint64_t seed = 1;
};

/// Restricts a suite to one case instead of the built-in corpus.
struct Target {
    std::optional<SkewShape> shape;
    std::optional<std::pair<Poset, Filter>> poset;
};

struct Failure {
    std::string case_id;
    std::string expected;
    std::string actual;
};

struct VerificationReport {
    std::string suite;
    long long cases_run = 0;
    std::vector<Failure> failures;
    std::vector<std::string> notes;  // populated for targeted runs
    double elapsed_seconds = 0.0;    // not part of serialized output

    bool passed() const { return failures.empty(); }
};

const std::vector<std::string>& suite_names();

/// Runs one named suite over the built-in corpus, or over the single target
/// when given. Throws UnknownSuite for unrecognized names and
/// std::invalid_argument when the target kind does not fit the suite.
VerificationReport run_suite(const std::string& name, const Bounds& bounds,
                             const Target* target = nullptr);

}  // namespace pedlab
