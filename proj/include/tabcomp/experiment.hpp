#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "tabcomp/function_index.hpp"
#include "tabcomp/relation.hpp"
#include "tabcomp/shape.hpp"

namespace tabcomp {

struct ExperimentConfig {
    TableShape shape{1, 1};
    // Sweep over the number of stored functions. Stored sets are nested: the
    // point for S stores the first S functions of one sampled sequence.
    std::vector<std::uint64_t> stored_counts;
    std::uint64_t trials = 1;
    std::uint64_t seed = 0;
    // Store distinct functions (sampling without replacement).
    bool distinct = true;
};

struct SweepPoint {
    std::uint64_t stored = 0;
    double entropy = 0.0;
    Natural contained_total = 0;
    double precision_expected = 0.0;
    double precision_observed = 0.0;

    bool operator==(const SweepPoint&) const = default;
};

struct ExperimentReport {
    TableShape shape{1, 1};
    std::uint64_t trials = 1;
    std::uint64_t seed = 0;
    std::vector<SweepPoint> points;

    bool operator==(const ExperimentReport&) const = default;
};

// Throws ConfigError on an invalid config: trials == 0,
// a zero stored count, or a stored count above m^n when distinct is set.
void validate(const ExperimentConfig& config);

// Sequence of `count` total functions of the shape drawn uniformly from the
// stream derived from `seed`; without repeats when distinct is set.
std::vector<FunctionIndex> draw_stored_functions(const TableShape& shape, std::uint64_t count,
                                                 std::uint64_t seed, bool distinct);

// Probability that one sample_function draw from `relation` lands in `stored`
// (duplicates in `stored` count once).
double expected_precision(const RelationTable& relation, std::span<const FunctionIndex> stored);

// Runs every sweep point; `threads` == 0 picks the hardware concurrency.
// The report does not depend on `threads`.
ExperimentReport run_sweep(const ExperimentConfig& config, unsigned threads = 1);

// Columns: S,entropy,contained_total,precision_expected,precision_observed.
std::string emit_csv(const ExperimentReport& report);
std::string emit_json(const ExperimentReport& report);
ExperimentReport parse_report_json(const std::string& text);

// Shortest decimal text that reads back to the same double.
std::string format_double(double value);

} // namespace tabcomp
