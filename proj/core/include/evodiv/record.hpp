#pragma once

#include <cstdint>
#include <vector>

namespace evodiv {

/// Per-generation statistics of one run. Evaluation counts are cumulative,
/// so they are monotone non-decreasing across rows.
struct GenerationStats {
    int generation = 0;
    double best_objective = 0.0;
    double mean_objective = 0.0;
    std::uint64_t distance_evaluations = 0;
    std::uint64_t objective_evaluations = 0;
    bool operator==(const GenerationStats&) const = default;
};

/// One run: its seed and generations+1 rows (generation 0 is the freshly
/// initialized population).
struct RunRecord {
    std::uint64_t seed = 0;
    std::vector<GenerationStats> rows;
    bool operator==(const RunRecord&) const = default;
};

} // namespace evodiv
