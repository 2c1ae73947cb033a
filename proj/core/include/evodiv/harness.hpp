#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "evodiv/evolution.hpp"
#include "evodiv/record.hpp"

namespace evodiv {

/// One algorithm configuration under a comparable name.
struct Variant {
    std::string name;
    EvolutionConfig config;
    DiversityStrategy strategy;
};

struct AggregateRow {
    int generation = 0;
    double mean_best = 0.0;
    double std_best = 0.0;
    bool operator==(const AggregateRow&) const = default;
};

/// Cross-run aggregates for one variant, plus the key=value hyperparameter
/// echo that suffices to replay it.
struct ExperimentResult {
    std::string variant;
    int runs = 0;
    std::vector<AggregateRow> rows;
    std::vector<std::pair<std::string, std::string>> config_echo;
    bool operator==(const ExperimentResult&) const = default;
};

/// Row-wise mean and sample standard deviation (N-1 denominator; 0 for a
/// single record) of best_objective. All records must share a row count.
std::vector<AggregateRow> aggregate(std::span<const RunRecord> records);

/// N runs per variant with seeds base_seed .. base_seed+N-1. Variants share
/// the seed sequence, so comparisons are seed-paired. Runs execute on up to
/// `threads` workers (0 = hardware default); results are independent of
/// scheduling. A failing run aborts the variant naming the failing seed.
std::vector<ExperimentResult> run_experiment(const Problem& problem,
                                             std::span<const Variant> variants, int runs,
                                             std::uint64_t base_seed, int threads = 0);

/// CSV schema: echo comment lines, then the header
/// `variant,generation,mean_best,std_best,runs`, then one row per generation.
void write_csv(const ExperimentResult& result, const std::filesystem::path& path);

/// Parses a file written by write_csv: returns the result (echo included).
ExperimentResult read_csv(const std::filesystem::path& path);

/// Gnuplot script rendering every variant's mean_best per generation with a
/// +/- one standard deviation band, reading from the given CSV files.
void emit_plot_script(std::span<const ExperimentResult> results,
                      std::span<const std::string> csv_files, const std::string& experiment,
                      bool log_scale_y, const std::filesystem::path& path);

} // namespace evodiv
