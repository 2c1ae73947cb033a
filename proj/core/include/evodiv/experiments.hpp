#pragma once

#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "evodiv/harness.hpp"
#include "evodiv/problems/pathfinding.hpp"

namespace evodiv {

/// Fully resolved experiment: problem parameters, evolution configuration,
/// strategy hyperparameters, run counts. Every field round-trips through the
/// key=value echo written into result files.
struct ExperimentSetup {
    std::string experiment = "schwefel"; ///< schwefel | pathfinding | routing | custom
    std::string problem = "schwefel";    ///< underlying problem
    // problem parameters
    int dimension = 8;              ///< schwefel
    Rect obstacle{0.25, 0.45, 0.75, 0.55}; ///< pathfinding
    std::uint64_t routing_seed = 1; ///< routing
    int tasks = 12;
    int stations = 5;
    // evolution and diversity hyperparameters
    EvolutionConfig evolution; ///< per-run seeds overwrite evolution.seed
    int subpopulations = 3;    ///< used by the ensemble variant
    double migration_rate = 0.1;
    DiversityStrategy strategy; ///< mode is overwritten per variant
    // harness
    int runs = 20;
    int paper_scale_runs = 100;
    std::uint64_t base_seed = 1;
    bool log_scale_y = true;

    bool operator==(const ExperimentSetup&) const = default;
};

/// The eight algorithm variants, in canonical order.
const std::vector<std::string>& variant_names();

/// Paper-default setup for schwefel, pathfinding, routing, or custom
/// (custom starts from the given problem's defaults).
ExperimentSetup default_setup(const std::string& experiment,
                              const std::string& problem = "schwefel");

std::shared_ptr<const Problem> make_problem(const ExperimentSetup& setup);

/// Resolves a variant name against the setup; ConfigError on unknown names.
Variant make_variant(const ExperimentSetup& setup, const std::string& name);

/// Ordered key=value dump that suffices to replay this variant exactly.
std::vector<std::pair<std::string, std::string>> config_echo(const ExperimentSetup& setup,
                                                             const std::string& variant_name);

/// Optional overrides for every echo key; unset fields keep defaults.
struct OverrideSet {
    std::optional<std::string> experiment, problem, variants, reward_mode, distance, obstacle;
    std::optional<int> population, generations, tournament, subpopulations, tau, sample_k,
        dimension, tasks, stations, runs;
    std::optional<double> mutation_rate, recombination_rate, hypermutation_rate, migration_rate,
        lambda, alpha, sigma, kappa, step_r, cap_t;
    std::optional<std::uint64_t> base_seed, routing_seed;
    bool paper_scale = false;
};

/// Fills fields of `into` that are still unset.
void merge_missing(OverrideSet& into, const OverrideSet& from);

/// key=value lines ('#' comments and blank lines ignored); unknown keys are
/// rejected naming the key.
OverrideSet parse_config_lines(std::span<const std::string> lines);
OverrideSet parse_config_file(const std::filesystem::path& path);

/// Applies overrides onto the experiment's defaults; throws ConfigError
/// naming the offending field.
ExperimentSetup build_setup(const OverrideSet& overrides);

/// Variant selection from the overrides (all eight when unset).
std::vector<std::string> selected_variants(const OverrideSet& overrides);

struct ExperimentOutput {
    std::vector<ExperimentResult> results;
    std::vector<std::string> csv_files; ///< relative to the output directory
    std::string plot_file;              ///< empty when no variants ran
};

/// Runs the experiment for the selected variants and writes one CSV per
/// variant plus a plot script into out_dir. An empty selection writes nothing.
ExperimentOutput run_and_write(const ExperimentSetup& setup,
                               std::span<const std::string> variants,
                               const std::filesystem::path& out_dir, int threads = 0);

} // namespace evodiv
