#pragma once

#include <optional>
#include <string>
#include <vector>

#include "evodiv/diversity.hpp"
#include "evodiv/genealogy.hpp"
#include "evodiv/population.hpp"
#include "evodiv/problem.hpp"
#include "evodiv/record.hpp"
#include "evodiv/rng.hpp"

namespace evodiv {

struct EnsembleConfig {
    int subpopulation_count = 3;
    double migration_rate = 0.1;
    bool operator==(const EnsembleConfig&) const = default;
};

struct EvolutionConfig {
    int population_size = 30;
    int generations = 300;
    double mutation_rate = 0.1;
    double recombination_rate = 0.3;
    double hypermutation_rate = 0.1;
    int tournament_size = 3;
    std::optional<EnsembleConfig> ensemble;
    std::uint64_t seed = 0;
    bool operator==(const EvolutionConfig&) const = default;
};

/// Throws ConfigError naming the offending field.
void validate(const EvolutionConfig& config);

/// What one evolve_generation call did, for tests and instrumentation.
/// Evaluation counts are this generation's deltas, not cumulative.
struct GenerationTrace {
    std::vector<std::string> phases;
    std::size_t pool_size = 0;
    std::uint64_t distance_evaluations = 0;
    std::uint64_t objective_evaluations = 0;
};

/// Run-owned mutable state besides the population itself: the single rng all
/// randomness flows through, the id source, cumulative evaluation counters,
/// and the genealogy ledger (used only by the exact-genealogical mode).
struct RunContext {
    RunContext(const EvolutionConfig& config, const DiversityStrategy& strategy)
        : rng(config.seed), ledger(strategy.unrelated_cap, strategy.parent_step) {}

    Rng rng;
    IdSource ids;
    EvalCounters counters;
    GenealogyLedger ledger;
};

/// Initialized generation-0 population: uniform random members, partitioned
/// when an ensemble is configured, fitness already computed.
Population make_initial_population(const EvolutionConfig& config,
                                   const DiversityStrategy& strategy, const Problem& problem,
                                   RunContext& context);

/// One generation, per subpopulation (or the whole population):
/// recombination, mutation, hypermutation, pool fitness, selection back to
/// size — then migration when an ensemble is configured.
void evolve_generation(Population& population, const EvolutionConfig& config,
                       const DiversityStrategy& strategy, const Problem& problem,
                       RunContext& context, GenerationTrace* trace = nullptr);

/// Full run: init plus config.generations evolved generations, with
/// per-generation statistics. Deterministic in config.seed.
RunRecord run_evolution(const EvolutionConfig& config, const DiversityStrategy& strategy,
                        const Problem& problem);

} // namespace evodiv
