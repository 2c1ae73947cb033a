#include "evodiv/evolution.hpp"

#include <numeric>

#include "evodiv/migration.hpp"
#include "evodiv/selection.hpp"
#include "evodiv/variation.hpp"

namespace evodiv {

void validate(const EvolutionConfig& config) {
    if (config.population_size < 1)
        throw ConfigError("population size must be at least 1");
    if (config.generations < 0)
        throw ConfigError("generations must be non-negative");
    for (auto [rate, field] : {std::pair{config.mutation_rate, "mutation_rate"},
                               std::pair{config.recombination_rate, "recombination_rate"},
                               std::pair{config.hypermutation_rate, "hypermutation_rate"}})
        if (rate < 0.0 || rate > 1.0)
            throw ConfigError(std::string(field) + " must lie in [0, 1]");
    if (config.tournament_size < 1)
        throw ConfigError("tournament size must be at least 1");
    if (config.ensemble) {
        if (config.ensemble->subpopulation_count < 2)
            throw ConfigError("subpopulations must be at least 2");
        if (config.ensemble->subpopulation_count > config.population_size)
            throw ConfigError("subpopulations cannot exceed the population size");
        if (config.ensemble->migration_rate < 0.0 || config.ensemble->migration_rate > 1.0)
            throw ConfigError("migration_rate must lie in [0, 1]");
    }
}

namespace {

int tag_length_for(const DiversityStrategy& strategy) {
    return strategy.uses_tags() ? strategy.tag_length : 0;
}

/// Ledger registration and the inherited-fitness snapshot must happen at
/// breeding time, before the child joins the pool.
void finalize_child(Individual& child, const std::vector<Individual>& pool,
                    const DiversityStrategy& strategy, GenealogyLedger& ledger) {
    if (strategy.uses_ledger())
        ledger.register_child(child, pool);
    if (strategy.mode == DiversityMode::Inherited)
        child.fitness = inherited_fitness(child, strategy.kappa);
}

/// Runs the variation/fitness/selection pipeline on one subpopulation's
/// members and returns the survivors (same count as the input).
std::vector<Individual> evolve_group(std::vector<Individual> pool, const EvolutionConfig& config,
                                     const DiversityStrategy& strategy, const Problem& problem,
                                     RunContext& context, GenerationTrace* trace) {
    const auto group_size = pool.size();
    const int tag_length = tag_length_for(strategy);
    auto phase = [&](const char* name) {
        if (trace)
            trace->phases.emplace_back(name);
    };

    // Recombination: each member pairs with a uniform other member.
    for (std::size_t i = 0; i < group_size; ++i) {
        if (!context.rng.bernoulli(config.recombination_rate))
            continue;
        if (group_size == 1)
            continue; // no partner available
        std::size_t partner = context.rng.uniform_index(group_size - 1);
        if (partner >= i)
            ++partner;
        Individual child =
            uniform_recombination(pool[i], pool[partner], problem, context.rng, context.ids);
        finalize_child(child, pool, strategy, context.ledger);
        pool.push_back(std::move(child));
    }
    phase("recombination");

    // Mutation over a snapshot of the pool built so far.
    const std::size_t pool_after_recombination = pool.size();
    for (std::size_t i = 0; i < pool_after_recombination; ++i) {
        if (!context.rng.bernoulli(config.mutation_rate))
            continue;
        Individual child = single_spot_mutation(pool[i], problem, context.rng, context.ids);
        finalize_child(child, pool, strategy, context.ledger);
        pool.push_back(std::move(child));
    }
    phase("mutation");

    // Hypermutation: fresh randoms, one Bernoulli trial per population slot.
    const std::size_t before_hyper = pool.size();
    append_hypermutants(pool, static_cast<int>(group_size), config.hypermutation_rate, problem,
                        tag_length, context.rng, context.ids);
    if (strategy.mode == DiversityMode::Inherited)
        for (std::size_t i = before_hyper; i < pool.size(); ++i)
            pool[i].fitness = inherited_fitness(pool[i], strategy.kappa);
    phase("hypermutation");

    context.counters.objective_evaluations += pool.size() - group_size;
    if (trace)
        trace->pool_size += pool.size();

    compute_population_fitness(pool, strategy, problem,
                               strategy.uses_ledger() ? &context.ledger : nullptr, context.rng,
                               context.counters);
    phase("fitness");

    auto survivors = tournament_select(pool, static_cast<int>(group_size),
                                       config.tournament_size, problem.direction(), context.rng);
    phase("selection");
    return survivors;
}

GenerationStats stats_row(const Population& population, const EvalCounters& counters,
                          Direction direction) {
    GenerationStats row;
    row.generation = population.generation;
    row.distance_evaluations = counters.distance_evaluations;
    row.objective_evaluations = counters.objective_evaluations;
    double best = population.members.front().objective;
    double sum = 0.0;
    for (const Individual& individual : population.members) {
        sum += individual.objective;
        if (better(individual.objective, best, direction))
            best = individual.objective;
    }
    row.best_objective = best;
    row.mean_objective = sum / static_cast<double>(population.members.size());
    return row;
}

} // namespace

Population make_initial_population(const EvolutionConfig& config,
                                   const DiversityStrategy& strategy, const Problem& problem,
                                   RunContext& context) {
    Population population = init_population(problem, config.population_size,
                                            tag_length_for(strategy), context.rng, context.ids);
    context.counters.objective_evaluations += population.members.size();
    if (config.ensemble)
        partition_population(population, config.ensemble->subpopulation_count);
    if (population.partitioned()) {
        for (int group = 0; group < population.subpopulation_count; ++group) {
            const auto indices = subpopulation_indices(population, group);
            std::vector<Individual> members;
            members.reserve(indices.size());
            for (std::size_t index : indices)
                members.push_back(population.members[index]);
            compute_population_fitness(members, strategy, problem,
                                       strategy.uses_ledger() ? &context.ledger : nullptr,
                                       context.rng, context.counters);
            for (std::size_t i = 0; i < indices.size(); ++i)
                population.members[indices[i]].fitness = members[i].fitness;
        }
    } else {
        compute_population_fitness(population.members, strategy, problem,
                                   strategy.uses_ledger() ? &context.ledger : nullptr,
                                   context.rng, context.counters);
    }
    return population;
}

void evolve_generation(Population& population, const EvolutionConfig& config,
                       const DiversityStrategy& strategy, const Problem& problem,
                       RunContext& context, GenerationTrace* trace) {
    EVODIV_REQUIRE(!population.members.empty(), "evolve_generation on an empty population");
    const auto distance_before = context.counters.distance_evaluations;
    const auto objective_before = context.counters.objective_evaluations;

    if (population.partitioned()) {
        std::vector<Individual> next;
        std::vector<int> next_assignment;
        next.reserve(population.members.size());
        next_assignment.reserve(population.members.size());
        for (int group = 0; group < population.subpopulation_count; ++group) {
            std::vector<Individual> pool;
            for (std::size_t index : subpopulation_indices(population, group))
                pool.push_back(population.members[index]);
            auto survivors =
                evolve_group(std::move(pool), config, strategy, problem, context, trace);
            for (auto& individual : survivors) {
                next.push_back(std::move(individual));
                next_assignment.push_back(group);
            }
        }
        population.members = std::move(next);
        population.subpopulation_of = std::move(next_assignment);
    } else {
        population.members = evolve_group(std::move(population.members), config, strategy,
                                          problem, context, trace);
    }

    if (strategy.uses_ledger())
        context.ledger.prune(population.members);

    if (config.ensemble) {
        migrate(population, config.ensemble->migration_rate, context.rng);
        if (trace)
            trace->phases.emplace_back("migration");
    }

    if (trace) {
        trace->distance_evaluations = context.counters.distance_evaluations - distance_before;
        trace->objective_evaluations = context.counters.objective_evaluations - objective_before;
    }
    ++population.generation;
}

RunRecord run_evolution(const EvolutionConfig& config, const DiversityStrategy& strategy,
                        const Problem& problem) {
    validate(config);
    validate(strategy);
    if (problem.dimension() == 0)
        throw ConfigError("problem has empty dimension");

    RunContext context(config, strategy);
    Population population = make_initial_population(config, strategy, problem, context);

    RunRecord record;
    record.seed = config.seed;
    record.rows.reserve(static_cast<std::size_t>(config.generations) + 1);
    record.rows.push_back(stats_row(population, context.counters, problem.direction()));
    for (int generation = 0; generation < config.generations; ++generation) {
        evolve_generation(population, config, strategy, problem, context);
        record.rows.push_back(stats_row(population, context.counters, problem.direction()));
    }
    return record;
}

} // namespace evodiv
