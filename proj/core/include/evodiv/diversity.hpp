#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "evodiv/distance.hpp"
#include "evodiv/genealogy.hpp"
#include "evodiv/individual.hpp"
#include "evodiv/problem.hpp"
#include "evodiv/rng.hpp"

namespace evodiv {

enum class DiversityMode {
    None,
    Sharing,
    Distance,
    DistanceRandomized,
    Inherited,
    ExactGenealogical,
    Genealogical,
};

/// Bonus rewards high diversity in the optimization direction; penalty moves
/// low-diversity individuals away from it. The two only differ by the
/// constant shift lambda * (v - 1) vs lambda * v.
enum class RewardMode { Bonus, Penalty };

/// Fitness-combination rule plus its hyperparameters. Fields irrelevant to
/// the active mode are ignored.
struct DiversityStrategy {
    DiversityMode mode = DiversityMode::None;
    double lambda = 0.0;        ///< diversity weight
    double alpha = 2.0;         ///< sharing exponent
    double sigma = 1.0;         ///< sharing radius (1 = whole normalized domain)
    double kappa = 0.2;         ///< inherited-fitness weight, in (0, 1)
    double parent_step = 1.0;   ///< genealogical step r
    double unrelated_cap = 16.0; ///< genealogical cap t
    int tag_length = 16;        ///< tau
    int sample_size = 5;        ///< |S(P)| for the randomized estimators
    RewardMode reward = RewardMode::Bonus;
    DistanceKind distance = DistanceKind::Manhattan;

    bool uses_tags() const {
        return mode == DiversityMode::Genealogical || mode == DiversityMode::ExactGenealogical;
    }
    bool uses_ledger() const { return mode == DiversityMode::ExactGenealogical; }

    bool operator==(const DiversityStrategy&) const = default;
};

/// Throws ConfigError naming the offending hyperparameter.
void validate(const DiversityStrategy& strategy);

const char* to_string(DiversityMode mode);
DiversityMode diversity_mode_from_string(const std::string& name);

/// Evaluation bookkeeping for the complexity claims: cumulative counts of
/// objective calls and pairwise distance computations.
struct EvalCounters {
    std::uint64_t objective_evaluations = 0;
    std::uint64_t distance_evaluations = 0;
    bool operator==(const EvalCounters&) const = default;
};

/// Mean distance from pool[self] to a uniform without-replacement sample of
/// min(sample_size, |pool|-1) peers; the full-population mean when the sample
/// covers all peers (then no randomness is consumed). Returns 0 with no peers.
template <class DistanceFn>
double diversity_term(std::size_t self, std::span<const Individual> pool, DistanceFn&& dist,
                      int sample_size, Rng& rng) {
    EVODIV_REQUIRE(self < pool.size(), "diversity_term: index out of range");
    EVODIV_REQUIRE(sample_size >= 1, "diversity_term: sample size must be at least 1");
    const std::size_t peers = pool.size() - 1;
    if (peers == 0)
        return 0.0;
    double sum = 0.0;
    if (static_cast<std::size_t>(sample_size) >= peers) {
        for (std::size_t i = 0; i < pool.size(); ++i)
            if (i != self)
                sum += dist(pool[self], pool[i]);
        return sum / static_cast<double>(peers);
    }
    // Partial Fisher-Yates over the peer indices.
    std::vector<std::size_t> indices;
    indices.reserve(peers);
    for (std::size_t i = 0; i < pool.size(); ++i)
        if (i != self)
            indices.push_back(i);
    const auto wanted = static_cast<std::size_t>(sample_size);
    for (std::size_t i = 0; i < wanted; ++i) {
        const std::size_t j = i + rng.uniform_index(indices.size() - i);
        std::swap(indices[i], indices[j]);
        sum += dist(pool[self], pool[indices[i]]);
    }
    return sum / static_cast<double>(wanted);
}

/// Shared objective value: g(x) over the niche count (maximization) or times
/// it (minimization). The niche count includes the self term, so it is >= 1.
double fitness_sharing(std::size_t self, std::span<const Individual> pool, double alpha,
                       double sigma, DistanceKind kind, const GenomeSchema& schema,
                       Direction direction, EvalCounters* counters = nullptr);

/// Objective plus lambda-weighted mean genome distance to a peer sample
/// (the exact mean when sample_size covers all peers).
double distance_fitness(std::size_t self, std::span<const Individual> pool, double lambda,
                        DistanceKind kind, const GenomeSchema& schema, int sample_size,
                        RewardMode reward, Direction direction, Rng& rng,
                        EvalCounters* counters = nullptr);

/// Blend of own objective and the parents' fitness snapshot taken at breeding.
double inherited_fitness(const Individual& individual, double kappa);

/// Objective plus lambda-weighted mean ledger distance over a peer sample,
/// normalized by the unrelatedness cap.
double exact_genealogical_fitness(std::size_t self, std::span<const Individual> pool,
                                  double lambda, const GenealogyLedger& ledger, int sample_size,
                                  RewardMode reward, Direction direction, Rng& rng);

/// Objective plus lambda-weighted mean tag Hamming distance over a peer
/// sample. Tags are never selected on directly; they act only through this.
double genealogical_fitness(std::size_t self, std::span<const Individual> pool, double lambda,
                            int sample_size, RewardMode reward, Direction direction, Rng& rng,
                            EvalCounters* counters = nullptr);

/// Applies the strategy's rule to every individual, sequentially in pool
/// order. The ledger is required exactly for the exact-genealogical mode.
void compute_population_fitness(std::span<Individual> pool, const DiversityStrategy& strategy,
                                const Problem& problem, const GenealogyLedger* ledger, Rng& rng,
                                EvalCounters& counters);

} // namespace evodiv
