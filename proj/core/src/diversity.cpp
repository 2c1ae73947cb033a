#include "evodiv/diversity.hpp"

#include <cmath>
#include <string>

namespace evodiv {

void validate(const DiversityStrategy& s) {
    if (s.lambda < 0.0)
        throw ConfigError("lambda must be non-negative");
    if (s.sample_size < 1)
        throw ConfigError("sample_k must be at least 1");
    switch (s.mode) {
    case DiversityMode::Sharing:
        if (s.sigma <= 0.0)
            throw ConfigError("sigma must be positive");
        if (s.alpha <= 0.0)
            throw ConfigError("alpha must be positive");
        break;
    case DiversityMode::Inherited:
        if (!(s.kappa > 0.0 && s.kappa < 1.0))
            throw ConfigError("kappa must lie in (0, 1)");
        break;
    case DiversityMode::ExactGenealogical:
        if (!(s.parent_step > 0.0 && s.parent_step <= s.unrelated_cap))
            throw ConfigError("step_r and cap_t must satisfy 0 < r <= t");
        break;
    case DiversityMode::Genealogical:
        if (s.tag_length < 1)
            throw ConfigError("tau must be at least 1");
        break;
    default:
        break;
    }
}

const char* to_string(DiversityMode mode) {
    switch (mode) {
    case DiversityMode::None: return "none";
    case DiversityMode::Sharing: return "sharing";
    case DiversityMode::Distance: return "distance";
    case DiversityMode::DistanceRandomized: return "distance_randomized";
    case DiversityMode::Inherited: return "inherited";
    case DiversityMode::ExactGenealogical: return "exact_genealogical";
    case DiversityMode::Genealogical: return "genealogical";
    }
    return "?";
}

DiversityMode diversity_mode_from_string(const std::string& name) {
    for (DiversityMode mode :
         {DiversityMode::None, DiversityMode::Sharing, DiversityMode::Distance,
          DiversityMode::DistanceRandomized, DiversityMode::Inherited,
          DiversityMode::ExactGenealogical, DiversityMode::Genealogical})
        if (name == to_string(mode))
            return mode;
    throw ConfigError("unknown diversity mode: " + name);
}

namespace {

/// Bonus adds lambda*v toward the optimization goal; penalty shifts by
/// lambda*(v-1), i.e. punishes low diversity instead of rewarding high.
double apply_weight(double objective, double v, double lambda, RewardMode reward,
                    Direction direction) {
    const double term = reward == RewardMode::Bonus ? v : v - 1.0;
    return direction == Direction::Maximize ? objective + lambda * term
                                            : objective - lambda * term;
}

} // namespace

double fitness_sharing(std::size_t self, std::span<const Individual> pool, double alpha,
                       double sigma, DistanceKind kind, const GenomeSchema& schema,
                       Direction direction, EvalCounters* counters) {
    EVODIV_REQUIRE(self < pool.size(), "fitness_sharing: index out of range");
    if (sigma <= 0.0)
        throw ConfigError("sigma must be positive");
    double niche = 1.0; // self term: sh(x, x) = 1
    for (std::size_t i = 0; i < pool.size(); ++i) {
        if (i == self)
            continue;
        const double d = genome_distance(pool[self].genome, pool[i].genome, kind, schema);
        if (counters)
            ++counters->distance_evaluations;
        if (d < sigma)
            niche += 1.0 - std::pow(d / sigma, alpha);
    }
    const double g = pool[self].objective;
    return direction == Direction::Maximize ? g / niche : g * niche;
}

double distance_fitness(std::size_t self, std::span<const Individual> pool, double lambda,
                        DistanceKind kind, const GenomeSchema& schema, int sample_size,
                        RewardMode reward, Direction direction, Rng& rng,
                        EvalCounters* counters) {
    const double v = diversity_term(
        self, pool,
        [&](const Individual& a, const Individual& b) {
            if (counters)
                ++counters->distance_evaluations;
            return genome_distance(a.genome, b.genome, kind, schema);
        },
        sample_size, rng);
    return apply_weight(pool[self].objective, v, lambda, reward, direction);
}

double inherited_fitness(const Individual& individual, double kappa) {
    EVODIV_REQUIRE(kappa > 0.0 && kappa < 1.0, "inherited_fitness: kappa must lie in (0, 1)");
    return (1.0 - kappa) * individual.objective + kappa * individual.inherited_h;
}

double exact_genealogical_fitness(std::size_t self, std::span<const Individual> pool,
                                  double lambda, const GenealogyLedger& ledger, int sample_size,
                                  RewardMode reward, Direction direction, Rng& rng) {
    const double cap = ledger.unrelated_cap();
    const double v = diversity_term(
        self, pool,
        [&](const Individual& a, const Individual& b) {
            return ledger.distance(a.id, b.id) / cap;
        },
        sample_size, rng);
    return apply_weight(pool[self].objective, v, lambda, reward, direction);
}

double genealogical_fitness(std::size_t self, std::span<const Individual> pool, double lambda,
                            int sample_size, RewardMode reward, Direction direction, Rng& rng,
                            EvalCounters* counters) {
    const double v = diversity_term(
        self, pool,
        [&](const Individual& a, const Individual& b) {
            EVODIV_REQUIRE(!a.tag.empty() && !b.tag.empty(),
                           "genealogical fitness needs tags on every individual");
            if (counters)
                ++counters->distance_evaluations;
            return hamming_distance_normalized(a.tag, b.tag);
        },
        sample_size, rng);
    return apply_weight(pool[self].objective, v, lambda, reward, direction);
}

void compute_population_fitness(std::span<Individual> pool, const DiversityStrategy& strategy,
                                const Problem& problem, const GenealogyLedger* ledger, Rng& rng,
                                EvalCounters& counters) {
    const Direction direction = problem.direction();
    const GenomeSchema& schema = problem.schema();
    std::span<const Individual> view(pool.data(), pool.size());
    const int exact_sample = static_cast<int>(pool.size()); // covers all peers

    switch (strategy.mode) {
    case DiversityMode::None:
        for (auto& individual : pool)
            individual.fitness = individual.objective;
        break;
    case DiversityMode::Sharing:
        for (std::size_t i = 0; i < pool.size(); ++i)
            pool[i].fitness = fitness_sharing(i, view, strategy.alpha, strategy.sigma,
                                              strategy.distance, schema, direction, &counters);
        break;
    case DiversityMode::Distance:
        for (std::size_t i = 0; i < pool.size(); ++i)
            pool[i].fitness =
                distance_fitness(i, view, strategy.lambda, strategy.distance, schema,
                                 exact_sample, strategy.reward, direction, rng, &counters);
        break;
    case DiversityMode::DistanceRandomized:
        for (std::size_t i = 0; i < pool.size(); ++i)
            pool[i].fitness =
                distance_fitness(i, view, strategy.lambda, strategy.distance, schema,
                                 strategy.sample_size, strategy.reward, direction, rng, &counters);
        break;
    case DiversityMode::Inherited:
        for (auto& individual : pool)
            individual.fitness = inherited_fitness(individual, strategy.kappa);
        break;
    case DiversityMode::ExactGenealogical:
        EVODIV_REQUIRE(ledger != nullptr, "exact genealogical mode needs a ledger");
        for (std::size_t i = 0; i < pool.size(); ++i)
            pool[i].fitness =
                exact_genealogical_fitness(i, view, strategy.lambda, *ledger,
                                           strategy.sample_size, strategy.reward, direction, rng);
        break;
    case DiversityMode::Genealogical:
        for (std::size_t i = 0; i < pool.size(); ++i)
            pool[i].fitness = genealogical_fitness(i, view, strategy.lambda, strategy.sample_size,
                                                   strategy.reward, direction, rng, &counters);
        break;
    }
}

} // namespace evodiv
