#include "evodiv/variation.hpp"

namespace evodiv {

namespace {

Tag random_tag(int tag_length, Rng& rng) {
    Tag tag(static_cast<std::size_t>(tag_length));
    for (auto& bit : tag)
        bit = static_cast<std::uint8_t>(rng.uniform_below(2));
    return tag;
}

} // namespace

Individual random_individual(const Problem& problem, int tag_length, BirthKind kind, Rng& rng,
                             IdSource& ids) {
    Individual individual;
    individual.id = ids.next();
    individual.genome = problem.schema().sample(rng);
    individual.objective = problem.evaluate(individual.genome);
    individual.lineage.kind = kind;
    if (tag_length > 0)
        individual.tag = random_tag(tag_length, rng);
    return individual;
}

Population init_population(const Problem& problem, int size, int tag_length, Rng& rng,
                           IdSource& ids) {
    if (problem.dimension() == 0)
        throw ConfigError("problem has empty dimension");
    if (size < 1)
        throw ConfigError("population size must be at least 1");
    Population population;
    population.members.reserve(static_cast<std::size_t>(size));
    for (int i = 0; i < size; ++i)
        population.members.push_back(
            random_individual(problem, tag_length, BirthKind::Initial, rng, ids));
    return population;
}

Individual single_spot_mutation(const Individual& parent, const Problem& problem, Rng& rng,
                                IdSource& ids) {
    const auto& schema = problem.schema();
    EVODIV_REQUIRE(schema.contains(parent.genome), "mutation: parent genome violates schema");
    Individual child;
    child.id = ids.next();
    child.genome = parent.genome;
    schema.resample_gene(child.genome, rng.uniform_index(schema.dimension()), rng);
    child.objective = problem.evaluate(child.genome);
    child.lineage = {BirthKind::Mutation, parent.id, kNoParent};
    child.inherited_h = parent.fitness;
    if (!parent.tag.empty()) {
        child.tag = parent.tag;
        child.tag[rng.uniform_index(child.tag.size())] ^= 1;
    }
    return child;
}

Individual uniform_recombination(const Individual& a, const Individual& b, const Problem& problem,
                                 Rng& rng, IdSource& ids) {
    EVODIV_REQUIRE(a.genome.index() == b.genome.index() &&
                       genome_size(a.genome) == genome_size(b.genome),
                   "recombination: parents have mismatched genome schemas");
    EVODIV_REQUIRE(a.tag.size() == b.tag.size(), "recombination: parents have mismatched tags");
    Individual child;
    child.id = ids.next();
    child.genome = a.genome;
    std::visit(
        [&](auto& genes) {
            using Vec = std::decay_t<decltype(genes)>;
            const auto& other = std::get<Vec>(b.genome);
            for (std::size_t i = 0; i < genes.size(); ++i)
                if (rng.uniform_below(2) == 1)
                    genes[i] = other[i];
        },
        child.genome);
    child.objective = problem.evaluate(child.genome);
    child.lineage = {BirthKind::Recombination, a.id, b.id};
    child.inherited_h = (a.fitness + b.fitness) / 2.0;
    if (!a.tag.empty()) {
        child.tag = a.tag;
        for (std::size_t i = 0; i < child.tag.size(); ++i)
            if (rng.uniform_below(2) == 1)
                child.tag[i] = b.tag[i];
    }
    return child;
}

int append_hypermutants(std::vector<Individual>& pool, int slots, double rate,
                        const Problem& problem, int tag_length, Rng& rng, IdSource& ids) {
    EVODIV_REQUIRE(rate >= 0.0 && rate <= 1.0, "hypermutation rate must lie in [0, 1]");
    int added = 0;
    for (int slot = 0; slot < slots; ++slot) {
        if (rng.bernoulli(rate)) {
            pool.push_back(
                random_individual(problem, tag_length, BirthKind::Hypermutation, rng, ids));
            ++added;
        }
    }
    return added;
}

} // namespace evodiv
