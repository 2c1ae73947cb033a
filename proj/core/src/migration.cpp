#include "evodiv/migration.hpp"

#include <utility>
#include <vector>

#include "evodiv/error.hpp"

namespace evodiv {

void migrate(Population& population, double migration_rate, Rng& rng) {
    EVODIV_REQUIRE(population.partitioned() && population.subpopulation_count >= 2,
                   "migration needs a population partitioned into at least 2 subpopulations");
    EVODIV_REQUIRE(migration_rate >= 0.0 && migration_rate <= 1.0,
                   "migration rate must lie in [0, 1]");
    const int groups = population.subpopulation_count;
    auto& assignment = population.subpopulation_of;
    const std::vector<int> origin = assignment;

    for (std::size_t i = 0; i < assignment.size(); ++i) {
        if (!rng.bernoulli(migration_rate))
            continue;
        // Uniform over the other groups: draw in [0, m-2], skip own slot.
        int destination = static_cast<int>(rng.uniform_below(static_cast<std::uint64_t>(groups - 1)));
        if (destination >= assignment[i])
            ++destination;
        assignment[i] = destination;
    }

    // Rebalance surplus back to the balanced target sizes. Candidate moves
    // avoid sending an individual back to its pre-migration group whenever a
    // non-returning move exists.
    const auto targets = balanced_group_sizes(static_cast<int>(assignment.size()), groups);
    std::vector<int> sizes(static_cast<std::size_t>(groups), 0);
    for (int g : assignment)
        ++sizes[static_cast<std::size_t>(g)];

    auto unbalanced = [&] {
        for (int g = 0; g < groups; ++g)
            if (sizes[static_cast<std::size_t>(g)] != targets[static_cast<std::size_t>(g)])
                return true;
        return false;
    };

    while (unbalanced()) {
        std::vector<std::pair<std::size_t, int>> moves;      // (member, destination)
        std::vector<std::pair<std::size_t, int>> returning;  // fallback: back to origin
        for (std::size_t i = 0; i < assignment.size(); ++i) {
            const int from = assignment[i];
            if (sizes[static_cast<std::size_t>(from)] <= targets[static_cast<std::size_t>(from)])
                continue;
            for (int to = 0; to < groups; ++to) {
                if (to == from ||
                    sizes[static_cast<std::size_t>(to)] >= targets[static_cast<std::size_t>(to)])
                    continue;
                (to == origin[i] ? returning : moves).emplace_back(i, to);
            }
        }
        const auto& candidates = moves.empty() ? returning : moves;
        EVODIV_REQUIRE(!candidates.empty(), "migration rebalancing found no legal move");
        const auto [member, to] = candidates[rng.uniform_index(candidates.size())];
        --sizes[static_cast<std::size_t>(assignment[member])];
        ++sizes[static_cast<std::size_t>(to)];
        assignment[member] = to;
    }
}

} // namespace evodiv
