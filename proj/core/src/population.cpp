#include "evodiv/population.hpp"

#include "evodiv/error.hpp"

namespace evodiv {

std::vector<int> balanced_group_sizes(int total, int groups) {
    EVODIV_REQUIRE(total >= 0 && groups >= 1, "balanced_group_sizes needs total >= 0, groups >= 1");
    std::vector<int> sizes(static_cast<std::size_t>(groups), total / groups);
    for (int i = 0; i < total % groups; ++i)
        ++sizes[static_cast<std::size_t>(i)];
    return sizes;
}

void partition_population(Population& population, int groups) {
    EVODIV_REQUIRE(groups >= 2, "partition needs at least 2 subpopulations");
    EVODIV_REQUIRE(static_cast<std::size_t>(groups) <= population.members.size(),
                   "more subpopulations than members");
    const auto sizes = balanced_group_sizes(static_cast<int>(population.members.size()), groups);
    population.subpopulation_count = groups;
    population.subpopulation_of.clear();
    population.subpopulation_of.reserve(population.members.size());
    for (int g = 0; g < groups; ++g)
        population.subpopulation_of.insert(population.subpopulation_of.end(),
                                           static_cast<std::size_t>(sizes[static_cast<std::size_t>(g)]), g);
}

std::vector<int> subpopulation_sizes(const Population& population) {
    EVODIV_REQUIRE(population.partitioned(), "population is not partitioned");
    std::vector<int> sizes(static_cast<std::size_t>(population.subpopulation_count), 0);
    for (int g : population.subpopulation_of)
        ++sizes[static_cast<std::size_t>(g)];
    return sizes;
}

std::vector<std::size_t> subpopulation_indices(const Population& population, int group) {
    EVODIV_REQUIRE(population.partitioned(), "population is not partitioned");
    std::vector<std::size_t> indices;
    for (std::size_t i = 0; i < population.subpopulation_of.size(); ++i)
        if (population.subpopulation_of[i] == group)
            indices.push_back(i);
    return indices;
}

} // namespace evodiv
