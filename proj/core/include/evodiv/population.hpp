#pragma once

#include <vector>

#include "evodiv/individual.hpp"

namespace evodiv {

/// Generation-stamped collection of individuals, optionally partitioned into
/// subpopulations for the island model.
struct Population {
    std::vector<Individual> members;
    int generation = 0;
    int subpopulation_count = 0;     ///< 0 = unpartitioned
    std::vector<int> subpopulation_of; ///< parallel to members when partitioned

    bool partitioned() const { return subpopulation_count > 0; }
    bool operator==(const Population&) const = default;
};

/// Balanced group sizes, largest first: (100, 3) -> {34, 33, 33}.
std::vector<int> balanced_group_sizes(int total, int groups);

/// Assigns members to `groups` contiguous blocks of balanced size.
void partition_population(Population& population, int groups);

/// Current size of each subpopulation. Requires a partitioned population.
std::vector<int> subpopulation_sizes(const Population& population);

/// Member indices belonging to subpopulation `group`.
std::vector<std::size_t> subpopulation_indices(const Population& population, int group);

} // namespace evodiv
