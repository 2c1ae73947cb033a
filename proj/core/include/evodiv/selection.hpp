#pragma once

#include <span>
#include <vector>

#include "evodiv/individual.hpp"
#include "evodiv/problem.hpp"
#include "evodiv/rng.hpp"

namespace evodiv {

/// One tournament: the fitness-best of `tournament_size` uniform draws with
/// replacement, ties broken uniformly at random. Returns the pool index.
std::size_t tournament_round(std::span<const Individual> pool, int tournament_size,
                             Direction direction, Rng& rng);

/// target_size independent tournament winners (individuals may repeat).
std::vector<Individual> tournament_select(std::span<const Individual> pool, int target_size,
                                          int tournament_size, Direction direction, Rng& rng);

} // namespace evodiv
