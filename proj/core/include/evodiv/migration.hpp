#pragma once

#include "evodiv/population.hpp"
#include "evodiv/rng.hpp"

namespace evodiv {

/// Random migration between subpopulations: each individual independently
/// with probability `migration_rate` moves to a uniformly chosen different
/// subpopulation; surplus individuals are then randomly reassigned until
/// every group is back at its balanced size.
void migrate(Population& population, double migration_rate, Rng& rng);

} // namespace evodiv
