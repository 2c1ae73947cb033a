#pragma once

#include <vector>

#include "evodiv/individual.hpp"
#include "evodiv/population.hpp"
#include "evodiv/problem.hpp"
#include "evodiv/rng.hpp"

namespace evodiv {

/// Fresh individual: genes sampled uniformly within bounds, objective
/// evaluated, random tag of `tag_length` bits (0 = no tag).
Individual random_individual(const Problem& problem, int tag_length, BirthKind kind, Rng& rng,
                             IdSource& ids);

/// Size uniformly random individuals at generation 0 with unique ids.
Population init_population(const Problem& problem, int size, int tag_length, Rng& rng,
                           IdSource& ids);

/// Child identical to the parent except one uniformly chosen gene, re-sampled
/// uniformly within its bounds. The tag, when present, mirrors the operator:
/// exactly one uniformly chosen bit flips.
Individual single_spot_mutation(const Individual& parent, const Problem& problem, Rng& rng,
                                IdSource& ids);

/// Each child gene comes from either parent with probability 0.5,
/// independently per position; tag bits cross over the same way.
/// Captures inherited_h = (f(a) + f(b)) / 2 at breeding time.
Individual uniform_recombination(const Individual& a, const Individual& b, const Problem& problem,
                                 Rng& rng, IdSource& ids);

/// For each of `slots` population slots independently with probability
/// `rate`, appends a freshly random individual to the pool.
/// Returns how many were added.
int append_hypermutants(std::vector<Individual>& pool, int slots, double rate,
                        const Problem& problem, int tag_length, Rng& rng, IdSource& ids);

} // namespace evodiv
