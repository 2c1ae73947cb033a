#include "evodiv/selection.hpp"

namespace evodiv {

std::size_t tournament_round(std::span<const Individual> pool, int tournament_size,
                             Direction direction, Rng& rng) {
    EVODIV_REQUIRE(!pool.empty(), "tournament over an empty pool");
    EVODIV_REQUIRE(tournament_size >= 1, "tournament size must be at least 1");
    std::size_t best = rng.uniform_index(pool.size());
    std::uint64_t tied = 1;
    for (int draw = 1; draw < tournament_size; ++draw) {
        const std::size_t candidate = rng.uniform_index(pool.size());
        const double cf = pool[candidate].fitness;
        const double bf = pool[best].fitness;
        if (better(cf, bf, direction)) {
            best = candidate;
            tied = 1;
        } else if (cf == bf) {
            // Reservoir step keeps the winner uniform among tied draws.
            ++tied;
            if (rng.uniform_below(tied) == 0)
                best = candidate;
        }
    }
    return best;
}

std::vector<Individual> tournament_select(std::span<const Individual> pool, int target_size,
                                          int tournament_size, Direction direction, Rng& rng) {
    EVODIV_REQUIRE(target_size >= 1, "selection target must be at least 1");
    std::vector<Individual> selected;
    selected.reserve(static_cast<std::size_t>(target_size));
    for (int i = 0; i < target_size; ++i)
        selected.push_back(pool[tournament_round(pool, tournament_size, direction, rng)]);
    return selected;
}

} // namespace evodiv
