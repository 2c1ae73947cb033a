#include "evodiv/distance.hpp"

#include <cmath>

namespace evodiv {

double manhattan_distance_normalized(const Genome& a, const Genome& b, const RealSchema& bounds) {
    const auto* va = std::get_if<RealVector>(&a);
    const auto* vb = std::get_if<RealVector>(&b);
    EVODIV_REQUIRE(va && vb, "manhattan distance needs real-vector genomes");
    EVODIV_REQUIRE(va->size() == vb->size() && va->size() == bounds.bounds.size(),
                   "manhattan distance needs matching schemas");
    if (va->empty())
        return 0.0;
    double sum = 0.0;
    for (std::size_t i = 0; i < va->size(); ++i)
        sum += std::fabs((*va)[i] - (*vb)[i]) / bounds.bounds[i].width();
    return sum / static_cast<double>(va->size());
}

double genome_distance(const Genome& a, const Genome& b, DistanceKind kind,
                       const GenomeSchema& schema) {
    if (kind == DistanceKind::Manhattan)
        return manhattan_distance_normalized(a, b, schema.real());
    if (const auto* va = std::get_if<IntVector>(&a))
        return hamming_distance_normalized(*va, std::get<IntVector>(b));
    return hamming_fraction<double>(std::get<RealVector>(a), std::get<RealVector>(b));
}

} // namespace evodiv
