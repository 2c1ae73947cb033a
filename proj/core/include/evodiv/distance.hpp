#pragma once

#include <span>

#include "evodiv/genome.hpp"
#include "evodiv/individual.hpp"

namespace evodiv {

enum class DistanceKind { Manhattan, Hamming };

/// Bounds-normalized Manhattan distance between real genomes:
/// (1/n) * sum_i |a_i - b_i| / (hi_i - lo_i), in [0, 1].
/// Integer genomes are rejected; use hamming_distance_normalized instead.
double manhattan_distance_normalized(const Genome& a, const Genome& b, const RealSchema& bounds);

/// Fraction of differing positions, in [0, 1]. Applies identically to integer
/// genomes and genealogy tags.
template <class T>
double hamming_fraction(std::span<const T> a, std::span<const T> b) {
    EVODIV_REQUIRE(a.size() == b.size(), "hamming distance needs equal lengths");
    if (a.empty())
        return 0.0;
    std::size_t differing = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        differing += a[i] != b[i] ? 1 : 0;
    return static_cast<double>(differing) / static_cast<double>(a.size());
}

inline double hamming_distance_normalized(const IntVector& a, const IntVector& b) {
    return hamming_fraction<int>(a, b);
}

inline double hamming_distance_normalized(const Tag& a, const Tag& b) {
    return hamming_fraction<std::uint8_t>(a, b);
}

/// Normalized distance between two genomes under the configured kind.
/// Hamming on real genomes compares exact gene values; Manhattan on integer
/// genomes is a contract violation.
double genome_distance(const Genome& a, const Genome& b, DistanceKind kind,
                       const GenomeSchema& schema);

} // namespace evodiv
