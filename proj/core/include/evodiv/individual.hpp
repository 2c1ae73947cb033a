#pragma once

#include <cstdint>
#include <vector>

#include "evodiv/genome.hpp"

namespace evodiv {

/// Genealogy tag: a bitstring carried alongside the genome, transformed by
/// the same variation operators but never selected on directly.
using Tag = std::vector<std::uint8_t>;

enum class BirthKind : std::uint8_t { Initial, Mutation, Recombination, Hypermutation };

inline constexpr std::uint64_t kNoParent = ~std::uint64_t{0};

struct Lineage {
    BirthKind kind = BirthKind::Initial;
    std::uint64_t parent_a = kNoParent;
    std::uint64_t parent_b = kNoParent;
    bool operator==(const Lineage&) const = default;
};

struct Individual {
    std::uint64_t id = 0;
    Genome genome;
    double objective = 0.0; ///< cached g(genome), coherent at all times
    double fitness = 0.0;   ///< strategy-dependent; may change without genome change
    Tag tag;                ///< empty unless a genealogical mode is active
    Lineage lineage;
    double inherited_h = 0.0; ///< parents' fitness snapshot taken at breeding time

    bool operator==(const Individual&) const = default;
};

/// Monotone source of run-unique individual ids.
struct IdSource {
    std::uint64_t next_id = 0;
    std::uint64_t next() { return next_id++; }
    bool operator==(const IdSource&) const = default;
};

} // namespace evodiv
