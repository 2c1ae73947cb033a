#pragma once

#include <cstddef>
#include <variant>
#include <vector>

#include "evodiv/error.hpp"
#include "evodiv/rng.hpp"

namespace evodiv {

using RealVector = std::vector<double>;
using IntVector = std::vector<int>;

/// A genome is either a real vector with per-gene closed bounds or an integer
/// vector with a per-gene alphabet {1..K}.
using Genome = std::variant<RealVector, IntVector>;

/// Closed interval [lo, hi] admissible for one real gene.
struct GeneBounds {
    double lo = 0.0;
    double hi = 1.0;
    double width() const { return hi - lo; }
    bool operator==(const GeneBounds&) const = default;
};

struct RealSchema {
    std::vector<GeneBounds> bounds;
    bool operator==(const RealSchema&) const = default;
};

/// Gene i takes integer values in {1, ..., cardinality[i]}.
struct IntSchema {
    std::vector<int> cardinality;
    bool operator==(const IntSchema&) const = default;
};

/// Declares a problem's genome layout and admissible gene values. All gene
/// sampling goes through here so operators cannot step outside the bounds.
class GenomeSchema {
  public:
    GenomeSchema() = default;
    explicit GenomeSchema(RealSchema real) : schema_(std::move(real)) {}
    explicit GenomeSchema(IntSchema ints) : schema_(std::move(ints)) {}

    /// Uniform real schema: dimension genes, all on [lo, hi].
    static GenomeSchema uniform_real(std::size_t dimension, double lo, double hi);
    /// Uniform integer schema: dimension genes, all on {1..cardinality}.
    static GenomeSchema uniform_int(std::size_t dimension, int cardinality);

    std::size_t dimension() const;
    bool is_real() const { return std::holds_alternative<RealSchema>(schema_); }

    const RealSchema& real() const;
    const IntSchema& ints() const;

    /// Fresh genome with every gene drawn uniformly within its bounds/alphabet.
    Genome sample(Rng& rng) const;

    /// Re-draws gene `index` uniformly; all other genes untouched.
    void resample_gene(Genome& genome, std::size_t index, Rng& rng) const;

    /// True when the genome matches this schema in shape and every gene lies
    /// within its declared bounds/alphabet.
    bool contains(const Genome& genome) const;

    bool operator==(const GenomeSchema&) const = default;

  private:
    std::variant<RealSchema, IntSchema> schema_;
};

std::size_t genome_size(const Genome& genome);

} // namespace evodiv
