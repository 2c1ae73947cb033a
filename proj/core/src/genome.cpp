#include "evodiv/genome.hpp"

namespace evodiv {

GenomeSchema GenomeSchema::uniform_real(std::size_t dimension, double lo, double hi) {
    RealSchema schema;
    schema.bounds.assign(dimension, GeneBounds{lo, hi});
    return GenomeSchema(std::move(schema));
}

GenomeSchema GenomeSchema::uniform_int(std::size_t dimension, int cardinality) {
    IntSchema schema;
    schema.cardinality.assign(dimension, cardinality);
    return GenomeSchema(std::move(schema));
}

std::size_t GenomeSchema::dimension() const {
    if (is_real())
        return std::get<RealSchema>(schema_).bounds.size();
    return std::get<IntSchema>(schema_).cardinality.size();
}

const RealSchema& GenomeSchema::real() const {
    EVODIV_REQUIRE(is_real(), "schema holds integer genes");
    return std::get<RealSchema>(schema_);
}

const IntSchema& GenomeSchema::ints() const {
    EVODIV_REQUIRE(!is_real(), "schema holds real genes");
    return std::get<IntSchema>(schema_);
}

Genome GenomeSchema::sample(Rng& rng) const {
    if (is_real()) {
        const auto& bounds = real().bounds;
        RealVector values(bounds.size());
        for (std::size_t i = 0; i < bounds.size(); ++i)
            values[i] = rng.uniform_real(bounds[i].lo, bounds[i].hi);
        return values;
    }
    const auto& cardinality = ints().cardinality;
    IntVector values(cardinality.size());
    for (std::size_t i = 0; i < cardinality.size(); ++i)
        values[i] = rng.uniform_int(1, cardinality[i]);
    return values;
}

void GenomeSchema::resample_gene(Genome& genome, std::size_t index, Rng& rng) const {
    EVODIV_REQUIRE(index < dimension(), "gene index out of range");
    if (is_real()) {
        auto& values = std::get<RealVector>(genome);
        const auto& b = real().bounds[index];
        values[index] = rng.uniform_real(b.lo, b.hi);
    } else {
        auto& values = std::get<IntVector>(genome);
        values[index] = rng.uniform_int(1, ints().cardinality[index]);
    }
}

bool GenomeSchema::contains(const Genome& genome) const {
    if (is_real()) {
        const auto* values = std::get_if<RealVector>(&genome);
        if (!values || values->size() != dimension())
            return false;
        const auto& bounds = real().bounds;
        for (std::size_t i = 0; i < values->size(); ++i)
            if ((*values)[i] < bounds[i].lo || (*values)[i] > bounds[i].hi)
                return false;
        return true;
    }
    const auto* values = std::get_if<IntVector>(&genome);
    if (!values || values->size() != dimension())
        return false;
    const auto& cardinality = ints().cardinality;
    for (std::size_t i = 0; i < values->size(); ++i)
        if ((*values)[i] < 1 || (*values)[i] > cardinality[i])
            return false;
    return true;
}

std::size_t genome_size(const Genome& genome) {
    return std::visit([](const auto& values) { return values.size(); }, genome);
}

} // namespace evodiv
