#include "evodiv/problems/schwefel.hpp"

#include <cmath>

namespace evodiv {

SchwefelProblem::SchwefelProblem(std::size_t dimension)
    : schema_(GenomeSchema::uniform_real(dimension, kLowerBound, kUpperBound)) {
    if (dimension == 0)
        throw ConfigError("schwefel: dimension must be at least 1");
}

double SchwefelProblem::evaluate(const Genome& genome) const {
    const auto& values = std::get<RealVector>(genome);
    EVODIV_REQUIRE(values.size() == dimension(), "schwefel: genome has wrong dimension");
    double sum = 0.0;
    for (double x : values)
        sum += x * std::sin(std::sqrt(std::fabs(x)));
    return kOffsetPerDimension * static_cast<double>(values.size()) - sum;
}

} // namespace evodiv
