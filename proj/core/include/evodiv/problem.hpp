#pragma once

#include <string>

#include "evodiv/genome.hpp"

namespace evodiv {

enum class Direction { Minimize, Maximize };

/// An optimization problem: objective goal function, direction, and genome
/// schema. evaluate() must be pure and deterministic for a fixed instance and
/// is safe to call from any number of threads.
class Problem {
  public:
    virtual ~Problem() = default;

    virtual const std::string& name() const = 0;
    virtual Direction direction() const = 0;
    virtual const GenomeSchema& schema() const = 0;
    virtual double evaluate(const Genome& genome) const = 0;

    std::size_t dimension() const { return schema().dimension(); }
    bool maximize() const { return direction() == Direction::Maximize; }
};

/// True when `a` beats `b` in the given optimization direction.
inline bool better(double a, double b, Direction direction) {
    return direction == Direction::Maximize ? a > b : a < b;
}

} // namespace evodiv
