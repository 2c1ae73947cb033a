#pragma once

#include "evodiv/problem.hpp"

namespace evodiv {

/// Schwefel benchmark on [-500, 500]^n, minimized:
/// g(x) = 418.9828872724339 * n - sum_i x_i * sin(sqrt(|x_i|)).
class SchwefelProblem final : public Problem {
  public:
    static constexpr double kOffsetPerDimension = 418.9828872724339;
    static constexpr double kLowerBound = -500.0;
    static constexpr double kUpperBound = 500.0;

    explicit SchwefelProblem(std::size_t dimension = 8);

    const std::string& name() const override { return name_; }
    Direction direction() const override { return Direction::Minimize; }
    const GenomeSchema& schema() const override { return schema_; }
    double evaluate(const Genome& genome) const override;

  private:
    std::string name_ = "schwefel";
    GenomeSchema schema_;
};

} // namespace evodiv
