#pragma once

#include <span>
#include <vector>

#include "evodiv/problem.hpp"

namespace evodiv {

/// Closed axis-aligned rectangle [x0, x1] x [y0, y1].
struct Rect {
    double x0 = 0.0;
    double y0 = 0.0;
    double x1 = 0.0;
    double y1 = 0.0;
    bool contains(double x, double y) const { return x >= x0 && x <= x1 && y >= y0 && y <= y1; }
    bool operator==(const Rect&) const = default;
};

/// True when the segment from (ax, ay) to (bx, by) touches the closed rect.
bool segment_intersects_rect(double ax, double ay, double bx, double by, const Rect& rect);

/// Point robot in a unit room: 10 planned steps of at most 0.3 per axis,
/// +1 reward per step spent in the goal area, -0.1 per illegal step attempt
/// (illegal steps leave the position unchanged).
struct PathfindingWorld {
    Rect room{0.0, 0.0, 1.0, 1.0};
    double start_x = 0.5;
    double start_y = 0.1;
    Rect goal{0.4, 0.8, 0.6, 1.0};
    Rect obstacle{0.25, 0.45, 0.75, 0.55};
    double step_bound = 0.3;
    int horizon = 10;
    double illegal_penalty = -0.1;
    double goal_reward = 1.0;

    void validate() const; ///< throws ConfigError on inconsistent geometry
    bool operator==(const PathfindingWorld&) const = default;
};

struct SimulationResult {
    double reward = 0.0;
    int illegal_steps = 0;
    int goal_steps = 0;
    std::vector<std::pair<double, double>> positions; ///< after each step, start first
};

/// Deterministic rollout of a plan (dx1, dy1, ..., dx_h, dy_h). A step is
/// illegal iff its straight-line segment crosses the obstacle or its endpoint
/// leaves the room.
SimulationResult simulate(const PathfindingWorld& world, std::span<const double> plan);

class PathfindingProblem final : public Problem {
  public:
    explicit PathfindingProblem(PathfindingWorld world = {});

    const std::string& name() const override { return name_; }
    Direction direction() const override { return Direction::Maximize; }
    const GenomeSchema& schema() const override { return schema_; }
    double evaluate(const Genome& genome) const override;

    const PathfindingWorld& world() const { return world_; }

  private:
    std::string name_ = "pathfinding";
    PathfindingWorld world_;
    GenomeSchema schema_;
};

} // namespace evodiv
