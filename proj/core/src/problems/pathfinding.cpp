#include "evodiv/problems/pathfinding.hpp"

#include <algorithm>

namespace evodiv {

bool segment_intersects_rect(double ax, double ay, double bx, double by, const Rect& rect) {
    // Liang-Barsky clip of the parametric segment against the closed slab on
    // each axis; non-empty [t0, t1] within [0, 1] means contact.
    double t0 = 0.0;
    double t1 = 1.0;
    const double d[2] = {bx - ax, by - ay};
    const double p[2] = {ax, ay};
    const double lo[2] = {rect.x0, rect.y0};
    const double hi[2] = {rect.x1, rect.y1};
    for (int axis = 0; axis < 2; ++axis) {
        if (d[axis] == 0.0) {
            if (p[axis] < lo[axis] || p[axis] > hi[axis])
                return false;
            continue;
        }
        double enter = (lo[axis] - p[axis]) / d[axis];
        double exit = (hi[axis] - p[axis]) / d[axis];
        if (enter > exit)
            std::swap(enter, exit);
        t0 = std::max(t0, enter);
        t1 = std::min(t1, exit);
        if (t0 > t1)
            return false;
    }
    return true;
}

void PathfindingWorld::validate() const {
    if (horizon < 1)
        throw ConfigError("pathfinding: horizon must be at least 1");
    if (step_bound <= 0.0)
        throw ConfigError("pathfinding: step_bound must be positive");
    if (obstacle.x0 > obstacle.x1 || obstacle.y0 > obstacle.y1)
        throw ConfigError("pathfinding: obstacle rectangle is inverted");
    if (!room.contains(start_x, start_y))
        throw ConfigError("pathfinding: start lies outside the room");
    if (obstacle.contains(start_x, start_y))
        throw ConfigError("pathfinding: start lies inside the obstacle");
    if (goal.contains(start_x, start_y))
        throw ConfigError("pathfinding: start lies inside the goal");
    const bool disjoint = obstacle.x1 < goal.x0 || goal.x1 < obstacle.x0 ||
                          obstacle.y1 < goal.y0 || goal.y1 < obstacle.y0;
    if (!disjoint)
        throw ConfigError("pathfinding: goal and obstacle overlap");
    if (obstacle.x0 <= room.x0 || obstacle.x1 >= room.x1 || obstacle.y0 <= room.y0 ||
        obstacle.y1 >= room.y1)
        throw ConfigError("pathfinding: obstacle must lie strictly inside the room");
}

SimulationResult simulate(const PathfindingWorld& world, std::span<const double> plan) {
    EVODIV_REQUIRE(plan.size() == static_cast<std::size_t>(2 * world.horizon),
                   "pathfinding: plan length must be 2 * horizon");
    SimulationResult result;
    double x = world.start_x;
    double y = world.start_y;
    result.positions.reserve(static_cast<std::size_t>(world.horizon) + 1);
    result.positions.emplace_back(x, y);
    for (int step = 0; step < world.horizon; ++step) {
        const double nx = x + plan[static_cast<std::size_t>(2 * step)];
        const double ny = y + plan[static_cast<std::size_t>(2 * step + 1)];
        const bool leaves_room = !world.room.contains(nx, ny);
        const bool hits_obstacle = segment_intersects_rect(x, y, nx, ny, world.obstacle);
        if (leaves_room || hits_obstacle) {
            ++result.illegal_steps;
            result.reward += world.illegal_penalty;
        } else {
            x = nx;
            y = ny;
        }
        if (world.goal.contains(x, y)) {
            ++result.goal_steps;
            result.reward += world.goal_reward;
        }
        result.positions.emplace_back(x, y);
    }
    return result;
}

PathfindingProblem::PathfindingProblem(PathfindingWorld world)
    : world_(world), schema_(GenomeSchema::uniform_real(static_cast<std::size_t>(2 * world.horizon),
                                                        -world.step_bound, world.step_bound)) {
    world_.validate();
}

double PathfindingProblem::evaluate(const Genome& genome) const {
    const auto& plan = std::get<RealVector>(genome);
    return simulate(world_, plan).reward;
}

} // namespace evodiv
