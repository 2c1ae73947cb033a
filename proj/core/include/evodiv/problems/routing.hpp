#pragma once

#include <cstdint>
#include <filesystem>
#include <vector>

#include "evodiv/problem.hpp"

namespace evodiv {

/// Factory floor for the routing problem: a start node S plus
/// tasks * stations workstations, with a symmetric random distance matrix
/// (entries uniform in [0, 100]) fully determined by the instance seed.
class RoutingInstance {
  public:
    explicit RoutingInstance(std::uint64_t seed, int tasks = 12, int stations = 5);

    int tasks() const { return tasks_; }
    int stations() const { return stations_; }
    int node_count() const { return 1 + tasks_ * stations_; }
    std::uint64_t seed() const { return seed_; }

    /// Node index of station `station` (1-based) for task `task` (0-based).
    int station_node(int task, int station) const;

    double distance(int a, int b) const;

    /// Text matrix format: first line node count, then one whitespace-
    /// separated row per node. Round-trips exactly.
    void save(const std::filesystem::path& path) const;
    static RoutingInstance load(const std::filesystem::path& path, int tasks, int stations);

    /// Same floor: tasks, stations, and distance matrix. Seeds are not
    /// compared, so a saved and re-loaded instance equals the original.
    bool operator==(const RoutingInstance& other) const {
        return tasks_ == other.tasks_ && stations_ == other.stations_ && matrix_ == other.matrix_;
    }

  private:
    RoutingInstance() = default;

    std::uint64_t seed_ = 0;
    int tasks_ = 0;
    int stations_ = 0;
    std::vector<double> matrix_; ///< row-major node_count x node_count
};

/// Pick one station per task; objective is the travelled distance of the
/// route S -> w1 -> ... -> wT, minimized.
class RoutingProblem final : public Problem {
  public:
    explicit RoutingProblem(RoutingInstance instance);

    const std::string& name() const override { return name_; }
    Direction direction() const override { return Direction::Minimize; }
    const GenomeSchema& schema() const override { return schema_; }
    double evaluate(const Genome& genome) const override;

    const RoutingInstance& instance() const { return instance_; }

  private:
    std::string name_ = "routing";
    RoutingInstance instance_;
    GenomeSchema schema_;
};

} // namespace evodiv
