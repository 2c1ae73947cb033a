#include "evodiv/problems/routing.hpp"

#include <charconv>
#include <fstream>
#include <string>

#include "evodiv/rng.hpp"

namespace evodiv {

RoutingInstance::RoutingInstance(std::uint64_t seed, int tasks, int stations)
    : seed_(seed), tasks_(tasks), stations_(stations) {
    if (tasks < 1 || stations < 1)
        throw ConfigError("routing: tasks and stations must be at least 1");
    const int n = node_count();
    matrix_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0.0);
    Rng rng(seed);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const double d = rng.uniform_real(0.0, 100.0);
            matrix_[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) +
                    static_cast<std::size_t>(j)] = d;
            matrix_[static_cast<std::size_t>(j) * static_cast<std::size_t>(n) +
                    static_cast<std::size_t>(i)] = d;
        }
    }
}

int RoutingInstance::station_node(int task, int station) const {
    EVODIV_REQUIRE(task >= 0 && task < tasks_, "routing: task index out of range");
    EVODIV_REQUIRE(station >= 1 && station <= stations_, "routing: station out of alphabet");
    return 1 + task * stations_ + (station - 1);
}

double RoutingInstance::distance(int a, int b) const {
    EVODIV_REQUIRE(a >= 0 && a < node_count() && b >= 0 && b < node_count(),
                   "routing: node index out of range");
    return matrix_[static_cast<std::size_t>(a) * static_cast<std::size_t>(node_count()) +
                   static_cast<std::size_t>(b)];
}

namespace {
std::string format_double(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}
} // namespace

void RoutingInstance::save(const std::filesystem::path& path) const {
    std::ofstream out(path);
    if (!out)
        throw ConfigError("routing: cannot open " + path.string() + " for writing");
    const int n = node_count();
    out << n << '\n';
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (j)
                out << ' ';
            out << format_double(distance(i, j));
        }
        out << '\n';
    }
    if (!out)
        throw ConfigError("routing: write failed for " + path.string());
}

RoutingInstance RoutingInstance::load(const std::filesystem::path& path, int tasks, int stations) {
    std::ifstream in(path);
    if (!in)
        throw ConfigError("routing: cannot open " + path.string());
    int n = 0;
    if (!(in >> n))
        throw ConfigError("routing: missing node count in " + path.string());
    if (n != 1 + tasks * stations)
        throw ConfigError("routing: node count in " + path.string() +
                          " does not match tasks * stations");
    RoutingInstance instance;
    instance.tasks_ = tasks;
    instance.stations_ = stations;
    instance.matrix_.resize(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
    for (auto& entry : instance.matrix_)
        if (!(in >> entry))
            throw ConfigError("routing: truncated matrix in " + path.string());
    return instance;
}

RoutingProblem::RoutingProblem(RoutingInstance instance)
    : instance_(std::move(instance)),
      schema_(GenomeSchema::uniform_int(static_cast<std::size_t>(instance_.tasks()),
                                        instance_.stations())) {}

double RoutingProblem::evaluate(const Genome& genome) const {
    const auto& choices = std::get<IntVector>(genome);
    EVODIV_REQUIRE(choices.size() == static_cast<std::size_t>(instance_.tasks()),
                   "routing: genome length must equal task count");
    double total = 0.0;
    int at = 0; // start node S
    for (int task = 0; task < instance_.tasks(); ++task) {
        const int next = instance_.station_node(task, choices[static_cast<std::size_t>(task)]);
        total += instance_.distance(at, next);
        at = next;
    }
    return total;
}

} // namespace evodiv
