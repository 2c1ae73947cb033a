#include "evodiv/experiments.hpp"

#include <fstream>

#include "evodiv/problems/routing.hpp"
#include "evodiv/problems/schwefel.hpp"
#include "evodiv/text.hpp"

namespace evodiv {

const std::vector<std::string>& variant_names() {
    static const std::vector<std::string> names = {
        "none",      "sharing",            "distance",     "distance_randomized",
        "inherited", "exact_genealogical", "genealogical", "ensemble"};
    return names;
}

ExperimentSetup default_setup(const std::string& experiment, const std::string& problem) {
    ExperimentSetup setup;
    setup.experiment = experiment;
    setup.problem = experiment == "custom" ? problem : experiment;

    if (setup.problem == "schwefel") {
        setup.dimension = 8;
        setup.evolution.population_size = 30;
        setup.evolution.generations = 300;
        setup.strategy.lambda = 200.0;
        setup.strategy.distance = DistanceKind::Manhattan;
        setup.runs = 20;
        setup.paper_scale_runs = 100;
        setup.log_scale_y = true;
    } else if (setup.problem == "pathfinding") {
        setup.evolution.population_size = 100;
        setup.evolution.generations = 1000;
        setup.strategy.lambda = 12.0;
        setup.strategy.distance = DistanceKind::Manhattan;
        setup.runs = 10;
        setup.paper_scale_runs = 20;
        setup.log_scale_y = false;
    } else if (setup.problem == "routing") {
        setup.evolution.population_size = 50;
        setup.evolution.generations = 100;
        setup.strategy.lambda = 250.0;
        setup.strategy.distance = DistanceKind::Hamming;
        setup.runs = 20;
        setup.paper_scale_runs = 100;
        setup.log_scale_y = true;
    } else {
        throw ConfigError("unknown problem: " + setup.problem);
    }
    if (experiment != "schwefel" && experiment != "pathfinding" && experiment != "routing" &&
        experiment != "custom")
        throw ConfigError("unknown experiment: " + experiment);
    return setup;
}

std::shared_ptr<const Problem> make_problem(const ExperimentSetup& setup) {
    if (setup.problem == "schwefel")
        return std::make_shared<SchwefelProblem>(static_cast<std::size_t>(setup.dimension));
    if (setup.problem == "pathfinding") {
        PathfindingWorld world;
        world.obstacle = setup.obstacle;
        return std::make_shared<PathfindingProblem>(world);
    }
    if (setup.problem == "routing")
        return std::make_shared<RoutingProblem>(
            RoutingInstance(setup.routing_seed, setup.tasks, setup.stations));
    throw ConfigError("unknown problem: " + setup.problem);
}

Variant make_variant(const ExperimentSetup& setup, const std::string& name) {
    Variant variant;
    variant.name = name;
    variant.config = setup.evolution;
    variant.config.ensemble.reset();
    variant.strategy = setup.strategy;

    if (name == "ensemble") {
        variant.strategy.mode = DiversityMode::None;
        variant.config.ensemble = EnsembleConfig{setup.subpopulations, setup.migration_rate};
    } else {
        variant.strategy.mode = diversity_mode_from_string(name); // rejects unknown names
    }
    return variant;
}

std::vector<std::pair<std::string, std::string>> config_echo(const ExperimentSetup& setup,
                                                             const std::string& variant_name) {
    std::vector<std::pair<std::string, std::string>> echo;
    auto add = [&](const std::string& key, const std::string& value) {
        echo.emplace_back(key, value);
    };
    add("experiment", setup.experiment);
    add("problem", setup.problem);
    add("variants", variant_name);
    add("runs", std::to_string(setup.runs));
    add("base_seed", std::to_string(setup.base_seed));
    add("population", std::to_string(setup.evolution.population_size));
    add("generations", std::to_string(setup.evolution.generations));
    add("mutation_rate", format_double(setup.evolution.mutation_rate));
    add("recombination_rate", format_double(setup.evolution.recombination_rate));
    add("hypermutation_rate", format_double(setup.evolution.hypermutation_rate));
    add("tournament", std::to_string(setup.evolution.tournament_size));
    add("subpopulations", std::to_string(setup.subpopulations));
    add("migration_rate", format_double(setup.migration_rate));
    add("lambda", format_double(setup.strategy.lambda));
    add("alpha", format_double(setup.strategy.alpha));
    add("sigma", format_double(setup.strategy.sigma));
    add("kappa", format_double(setup.strategy.kappa));
    add("step_r", format_double(setup.strategy.parent_step));
    add("cap_t", format_double(setup.strategy.unrelated_cap));
    add("tau", std::to_string(setup.strategy.tag_length));
    add("sample_k", std::to_string(setup.strategy.sample_size));
    add("reward_mode", setup.strategy.reward == RewardMode::Bonus ? "bonus" : "penalty");
    add("distance", setup.strategy.distance == DistanceKind::Manhattan ? "manhattan" : "hamming");
    add("dimension", std::to_string(setup.dimension));
    add("obstacle", format_double(setup.obstacle.x0) + "," + format_double(setup.obstacle.y0) +
                        "," + format_double(setup.obstacle.x1) + "," +
                        format_double(setup.obstacle.y1));
    add("routing_seed", std::to_string(setup.routing_seed));
    add("tasks", std::to_string(setup.tasks));
    add("stations", std::to_string(setup.stations));
    return echo;
}

void merge_missing(OverrideSet& into, const OverrideSet& from) {
    auto fill = [](auto& dst, const auto& src) {
        if (!dst)
            dst = src;
    };
    fill(into.experiment, from.experiment);
    fill(into.problem, from.problem);
    fill(into.variants, from.variants);
    fill(into.reward_mode, from.reward_mode);
    fill(into.distance, from.distance);
    fill(into.obstacle, from.obstacle);
    fill(into.population, from.population);
    fill(into.generations, from.generations);
    fill(into.tournament, from.tournament);
    fill(into.subpopulations, from.subpopulations);
    fill(into.tau, from.tau);
    fill(into.sample_k, from.sample_k);
    fill(into.dimension, from.dimension);
    fill(into.tasks, from.tasks);
    fill(into.stations, from.stations);
    fill(into.runs, from.runs);
    fill(into.mutation_rate, from.mutation_rate);
    fill(into.recombination_rate, from.recombination_rate);
    fill(into.hypermutation_rate, from.hypermutation_rate);
    fill(into.migration_rate, from.migration_rate);
    fill(into.lambda, from.lambda);
    fill(into.alpha, from.alpha);
    fill(into.sigma, from.sigma);
    fill(into.kappa, from.kappa);
    fill(into.step_r, from.step_r);
    fill(into.cap_t, from.cap_t);
    fill(into.base_seed, from.base_seed);
    fill(into.routing_seed, from.routing_seed);
    into.paper_scale = into.paper_scale || from.paper_scale;
}

OverrideSet parse_config_lines(std::span<const std::string> lines) {
    OverrideSet overrides;
    for (const std::string& raw : lines) {
        const std::string line = trim(raw);
        if (line.empty() || line.front() == '#')
            continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("config line is not key=value: '" + line + "'");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));

        auto as_int = [&](std::optional<int>& field) {
            field = static_cast<int>(parse_int(value, key));
        };
        auto as_double = [&](std::optional<double>& field) { field = parse_double(value, key); };
        auto as_u64 = [&](std::optional<std::uint64_t>& field) { field = parse_u64(value, key); };

        if (key == "experiment") overrides.experiment = value;
        else if (key == "problem") overrides.problem = value;
        else if (key == "variants") overrides.variants = value;
        else if (key == "reward_mode") overrides.reward_mode = value;
        else if (key == "distance") overrides.distance = value;
        else if (key == "obstacle") overrides.obstacle = value;
        else if (key == "population") as_int(overrides.population);
        else if (key == "generations") as_int(overrides.generations);
        else if (key == "tournament") as_int(overrides.tournament);
        else if (key == "subpopulations") as_int(overrides.subpopulations);
        else if (key == "tau") as_int(overrides.tau);
        else if (key == "sample_k") as_int(overrides.sample_k);
        else if (key == "dimension") as_int(overrides.dimension);
        else if (key == "tasks") as_int(overrides.tasks);
        else if (key == "stations") as_int(overrides.stations);
        else if (key == "runs") as_int(overrides.runs);
        else if (key == "mutation_rate") as_double(overrides.mutation_rate);
        else if (key == "recombination_rate") as_double(overrides.recombination_rate);
        else if (key == "hypermutation_rate") as_double(overrides.hypermutation_rate);
        else if (key == "migration_rate") as_double(overrides.migration_rate);
        else if (key == "lambda") as_double(overrides.lambda);
        else if (key == "alpha") as_double(overrides.alpha);
        else if (key == "sigma") as_double(overrides.sigma);
        else if (key == "kappa") as_double(overrides.kappa);
        else if (key == "step_r") as_double(overrides.step_r);
        else if (key == "cap_t") as_double(overrides.cap_t);
        else if (key == "base_seed") as_u64(overrides.base_seed);
        else if (key == "routing_seed") as_u64(overrides.routing_seed);
        else throw ConfigError("unknown config key: " + key);
    }
    return overrides;
}

OverrideSet parse_config_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in)
        throw ConfigError("cannot open config file " + path.string());
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line))
        lines.push_back(line);
    return parse_config_lines(lines);
}

namespace {
Rect parse_obstacle(const std::string& text) {
    const auto parts = split(text, ',');
    if (parts.size() != 4)
        throw ConfigError("obstacle: expected x0,y0,x1,y1, got '" + text + "'");
    Rect rect;
    rect.x0 = parse_double(trim(parts[0]), "obstacle");
    rect.y0 = parse_double(trim(parts[1]), "obstacle");
    rect.x1 = parse_double(trim(parts[2]), "obstacle");
    rect.y1 = parse_double(trim(parts[3]), "obstacle");
    return rect;
}
} // namespace

ExperimentSetup build_setup(const OverrideSet& o) {
    const std::string experiment = o.experiment.value_or("schwefel");
    ExperimentSetup setup = default_setup(experiment, o.problem.value_or("schwefel"));
    if (o.problem && experiment != "custom" && *o.problem != setup.problem)
        throw ConfigError("problem: only the custom experiment may override its problem");

    if (o.paper_scale)
        setup.runs = setup.paper_scale_runs;
    if (o.runs)
        setup.runs = *o.runs;
    if (setup.runs < 1)
        throw ConfigError("runs must be at least 1");
    if (o.base_seed)
        setup.base_seed = *o.base_seed;

    if (o.population)
        setup.evolution.population_size = *o.population;
    if (o.generations)
        setup.evolution.generations = *o.generations;
    if (o.mutation_rate)
        setup.evolution.mutation_rate = *o.mutation_rate;
    if (o.recombination_rate)
        setup.evolution.recombination_rate = *o.recombination_rate;
    if (o.hypermutation_rate)
        setup.evolution.hypermutation_rate = *o.hypermutation_rate;
    if (o.tournament)
        setup.evolution.tournament_size = *o.tournament;
    validate(setup.evolution);

    if (o.subpopulations)
        setup.subpopulations = *o.subpopulations;
    if (setup.subpopulations < 2)
        throw ConfigError("subpopulations must be at least 2");
    if (o.migration_rate)
        setup.migration_rate = *o.migration_rate;
    if (setup.migration_rate < 0.0 || setup.migration_rate > 1.0)
        throw ConfigError("migration_rate must lie in [0, 1]");

    if (o.lambda)
        setup.strategy.lambda = *o.lambda;
    if (o.alpha)
        setup.strategy.alpha = *o.alpha;
    if (o.sigma)
        setup.strategy.sigma = *o.sigma;
    if (o.kappa)
        setup.strategy.kappa = *o.kappa;
    if (o.step_r)
        setup.strategy.parent_step = *o.step_r;
    if (o.cap_t)
        setup.strategy.unrelated_cap = *o.cap_t;
    if (o.tau)
        setup.strategy.tag_length = *o.tau;
    if (o.sample_k)
        setup.strategy.sample_size = *o.sample_k;
    if (o.reward_mode) {
        if (*o.reward_mode == "bonus")
            setup.strategy.reward = RewardMode::Bonus;
        else if (*o.reward_mode == "penalty")
            setup.strategy.reward = RewardMode::Penalty;
        else
            throw ConfigError("reward_mode: expected bonus or penalty, got '" + *o.reward_mode +
                              "'");
    }
    if (o.distance) {
        if (*o.distance == "manhattan")
            setup.strategy.distance = DistanceKind::Manhattan;
        else if (*o.distance == "hamming")
            setup.strategy.distance = DistanceKind::Hamming;
        else
            throw ConfigError("distance: expected manhattan or hamming, got '" + *o.distance +
                              "'");
    }

    if (o.dimension) {
        if (*o.dimension < 1)
            throw ConfigError("dimension must be at least 1");
        setup.dimension = *o.dimension;
    }
    if (o.obstacle)
        setup.obstacle = parse_obstacle(*o.obstacle);
    if (o.routing_seed)
        setup.routing_seed = *o.routing_seed;
    if (o.tasks) {
        if (*o.tasks < 1)
            throw ConfigError("tasks must be at least 1");
        setup.tasks = *o.tasks;
    }
    if (o.stations) {
        if (*o.stations < 1)
            throw ConfigError("stations must be at least 1");
        setup.stations = *o.stations;
    }

    // Every per-variant strategy must validate; check all modes eagerly so
    // bad hyperparameters surface before generation 0 of any run.
    for (const std::string& name : variant_names())
        validate(make_variant(setup, name).strategy);
    return setup;
}

std::vector<std::string> selected_variants(const OverrideSet& overrides) {
    if (!overrides.variants)
        return variant_names();
    std::vector<std::string> selection;
    for (const std::string& part : split(*overrides.variants, ',')) {
        const std::string name = trim(part);
        if (name.empty())
            continue;
        bool known = false;
        for (const std::string& candidate : variant_names())
            known = known || candidate == name;
        if (!known)
            throw ConfigError("unknown variant: " + name);
        selection.push_back(name);
    }
    return selection;
}

ExperimentOutput run_and_write(const ExperimentSetup& setup,
                               std::span<const std::string> variants,
                               const std::filesystem::path& out_dir, int threads) {
    ExperimentOutput output;
    if (variants.empty())
        return output;

    const auto problem = make_problem(setup);
    std::vector<Variant> resolved;
    resolved.reserve(variants.size());
    for (const std::string& name : variants)
        resolved.push_back(make_variant(setup, name));

    output.results = run_experiment(*problem, resolved, setup.runs, setup.base_seed, threads);
    std::filesystem::create_directories(out_dir);
    for (ExperimentResult& result : output.results) {
        result.config_echo = config_echo(setup, result.variant);
        const std::string filename = setup.experiment + "_" + result.variant + ".csv";
        write_csv(result, out_dir / filename);
        output.csv_files.push_back(filename);
    }
    output.plot_file = setup.experiment + ".plt";
    emit_plot_script(output.results, output.csv_files, setup.experiment, setup.log_scale_y,
                     out_dir / output.plot_file);
    return output;
}

} // namespace evodiv
