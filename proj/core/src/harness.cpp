#include "evodiv/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <fstream>
#include <mutex>
#include <thread>

#include "evodiv/text.hpp"

namespace evodiv {

std::vector<AggregateRow> aggregate(std::span<const RunRecord> records) {
    EVODIV_REQUIRE(!records.empty(), "aggregate needs at least one record");
    const std::size_t row_count = records.front().rows.size();
    for (const RunRecord& record : records)
        EVODIV_REQUIRE(record.rows.size() == row_count,
                       "aggregate: records have ragged generation counts");

    std::vector<AggregateRow> rows(row_count);
    const auto n = static_cast<double>(records.size());
    for (std::size_t r = 0; r < row_count; ++r) {
        double sum = 0.0;
        for (const RunRecord& record : records)
            sum += record.rows[r].best_objective;
        const double mean = sum / n;
        double sq = 0.0;
        for (const RunRecord& record : records) {
            const double delta = record.rows[r].best_objective - mean;
            sq += delta * delta;
        }
        rows[r].generation = records.front().rows[r].generation;
        rows[r].mean_best = mean;
        rows[r].std_best = records.size() > 1 ? std::sqrt(sq / (n - 1.0)) : 0.0;
    }
    return rows;
}

namespace {

std::vector<RunRecord> run_variant(const Problem& problem, const Variant& variant, int runs,
                                   std::uint64_t base_seed, int threads) {
    std::vector<RunRecord> records(static_cast<std::size_t>(runs));
    std::atomic<int> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr error;
    std::mutex error_mutex;

    auto worker = [&] {
        while (!failed.load(std::memory_order_relaxed)) {
            const int index = next.fetch_add(1);
            if (index >= runs)
                return;
            EvolutionConfig config = variant.config;
            config.seed = base_seed + static_cast<std::uint64_t>(index);
            try {
                records[static_cast<std::size_t>(index)] =
                    run_evolution(config, variant.strategy, problem);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error)
                    error = std::current_exception();
                failed.store(true);
            }
        }
    };

    unsigned worker_count = threads > 0 ? static_cast<unsigned>(threads)
                                        : std::thread::hardware_concurrency();
    if (worker_count == 0)
        worker_count = 1;
    worker_count = std::min<unsigned>(worker_count, static_cast<unsigned>(runs));

    if (worker_count <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(worker_count);
        for (unsigned i = 0; i < worker_count; ++i)
            pool.emplace_back(worker);
        for (auto& thread : pool)
            thread.join();
    }

    if (error) {
        try {
            std::rethrow_exception(error);
        } catch (const std::exception& e) {
            // Identify the variant; the failing seed is in [base, base+runs).
            throw std::runtime_error("variant '" + variant.name + "' (seeds " +
                                     std::to_string(base_seed) + ".." +
                                     std::to_string(base_seed + static_cast<std::uint64_t>(runs) -
                                                    1) +
                                     ") failed: " + e.what());
        }
    }
    return records;
}

} // namespace

std::vector<ExperimentResult> run_experiment(const Problem& problem,
                                             std::span<const Variant> variants, int runs,
                                             std::uint64_t base_seed, int threads) {
    EVODIV_REQUIRE(runs >= 1, "run_experiment needs at least one run");
    std::vector<ExperimentResult> results;
    results.reserve(variants.size());
    for (const Variant& variant : variants) {
        const auto records = run_variant(problem, variant, runs, base_seed, threads);
        ExperimentResult result;
        result.variant = variant.name;
        result.runs = runs;
        result.rows = aggregate(records);
        results.push_back(std::move(result));
    }
    return results;
}

void write_csv(const ExperimentResult& result, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out)
        throw ConfigError("cannot open " + path.string() + " for writing");
    for (const auto& [key, value] : result.config_echo)
        out << "# " << key << "=" << value << "\n";
    out << "variant,generation,mean_best,std_best,runs\n";
    for (const AggregateRow& row : result.rows)
        out << result.variant << ',' << row.generation << ',' << format_double(row.mean_best)
            << ',' << format_double(row.std_best) << ',' << result.runs << "\n";
    if (!out)
        throw ConfigError("write failed for " + path.string());
}

ExperimentResult read_csv(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in)
        throw ConfigError("cannot open " + path.string());
    ExperimentResult result;
    std::string line;
    bool header_seen = false;
    while (std::getline(in, line)) {
        if (line.empty())
            continue;
        if (line.rfind("# ", 0) == 0) {
            const auto body = line.substr(2);
            const auto eq = body.find('=');
            if (eq == std::string::npos)
                throw ConfigError(path.string() + ": malformed echo line '" + line + "'");
            result.config_echo.emplace_back(body.substr(0, eq), body.substr(eq + 1));
            continue;
        }
        if (!header_seen) {
            if (line != "variant,generation,mean_best,std_best,runs")
                throw ConfigError(path.string() + ": unexpected header '" + line + "'");
            header_seen = true;
            continue;
        }
        const auto fields = split(line, ',');
        if (fields.size() != 5)
            throw ConfigError(path.string() + ": malformed row '" + line + "'");
        result.variant = fields[0];
        AggregateRow row;
        row.generation = static_cast<int>(parse_int(fields[1], "generation"));
        row.mean_best = parse_double(fields[2], "mean_best");
        row.std_best = parse_double(fields[3], "std_best");
        result.runs = static_cast<int>(parse_int(fields[4], "runs"));
        result.rows.push_back(row);
    }
    if (!header_seen)
        throw ConfigError(path.string() + ": missing header");
    return result;
}

void emit_plot_script(std::span<const ExperimentResult> results,
                      std::span<const std::string> csv_files, const std::string& experiment,
                      bool log_scale_y, const std::filesystem::path& path) {
    EVODIV_REQUIRE(!results.empty(), "emit_plot_script needs at least one result");
    EVODIV_REQUIRE(results.size() == csv_files.size(),
                   "emit_plot_script: results and csv files must pair up");
    static const char* kPalette[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728",
                                     "#9467bd", "#8c564b", "#e377c2", "#7f7f7f"};
    constexpr std::size_t kPaletteSize = sizeof(kPalette) / sizeof(kPalette[0]);

    std::ofstream out(path);
    if (!out)
        throw ConfigError("cannot open " + path.string() + " for writing");
    out << "# gnuplot script for the '" << experiment << "' experiment\n";
    out << "set datafile separator ','\n";
    out << "set terminal pngcairo size 1200,700\n";
    out << "set output '" << experiment << ".png'\n";
    out << "set title '" << experiment << ": best objective per generation'\n";
    out << "set xlabel 'generation'\n";
    out << "set ylabel 'best objective'\n";
    if (log_scale_y)
        out << "set logscale y\n";
    out << "set key outside right\n";
    out << "plot \\\n";
    for (std::size_t i = 0; i < results.size(); ++i) {
        const char* color = kPalette[i % kPaletteSize];
        out << "  '" << csv_files[i] << "' skip 1 using 2:($3-$4):($3+$4) with filledcurves fs "
            << "transparent solid 0.15 lc rgb '" << color << "' notitle, \\\n";
        out << "  '" << csv_files[i] << "' skip 1 using 2:3 with lines lw 2 lc rgb '" << color
            << "' title '" << results[i].variant << "'";
        out << (i + 1 < results.size() ? ", \\\n" : "\n");
    }
    if (!out)
        throw ConfigError("write failed for " + path.string());
}

} // namespace evodiv
