#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <mutex>
#include <ostream>
#include <thread>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "esga/ga_engine.hpp"
#include "esga/report.hpp"
#include "esga/tsplib.hpp"
#include "esga_cli.hpp"

namespace esga::cli {

namespace fs = std::filesystem;

namespace {

/// GA flags shared by solve and bench.
struct GaFlags {
    GAConfig cfg;
    std::string local = "random";
    std::string global = "block";
    double time_limit = 0.0;

    void attach(CLI::App& cmd) {
        cmd.add_option("--seed", cfg.seed, "Random seed")->capture_default_str();
        cmd.add_option("--npop", cfg.n_pop, "Population size")->capture_default_str();
        cmd.add_option("--nch", cfg.n_ch, "Offspring per crossover")->capture_default_str();
        cmd.add_option("--g", cfg.g_stagnation, "Stagnant generations ending each stage")->capture_default_str();
        cmd.add_option("--k", cfg.k_multiple, "Rings per R-set for kmultiple")->capture_default_str();
        cmd.add_option("--block-rings", cfg.block_rings, "Rings per R-set for block")->capture_default_str();
        cmd.add_option("--strategy-local", local, "Stage-one strategy")
            ->check(CLI::IsMember({"single", "random"}))
            ->capture_default_str();
        cmd.add_option("--strategy-global", global, "Stage-two strategy")
            ->check(CLI::IsMember({"kmultiple", "block"}))
            ->capture_default_str();
        cmd.add_option("--neighbor-k", cfg.neighbor_k, "Neighbor list length")->capture_default_str();
        cmd.add_option("--min-ring-size", cfg.es.min_ring_size, "Smallest selectable ring (A-edges)")
            ->capture_default_str();
        cmd.add_option("--time-limit", time_limit, "Wall-clock limit per run in seconds (0 = none)");
    }

    GAConfig resolve() const {
        GAConfig out = cfg;
        out.local_strategy = parse_strategy_kind(local);
        out.global_strategy = parse_strategy_kind(global);
        if (time_limit > 0.0) {
            out.time_limit_seconds = time_limit;
        } else if (time_limit < 0.0) {
            throw std::invalid_argument("time limit must be positive");
        }
        out.validate();
        return out;
    }
};

void write_file(const fs::path& path, const std::string& text) {
    if (path.has_parent_path()) {
        fs::create_directories(path.parent_path());
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) {
        throw std::runtime_error("cannot write file: " + path.string());
    }
    f << text;
}

std::string fixed2(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

int cmd_solve(const std::string& instance_path, const GaFlags& flags, std::optional<std::int64_t> optimum,
              const std::string& out_dir, bool trace, std::ostream& out, std::ostream& err) {
    GAConfig cfg;
    try {
        cfg = flags.resolve();
    } catch (const std::invalid_argument& e) {
        err << "error: invalid configuration: " << e.what() << '\n';
        return 2;
    }
    const auto inst = load_tsplib(instance_path);
    const auto report = run(inst, cfg);

    out << "Instance " << inst.name() << " (" << inst.size() << " cities)\n";
    out << "Best " << report.best_length << '\n';
    if (optimum) {
        out << "Err " << fixed2(err_percent(report.best_length, *optimum)) << '\n';
    }
    out << "Time " << fixed2(report.seconds) << '\n';
    out << "Generations " << report.generations;
    if (report.switch_generation) {
        out << " (global from " << *report.switch_generation << ')';
    }
    if (report.hit_time_limit) {
        out << " [time limit]";
    }
    out << '\n';

    if (!out_dir.empty()) {
        const auto stem = fs::path(instance_path).stem().string();
        const fs::path dir(out_dir);
        write_file(dir / (stem + ".tour"),
                   write_tour(report.best_tour, stem + ".tour", "length " + std::to_string(report.best_length)));
        auto j = report_to_json(report);
        if (optimum) {
            j["optimum"] = *optimum;
        }
        write_file(dir / (stem + ".json"), j.dump(2) + "\n");
        if (trace) {
            write_file(dir / (stem + ".trace.csv"), trace_to_csv(report));
        }
        out << "Wrote " << (dir / (stem + ".tour")).string() << '\n';
    }
    return 0;
}

struct LoadedInstance {
    ManifestEntry entry;
    std::optional<Instance> inst;
    std::optional<NeighborLists> nbrs;
    std::optional<std::string> error;
};

int cmd_bench(const std::string& manifest_path, const GaFlags& flags, int runs, int jobs,
              const std::vector<std::string>& data_dirs, const std::string& out_dir, std::ostream& out,
              std::ostream& err) {
    GAConfig cfg;
    try {
        cfg = flags.resolve();
        if (runs < 1 || jobs < 1) {
            throw std::invalid_argument("--runs and --jobs must be at least 1");
        }
    } catch (const std::invalid_argument& e) {
        err << "error: invalid configuration: " << e.what() << '\n';
        return 2;
    }
    const auto manifest_dir = fs::absolute(manifest_path).parent_path();
    const auto entries = parse_manifest(read_text_file(manifest_path));

    std::vector<fs::path> search(data_dirs.begin(), data_dirs.end());
    if (const char* env = std::getenv("TSPLIB_DIR"); env && *env) {
        search.emplace_back(env);
    }
    search.push_back(manifest_dir);

    std::vector<LoadedInstance> loaded;
    loaded.reserve(entries.size());
    for (const auto& e : entries) {
        auto& li = loaded.emplace_back();
        li.entry = e;
        try {
            const auto path = resolve_instance(e.name, manifest_dir, search);
            if (!path) {
                throw std::runtime_error("instance file not found");
            }
            li.inst.emplace(load_tsplib(*path));
            li.nbrs.emplace(*li.inst, cfg.neighbor_k);
        } catch (const std::exception& ex) {
            li.error = ex.what();
            err << "error: " << e.name << ": " << ex.what() << '\n';
        }
    }

    struct Job {
        std::size_t instance;
        int run;
    };
    std::vector<Job> queue;
    for (std::size_t i = 0; i < loaded.size(); ++i) {
        if (!loaded[i].error) {
            for (int r = 0; r < runs; ++r) {
                queue.push_back({i, r});
            }
        }
    }
    std::vector<std::vector<std::optional<RunReport>>> reports(loaded.size(),
                                                              std::vector<std::optional<RunReport>>(runs));
    std::vector<std::vector<std::string>> failures(loaded.size());
    std::atomic<std::size_t> next{0};
    std::mutex failure_mutex;

    auto worker = [&] {
        for (std::size_t k = next++; k < queue.size(); k = next++) {
            const auto [i, r] = queue[k];
            auto run_cfg = cfg;
            run_cfg.seed = cfg.seed + static_cast<std::uint64_t>(r);
            try {
                reports[i][r] = run(*loaded[i].inst, *loaded[i].nbrs, run_cfg);
            } catch (const std::exception& ex) {
                const std::lock_guard lock(failure_mutex);
                failures[i].push_back("seed " + std::to_string(run_cfg.seed) + ": " + ex.what());
            }
        }
    };
    const int threads = static_cast<int>(std::min<std::size_t>(static_cast<std::size_t>(jobs), queue.size()));
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (int t = 0; t < threads; ++t) {
            pool.emplace_back(worker);
        }
    }

    std::vector<BenchRow> rows;
    auto summary = nlohmann::json::array();
    bool any_failed = false;
    for (std::size_t i = 0; i < loaded.size(); ++i) {
        const auto& li = loaded[i];
        std::vector<RunOutcome> outcomes;
        auto run_list = nlohmann::json::array();
        for (int r = 0; r < runs; ++r) {
            if (const auto& rep = reports[i][r]) {
                outcomes.push_back({rep->best_length, rep->seconds});
                run_list.push_back({{"seed", rep->seed}, {"length", rep->best_length}, {"seconds", rep->seconds}});
                if (!out_dir.empty()) {
                    write_file(fs::path(out_dir) / "runs" /
                                   (li.entry.name + ".seed" + std::to_string(rep->seed) + ".json"),
                               report_to_json(*rep).dump(2) + "\n");
                }
            }
        }
        auto row = summarize(li.entry.name, li.entry.optimum, outcomes);
        if (li.error) {
            row.error = li.error;
        } else if (!failures[i].empty()) {
            row.error = failures[i].front();
            for (const auto& f : failures[i]) {
                err << "error: " << li.entry.name << ": " << f << '\n';
            }
        }
        any_failed = any_failed || row.error.has_value();

        nlohmann::json entry{{"instance", row.instance}, {"optimum", row.optimum}, {"runs", run_list}};
        if (row.error) {
            entry["error"] = *row.error;
        } else {
            entry["success"] = row.success;
            entry["err"] = row.err;
            entry["time"] = row.time;
        }
        summary.push_back(std::move(entry));
        rows.push_back(std::move(row));
    }

    const auto csv = bench_csv(rows);
    out << csv;
    if (!out_dir.empty()) {
        write_file(fs::path(out_dir) / "bench.csv", csv);
        const nlohmann::json doc{{"config", config_to_json(cfg)}, {"runs_per_instance", runs}, {"instances", summary}};
        write_file(fs::path(out_dir) / "bench.json", doc.dump(2) + "\n");
    }
    return any_failed ? 1 : 0;
}

int cmd_render(const std::string& instance_path, const std::vector<std::string>& tours, bool show_rings,
               std::uint64_t seed, const std::string& out_path, std::ostream& out, std::ostream& err) {
    if (show_rings != (tours.size() == 2)) {
        err << "error: give one tour, or two tours together with --show-rings\n";
        return 2;
    }
    const auto inst = load_tsplib(instance_path);
    std::vector<Tour> loaded;
    for (const auto& t : tours) {
        auto tour = load_tour(t);
        if (tour.size() != inst.size()) {
            err << "error: " << t << " has " << tour.size() << " cities but " << instance_path << " has "
                << inst.size() << '\n';
            return 1;
        }
        loaded.push_back(std::move(tour));
    }

    std::string svg;
    if (show_rings) {
        Rng rng(seed);
        const auto rings = partition_m_rings(merge_graphs(loaded[0], loaded[1]), rng);
        svg = render_rings_svg(inst, rings);
    } else {
        svg = render_tour_svg(inst, loaded[0]);
    }
    if (out_path.empty()) {
        out << svg;
    } else {
        write_file(out_path, svg);
    }
    return 0;
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Two-stage genetic algorithm for the symmetric TSP with edge swapping crossover", "esga"};
    app.require_subcommand(1);

    GaFlags solve_flags;
    std::string solve_instance;
    std::optional<std::int64_t> solve_optimum;
    std::string solve_out;
    bool solve_trace = false;
    auto* solve = app.add_subcommand("solve", "Run the GA on one TSPLIB instance");
    solve->add_option("instance", solve_instance, "TSPLIB .tsp file")->required();
    solve_flags.attach(*solve);
    solve->add_option("--optimum", solve_optimum, "Known optimum, for the Err column");
    solve->add_option("--out", solve_out, "Directory for the .tour and JSON report");
    solve->add_flag("--trace", solve_trace, "Also write the per-generation CSV trace");

    GaFlags bench_flags;
    std::string bench_manifest;
    int bench_runs = 10;
    int bench_jobs = 1;
    std::vector<std::string> bench_dirs;
    std::string bench_out;
    auto* bench = app.add_subcommand("bench", "Seeded runs over a manifest of instances with known optima");
    bench->add_option("manifest", bench_manifest, "Lines of '<instance> <optimum>'")->required();
    bench_flags.attach(*bench);
    bench->add_option("--runs", bench_runs, "Runs per instance; run r uses seed + r")->capture_default_str();
    bench->add_option("--jobs", bench_jobs, "Runs executed in parallel")->capture_default_str();
    bench->add_option("--data-dir", bench_dirs, "Directories searched for <instance>.tsp");
    bench->add_option("--out", bench_out, "Directory for bench.csv, bench.json and per-run reports");

    std::string render_instance;
    std::vector<std::string> render_tours;
    bool render_rings = false;
    std::uint64_t render_seed = 1;
    std::string render_out;
    auto* render = app.add_subcommand("render", "Draw a tour, or two parents' M-rings, as SVG");
    render->add_option("instance", render_instance, "TSPLIB .tsp file")->required();
    render->add_option("tours", render_tours, "One or two .tour files")->required()->expected(1, 2);
    render->add_flag("--show-rings", render_rings, "Overlay the M-rings of two parent tours");
    render->add_option("--seed", render_seed, "Seed for the ring partition")->capture_default_str();
    render->add_option("--out", render_out, "Output file (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err);
    }

    try {
        if (*solve) {
            return cmd_solve(solve_instance, solve_flags, solve_optimum, solve_out, solve_trace, out, err);
        }
        if (*bench) {
            return cmd_bench(bench_manifest, bench_flags, bench_runs, bench_jobs, bench_dirs, bench_out, out, err);
        }
        return cmd_render(render_instance, render_tours, render_rings, render_seed, render_out, out, err);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
}

} // namespace esga::cli
