#include "esga/report.hpp"

#include <cstdio>
#include <sstream>

namespace esga {

nlohmann::json config_to_json(const GAConfig& cfg) {
    nlohmann::json j;
    j["n_pop"] = cfg.n_pop;
    j["n_ch"] = cfg.n_ch;
    j["g_stagnation"] = cfg.g_stagnation;
    j["k_multiple"] = cfg.k_multiple;
    j["block_rings"] = cfg.block_rings;
    j["local_strategy"] = to_string(cfg.local_strategy);
    j["global_strategy"] = to_string(cfg.global_strategy);
    j["neighbor_k"] = cfg.neighbor_k;
    j["seed"] = cfg.seed;
    j["time_limit_seconds"] = cfg.time_limit_seconds ? nlohmann::json(*cfg.time_limit_seconds) : nlohmann::json();
    j["min_ring_size"] = cfg.es.min_ring_size;
    j["survivor_score"] = cfg.survivor_score ? "custom" : "length";
    return j;
}

nlohmann::json report_to_json(const RunReport& report) {
    nlohmann::json j;
    j["instance"] = report.instance;
    j["best_length"] = report.best_length;
    j["best_tour"] = std::vector<int>(report.best_tour.order().begin(), report.best_tour.order().end());
    j["generations"] = report.generations;
    j["switch_generation"] = report.switch_generation ? nlohmann::json(*report.switch_generation) : nlohmann::json();
    j["hit_time_limit"] = report.hit_time_limit;
    j["seconds"] = report.seconds;
    j["seed"] = report.seed;
    j["config"] = config_to_json(report.config);

    auto trace = nlohmann::json::array();
    for (const auto& g : report.trace) {
        trace.push_back({{"generation", g.generation}, {"best", g.best}, {"mean", g.mean}, {"stage", to_string(g.stage)}});
    }
    j["trace"] = std::move(trace);
    return j;
}

std::string trace_to_csv(const RunReport& report) {
    std::ostringstream out;
    out << "generation,best,mean,stage\n";
    char mean[64];
    for (const auto& g : report.trace) {
        std::snprintf(mean, sizeof(mean), "%.3f", g.mean);
        out << g.generation << ',' << g.best << ',' << mean << ',' << to_string(g.stage) << '\n';
    }
    return std::move(out).str();
}

} // namespace esga
