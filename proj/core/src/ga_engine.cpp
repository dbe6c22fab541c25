#include "esga/ga_engine.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <stdexcept>

#include "esga/two_opt.hpp"

namespace esga {

std::string to_string(Stage stage) {
    return stage == Stage::LocalES ? "local" : "global";
}

std::string to_string(StrategyKind kind) {
    switch (kind) {
        case StrategyKind::Single:
            return "single";
        case StrategyKind::Random:
            return "random";
        case StrategyKind::KMultiple:
            return "kmultiple";
        case StrategyKind::Block:
            return "block";
    }
    return "unknown";
}

StrategyKind parse_strategy_kind(const std::string& name) {
    for (auto kind : {StrategyKind::Single, StrategyKind::Random, StrategyKind::KMultiple, StrategyKind::Block}) {
        if (to_string(kind) == name) {
            return kind;
        }
    }
    throw std::invalid_argument("unknown strategy '" + name + "'");
}

void GAConfig::validate() const {
    auto require = [](bool ok, const char* what) {
        if (!ok) {
            throw std::invalid_argument(what);
        }
    };
    require(n_pop >= 2, "n_pop must be at least 2");
    require(n_ch >= 1, "n_ch must be at least 1");
    require(g_stagnation >= 1, "g_stagnation must be at least 1");
    require(k_multiple >= 1, "k_multiple must be at least 1");
    require(block_rings >= 1, "block_rings must be at least 1");
    require(neighbor_k >= 1, "neighbor_k must be at least 1");
    require(es.min_ring_size >= 1, "min_ring_size must be at least 1");
    require(!time_limit_seconds || *time_limit_seconds > 0.0, "time limit must be positive");
}

Strategy GAConfig::strategy_for(Stage stage) const {
    switch (stage == Stage::LocalES ? local_strategy : global_strategy) {
        case StrategyKind::Single:
            return strategy::Single{};
        case StrategyKind::Random:
            return strategy::Random{};
        case StrategyKind::KMultiple:
            return strategy::KMultiple{k_multiple};
        case StrategyKind::Block:
            return strategy::Block{block_rings};
    }
    return strategy::Random{};
}

int Population::best_index() const {
    return static_cast<int>(std::min_element(lengths.begin(), lengths.end()) - lengths.begin());
}

double Population::mean_length() const {
    if (lengths.empty()) {
        return 0.0;
    }
    const double total = std::accumulate(lengths.begin(), lengths.end(), 0.0,
                                         [](double acc, std::int64_t v) { return acc + static_cast<double>(v); });
    return total / static_cast<double>(lengths.size());
}

Population init_population(const Instance& inst, const NeighborLists& nbrs, const GAConfig& cfg, Rng& rng) {
    Population pop;
    pop.members.reserve(cfg.n_pop);
    pop.lengths.reserve(cfg.n_pop);
    for (int i = 0; i < cfg.n_pop; ++i) {
        auto tour = two_opt(inst, nbrs, random_tour(inst.size(), rng), rng);
        pop.lengths.push_back(tour_length(inst, tour));
        pop.members.push_back(std::move(tour));
    }
    pop.best_length = *std::min_element(pop.lengths.begin(), pop.lengths.end());
    return pop;
}

void step_generation(Population& pop, const Instance& inst, const NeighborLists& nbrs, const GAConfig& cfg,
                     Rng& rng) {
    const int n_pop = static_cast<int>(pop.members.size());
    const Strategy strategy = cfg.strategy_for(pop.stage);

    std::vector<int> order(n_pop);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);

    for (int i = 0; i < n_pop; ++i) {
        const int slot_a = order[i];
        const int slot_b = order[(i + 1) % n_pop];
        auto children =
            es_crossover(inst, nbrs, pop.members[slot_a], pop.members[slot_b], strategy, cfg.n_ch, rng, cfg.es);

        int chosen = -1;
        double best_score = 0.0;
        for (int c = 0; c < static_cast<int>(children.size()); ++c) {
            const double score = cfg.survivor_score
                                     ? cfg.survivor_score(pop.members[slot_a], pop.lengths[slot_a], children[c])
                                     : static_cast<double>(pop.lengths[slot_a] - children[c].length);
            if (score > best_score) {
                best_score = score;
                chosen = c;
            }
        }
        if (chosen >= 0) {
            pop.members[slot_a] = std::move(children[chosen].tour);
            pop.lengths[slot_a] = children[chosen].length;
        }
    }

    ++pop.generation;
    const auto best = *std::min_element(pop.lengths.begin(), pop.lengths.end());
    if (best < pop.best_length) {
        pop.stagnant = 0;
    } else {
        ++pop.stagnant;
    }
    pop.best_length = best;
}

RunReport run(const Instance& inst, const GAConfig& cfg) {
    cfg.validate();
    const NeighborLists nbrs(inst, cfg.neighbor_k);
    return run(inst, nbrs, cfg);
}

RunReport run(const Instance& inst, const NeighborLists& nbrs, const GAConfig& cfg,
              const GenerationObserver& observer) {
    cfg.validate();
    using Clock = std::chrono::steady_clock;
    const auto started = Clock::now();
    auto elapsed = [&] { return std::chrono::duration<double>(Clock::now() - started).count(); };

    Rng rng(cfg.seed);
    RunReport report;
    report.instance = inst.name();
    report.seed = cfg.seed;
    report.config = cfg;

    auto pop = init_population(inst, nbrs, cfg, rng);
    report.best_tour = pop.members[pop.best_index()];
    report.best_length = pop.best_length;

    auto record = [&](Stage used) {
        report.trace.push_back({pop.generation, pop.best_length, pop.mean_length(), used});
        if (pop.best_length < report.best_length) {
            report.best_length = pop.best_length;
            report.best_tour = pop.members[pop.best_index()];
        }
        if (observer) {
            observer(pop);
        }
    };
    record(Stage::LocalES);

    while (true) {
        if (cfg.time_limit_seconds && elapsed() >= *cfg.time_limit_seconds) {
            report.hit_time_limit = true;
            break;
        }
        const Stage used = pop.stage;
        step_generation(pop, inst, nbrs, cfg, rng);
        record(used);

        if (pop.stagnant >= cfg.g_stagnation) {
            if (pop.stage == Stage::GlobalES) {
                break;
            }
            pop.stage = Stage::GlobalES;
            pop.stagnant = 0;
            report.switch_generation = pop.generation;
        }
    }

    report.generations = pop.generation;
    report.seconds = elapsed();
    return report;
}

} // namespace esga
