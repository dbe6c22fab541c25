#pragma once

/// @file ga_engine.hpp
/// @brief Two-stage genetic algorithm driven by ES crossover.
///
/// Each generation draws a random permutation r of the population and, for
/// i = 1..N_pop, crosses P_A = x[r(i)] with P_B = x[r(i+1)] (wrapping to
/// r(1)). The best of the children and P_A takes P_A's slot. Stage one uses
/// a localized strategy until the best length stalls for G generations; stage
/// two switches to a global strategy and ends on the next G-generation stall.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "esga/es_crossover.hpp"
#include "esga/instance.hpp"
#include "esga/random.hpp"
#include "esga/tour.hpp"

namespace esga {

enum class Stage { LocalES, GlobalES };

enum class StrategyKind { Single, Random, KMultiple, Block };

std::string to_string(Stage stage);
std::string to_string(StrategyKind kind);

/// Accepts the lowercase names used on the command line; throws
/// std::invalid_argument otherwise.
StrategyKind parse_strategy_kind(const std::string& name);

/// Scores a child against the parent it would replace; larger is better. A
/// child replaces P_A only with a strictly positive score, so ties keep P_A.
/// The default is the length improvement parent_length - child.length.
using SurvivorScore =
    std::function<double(const Tour& parent, std::int64_t parent_length, const Offspring& child)>;

struct GAConfig {
    int n_pop = 200;
    int n_ch = 20;
    /// Stagnant generations that end each stage.
    int g_stagnation = 30;
    /// K of the K-multiple strategy.
    int k_multiple = 6;
    /// Rings per R-set of the block strategy.
    int block_rings = 6;
    StrategyKind local_strategy = StrategyKind::Random;
    StrategyKind global_strategy = StrategyKind::Block;
    int neighbor_k = NeighborLists::kDefaultK;
    std::uint64_t seed = 1;
    std::optional<double> time_limit_seconds;
    EsOptions es;
    /// Empty means length-based replacement.
    SurvivorScore survivor_score;

    /// Throws std::invalid_argument on out-of-range values.
    void validate() const;

    Strategy strategy_for(Stage stage) const;
};

struct Population {
    std::vector<Tour> members;
    std::vector<std::int64_t> lengths;
    /// Minimum member length.
    std::int64_t best_length = 0;
    int generation = 0;
    Stage stage = Stage::LocalES;
    /// Generations since best_length last strictly improved.
    int stagnant = 0;

    int best_index() const;
    double mean_length() const;
};

struct GenerationRecord {
    int generation = 0;
    std::int64_t best = 0;
    double mean = 0.0;
    /// Stage whose strategy produced this generation (generation 0 is the
    /// initial population).
    Stage stage = Stage::LocalES;

    bool operator==(const GenerationRecord&) const = default;
};

struct RunReport {
    std::string instance;
    Tour best_tour;
    std::int64_t best_length = 0;
    std::vector<GenerationRecord> trace;
    /// Generation after which the global stage took over.
    std::optional<int> switch_generation;
    int generations = 0;
    bool hit_time_limit = false;
    double seconds = 0.0;
    std::uint64_t seed = 0;
    GAConfig config;
};

/// N_pop tours, each 2-opt applied to a uniformly random permutation.
Population init_population(const Instance& inst, const NeighborLists& nbrs, const GAConfig& cfg, Rng& rng);

/// One pass of pairings over a fresh random permutation, using the strategy
/// of pop.stage. Later pairings see earlier replacements.
void step_generation(Population& pop, const Instance& inst, const NeighborLists& nbrs, const GAConfig& cfg,
                     Rng& rng);

/// Called after every generation (including generation 0).
using GenerationObserver = std::function<void(const Population&)>;

RunReport run(const Instance& inst, const GAConfig& cfg);
RunReport run(const Instance& inst, const NeighborLists& nbrs, const GAConfig& cfg,
              const GenerationObserver& observer = {});

} // namespace esga
