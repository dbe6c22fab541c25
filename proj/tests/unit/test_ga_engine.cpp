#include <doctest.h>

#include <algorithm>
#include <stdexcept>

#include "esga/ga_engine.hpp"
#include "esga/oracle.hpp"
#include "esga/report.hpp"
#include "esga/two_opt.hpp"
#include "test_support.hpp"

using namespace esga;

namespace {

GAConfig small_config(std::uint64_t seed) {
    GAConfig cfg;
    cfg.n_pop = 20;
    cfg.n_ch = 5;
    cfg.g_stagnation = 10;
    cfg.seed = seed;
    return cfg;
}

} // namespace

TEST_CASE("config validation") {
    GAConfig cfg;
    CHECK_NOTHROW(cfg.validate());
    auto rejects = [](auto mutate) {
        GAConfig c;
        mutate(c);
        CHECK_THROWS_AS(c.validate(), std::invalid_argument);
    };
    rejects([](GAConfig& c) { c.n_pop = 1; });
    rejects([](GAConfig& c) { c.n_ch = 0; });
    rejects([](GAConfig& c) { c.g_stagnation = 0; });
    rejects([](GAConfig& c) { c.k_multiple = 0; });
    rejects([](GAConfig& c) { c.block_rings = 0; });
    rejects([](GAConfig& c) { c.neighbor_k = 0; });
    rejects([](GAConfig& c) { c.time_limit_seconds = 0.0; });
    CHECK(cfg.n_pop == 200);
    CHECK(cfg.n_ch == 20);
    CHECK(cfg.g_stagnation == 30);
    CHECK(cfg.k_multiple == 6);
    CHECK(cfg.neighbor_k == 10);
    CHECK(strategy_name(cfg.strategy_for(Stage::LocalES)) == "random");
    CHECK(strategy_name(cfg.strategy_for(Stage::GlobalES)) == "block");
}

TEST_CASE("strategy names parse") {
    CHECK(parse_strategy_kind("single") == StrategyKind::Single);
    CHECK(parse_strategy_kind("block") == StrategyKind::Block);
    CHECK(to_string(parse_strategy_kind("kmultiple")) == "kmultiple");
    CHECK_THROWS_AS(parse_strategy_kind("Block"), std::invalid_argument);
}

TEST_CASE("square population is all perimeter tours") {
    for (double side : {1.0, 10.0}) {
        const auto sq = esga::testing::square(side);
        const NeighborLists nbrs(sq);
        GAConfig cfg;
        cfg.n_pop = 5;
        Rng rng(1);
        const auto pop = init_population(sq, nbrs, cfg, rng);
        REQUIRE(pop.members.size() == 5);
        for (std::size_t i = 0; i < pop.members.size(); ++i) {
            CHECK(pop.lengths[i] == static_cast<std::int64_t>(4 * side));
            if (side > 1.0) {
                CHECK(pop.members[i] == Tour({0, 1, 2, 3}));
            }
        }
        CHECK(pop.stage == Stage::LocalES);
        CHECK(pop.stagnant == 0);
        CHECK(pop.generation == 0);
    }
}

TEST_CASE("initial population is valid and reproducible") {
    const auto inst = esga::testing::random_instance(60, 2);
    const NeighborLists nbrs(inst);
    const auto cfg = small_config(5);
    Rng r1(cfg.seed);
    Rng r2(cfg.seed);
    const auto p1 = init_population(inst, nbrs, cfg, r1);
    const auto p2 = init_population(inst, nbrs, cfg, r2);
    for (int i = 0; i < cfg.n_pop; ++i) {
        CHECK_FALSE(validate(p1.members[i].order(), 60).has_value());
        CHECK(p1.lengths[i] == tour_length(inst, p1.members[i]));
        CHECK(std::ranges::equal(p1.members[i].order(), p2.members[i].order()));
    }
    CHECK(p1.best_length == *std::min_element(p1.lengths.begin(), p1.lengths.end()));
}

TEST_CASE("a population of identical tours is a fixed point") {
    const auto inst = esga::testing::random_instance(25, 3);
    const NeighborLists nbrs(inst);
    Rng rng(3);
    Population pop;
    const auto tour = random_tour(25, rng);
    pop.members.assign(6, tour);
    pop.lengths.assign(6, tour_length(inst, tour));
    pop.best_length = pop.lengths[0];
    const auto cfg = small_config(3);
    for (int g = 1; g <= 3; ++g) {
        step_generation(pop, inst, nbrs, cfg, rng);
        CHECK(pop.stagnant == g);
        CHECK(pop.generation == g);
        for (const auto& m : pop.members) {
            CHECK(std::ranges::equal(m.order(), tour.order()));
        }
    }
}

TEST_CASE("no slot ever gets longer within a generation") {
    const auto inst = esga::testing::random_instance(120, 4);
    const NeighborLists nbrs(inst);
    auto cfg = small_config(4);
    Rng rng(cfg.seed);
    auto pop = init_population(inst, nbrs, cfg, rng);
    for (int g = 0; g < 30; ++g) {
        if (g == 15) {
            pop.stage = Stage::GlobalES;
        }
        const auto before = pop.lengths;
        const auto best_before = pop.best_length;
        const auto stagnant_before = pop.stagnant;
        step_generation(pop, inst, nbrs, cfg, rng);
        for (int i = 0; i < cfg.n_pop; ++i) {
            REQUIRE(pop.lengths[i] <= before[i]);
            REQUIRE(pop.lengths[i] == tour_length(inst, pop.members[i]));
            REQUIRE_FALSE(validate(pop.members[i].order(), inst.size()).has_value());
        }
        REQUIRE(pop.best_length <= best_before);
        REQUIRE(pop.best_length == *std::min_element(pop.lengths.begin(), pop.lengths.end()));
        REQUIRE(pop.stagnant == (pop.best_length < best_before ? 0 : stagnant_before + 1));
    }
}

TEST_CASE("eight cities: the GA reaches the Held-Karp optimum") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        const auto inst = esga::testing::random_instance(8, 700 + seed);
        const auto optimum = oracle::held_karp(inst);
        const NeighborLists nbrs(inst);
        auto cfg = small_config(seed);
        cfg.n_pop = 6;
        Rng rng(seed);
        auto pop = init_population(inst, nbrs, cfg, rng);
        std::int64_t previous = pop.best_length;
        for (int g = 0; g < 200; ++g) {
            step_generation(pop, inst, nbrs, cfg, rng);
            REQUIRE(pop.best_length <= previous);
            previous = pop.best_length;
        }
        CAPTURE(seed);
        CHECK(pop.best_length == optimum);
    }
}

TEST_CASE("square with G=1: one switch, then stop") {
    const auto sq = esga::testing::square(10);
    GAConfig cfg;
    cfg.n_pop = 5;
    cfg.g_stagnation = 1;
    const auto report = run(sq, cfg);
    REQUIRE(report.switch_generation.has_value());
    CHECK(*report.switch_generation == 1);
    CHECK(report.generations == 2);
    REQUIRE(report.trace.size() == 3);
    CHECK(report.trace[1].stage == Stage::LocalES);
    CHECK(report.trace[2].stage == Stage::GlobalES);
    CHECK(report.best_length == 40);
    CHECK_FALSE(report.hit_time_limit);
}

TEST_CASE("run report invariants") {
    const auto inst = esga::testing::random_instance(80, 6);
    const auto report = run(inst, small_config(6));
    CHECK(report.best_length == tour_length(inst, report.best_tour));
    CHECK(report.best_length == report.trace.back().best);
    CHECK(report.generations == report.trace.back().generation);
    CHECK(report.instance == "random");
    CHECK(report.seed == 6);
    for (std::size_t i = 1; i < report.trace.size(); ++i) {
        CHECK(report.trace[i].best <= report.trace[i - 1].best);
        CHECK(report.trace[i].generation == static_cast<int>(i));
    }
}

TEST_CASE("identical seeds give identical runs") {
    const auto inst = esga::testing::random_instance(70, 8);
    const auto a = run(inst, small_config(11));
    const auto b = run(inst, small_config(11));
    CHECK(std::ranges::equal(a.best_tour.order(), b.best_tour.order()));
    CHECK(a.trace == b.trace);
    auto ja = report_to_json(a);
    auto jb = report_to_json(b);
    ja.erase("seconds");
    jb.erase("seconds");
    CHECK(ja == jb);
}

TEST_CASE("survivor score hook decides replacement") {
    const auto inst = esga::testing::random_instance(60, 9);
    const NeighborLists nbrs(inst);
    auto cfg = small_config(9);
    int calls = 0;
    cfg.survivor_score = [&](const Tour&, std::int64_t, const Offspring&) {
        ++calls;
        return -1.0;
    };
    Rng rng(cfg.seed);
    auto pop = init_population(inst, nbrs, cfg, rng);
    const auto before = pop.lengths;
    step_generation(pop, inst, nbrs, cfg, rng);
    CHECK(calls > 0);
    CHECK(pop.lengths == before);

    // Preferring longer children is honored too.
    cfg.survivor_score = [](const Tour&, std::int64_t parent, const Offspring& child) {
        return static_cast<double>(child.length - parent);
    };
    step_generation(pop, inst, nbrs, cfg, rng);
    CHECK(std::any_of(pop.lengths.begin(), pop.lengths.end(), [&](std::int64_t l) {
        return l > *std::max_element(before.begin(), before.end());
    }));
}

TEST_CASE("time limit stops the run") {
    const auto inst = esga::testing::random_instance(200, 10);
    auto cfg = small_config(10);
    cfg.g_stagnation = 1000;
    cfg.time_limit_seconds = 0.2;
    const auto report = run(inst, cfg);
    CHECK(report.hit_time_limit);
    CHECK(report.seconds < 5.0);
    CHECK(report.best_length == tour_length(inst, report.best_tour));
}

TEST_CASE("observer sees every generation") {
    const auto inst = esga::testing::random_instance(40, 12);
    const NeighborLists nbrs(inst);
    std::vector<int> seen;
    const auto report = run(inst, nbrs, small_config(12), [&](const Population& p) { seen.push_back(p.generation); });
    REQUIRE(static_cast<int>(seen.size()) == report.generations + 1);
    for (int g = 0; g <= report.generations; ++g) {
        CHECK(seen[g] == g);
    }
}
