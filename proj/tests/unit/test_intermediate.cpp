#include <doctest.h>

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>

#include "esga/es_crossover.hpp"
#include "esga/two_opt.hpp"
#include "test_support.hpp"

using namespace esga;
using esga::testing::multiset_difference;

namespace {

/// Union-find over the link graph, independent of label_loops.
std::vector<int> components(const IntermediateSolution& im) {
    std::vector<int> parent(im.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) {
            x = parent[x] = parent[parent[x]];
        }
        return x;
    };
    for (int c = 0; c < im.size(); ++c) {
        for (int o : im.links[c]) {
            parent[find(c)] = find(o);
        }
    }
    std::vector<int> root(im.size());
    for (int c = 0; c < im.size(); ++c) {
        root[c] = find(c);
    }
    return root;
}

void check_structure(const IntermediateSolution& im) {
    const int n = im.size();
    std::vector<int> degree(n);
    for (const auto& e : im.edges()) {
        ++degree[e.u];
        ++degree[e.v];
    }
    REQUIRE(std::all_of(degree.begin(), degree.end(), [](int d) { return d == 2; }));
    REQUIRE(static_cast<int>(im.edges().size()) == n);

    const auto loops = im.loops();
    REQUIRE(static_cast<int>(loops.size()) == im.loop_count);
    std::vector<int> seen(n);
    for (const auto& loop : loops) {
        for (int c : loop) {
            ++seen[c];
        }
    }
    REQUIRE(std::all_of(seen.begin(), seen.end(), [](int s) { return s == 1; }));

    const auto root = components(im);
    auto roots = root;
    std::sort(roots.begin(), roots.end());
    REQUIRE(std::unique(roots.begin(), roots.end()) - roots.begin() == im.loop_count);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            REQUIRE((root[a] == root[b]) == (im.loop_of[a] == im.loop_of[b]));
        }
    }
}

/// Random partition of the cities into cycles of at least three.
IntermediateSolution random_loops(int n, Rng& rng) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    IntermediateSolution im;
    im.links.resize(n);
    int at = 0;
    while (at < n) {
        int len = 3 + uniform_index(rng, 4);
        if (n - at - len < 3) {
            len = n - at;
        }
        for (int i = 0; i < len; ++i) {
            const int c = perm[at + i];
            im.links[c] = {perm[at + (i + len - 1) % len], perm[at + (i + 1) % len]};
        }
        at += len;
    }
    im.label_loops();
    return im;
}

std::int64_t multigraph_length(const Instance& inst, const IntermediateSolution& im) {
    std::int64_t total = 0;
    for (const auto& e : im.edges()) {
        total += inst.distance(e.u, e.v);
    }
    return total;
}

struct LoopStats {
    std::map<int, int> size_of_loop;
    int min_size = std::numeric_limits<int>::max();
};

LoopStats loop_stats(const IntermediateSolution& im) {
    LoopStats s;
    for (int c = 0; c < im.size(); ++c) {
        ++s.size_of_loop[im.loop_of[c]];
    }
    for (const auto& [loop, sz] : s.size_of_loop) {
        s.min_size = std::min(s.min_size, sz);
    }
    return s;
}

/// Cheapest single splice of `loop` into any other loop, over all edge pairs.
std::int64_t exhaustive_best(const Instance& inst, const IntermediateSolution& im, int loop) {
    std::int64_t best = std::numeric_limits<std::int64_t>::max();
    const auto edges = im.edges();
    for (const auto& e1 : edges) {
        if (im.loop_of[e1.u] != loop) {
            continue;
        }
        for (const auto& e2 : edges) {
            if (im.loop_of[e2.u] == loop) {
                continue;
            }
            const auto removed = inst.distance(e1.u, e1.v) + inst.distance(e2.u, e2.v);
            const auto straight = inst.distance(e1.u, e2.u) + inst.distance(e1.v, e2.v);
            const auto crossed = inst.distance(e1.u, e2.v) + inst.distance(e1.v, e2.u);
            best = std::min<std::int64_t>(best, std::min(straight, crossed) - removed);
        }
    }
    return best;
}

} // namespace

TEST_CASE("empty R-set leaves parent A as one loop") {
    Rng rng(1);
    const auto pa = random_tour(12, rng);
    const auto im = apply_rset(pa, {}, RSet{});
    CHECK(im.loop_count == 1);
    CHECK(im.edges() == edges_of(pa));
    check_structure(im);
}

TEST_CASE("four-vertex ring swap yields the other parent") {
    MRing ring;
    ring.edges = {{0, 1, Parent::A}, {1, 3, Parent::B}, {3, 2, Parent::A}, {2, 0, Parent::B}};
    const std::vector<MRing> rings{ring};
    const auto im = apply_rset(Tour({0, 1, 2, 3}), rings, RSet{{0}, 2});
    CHECK(im.edges() == std::vector<Edge>{{0, 2}, {0, 3}, {1, 2}, {1, 3}});
    CHECK(im.loop_count == 1);

    // Same result through the real partition with size-2 rings admitted.
    const Tour pa({0, 1, 2, 3});
    const auto g = merge_graphs(pa, Tour({0, 2, 1, 3}));
    Rng rng(3);
    const auto parts = partition_m_rings(g, rng);
    RingSelector sel(parts, {}, 2);
    REQUIRE(sel.effective().size() == 1);
    const auto rset = sel.select(strategy::Single{}, rng);
    REQUIRE(rset.has_value());
    const auto im2 = apply_rset(pa, parts, *rset);
    CHECK(im2.edges() == edges_of(Tour({0, 2, 1, 3})));
    CHECK(im2.loop_count == 1);
}

TEST_CASE("apply_rset over 1000 random parent pairs") {
    Rng rng(55);
    const std::vector<Strategy> strategies{strategy::Single{}, strategy::Random{}, strategy::KMultiple{6},
                                           strategy::Block{6}};
    int checked = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        const int n = 5 + uniform_index(rng, 46);
        const auto inst = esga::testing::random_instance(n, 1000 + trial);
        const auto pa = random_tour(n, rng);
        const auto pb = random_tour(n, rng);
        const auto rings = partition_m_rings(merge_graphs(pa, pb), rng);
        RingSelector sel(rings, ring_centroids(inst, rings));
        const auto rset = sel.select(strategies[trial % strategies.size()], rng);
        if (!rset) {
            continue;
        }
        ++checked;
        const auto im = apply_rset(pa, rings, *rset);
        CAPTURE(trial);
        check_structure(im);
        CHECK(im.loop_count >= 1);
        CHECK(multiset_difference(im.edges(), edges_of(pa)) == 2 * rset->size);
    }
    CHECK(checked > 900);
}

TEST_CASE("one loop in, the same tour out") {
    const auto inst = esga::testing::random_instance(15, 2);
    const NeighborLists nbrs(inst);
    Rng rng(2);
    const auto pa = random_tour(15, rng);
    CHECK(merge_subloops(inst, nbrs, apply_rset(pa, {}, RSet{})) == pa);
}

TEST_CASE("two triangles join through their two shortest connecting edges") {
    // Left triangle 0,1,2 and right triangle 3,4,5; 0-3 and 1-4 are 3 apart.
    const auto inst = esga::testing::make_instance({{0, 0}, {0, 10}, {-8, 5}, {3, 0}, {3, 10}, {11, 5}});
    IntermediateSolution im;
    im.links = {{{1, 2}}, {{0, 2}}, {{0, 1}}, {{4, 5}}, {{3, 5}}, {{3, 4}}};
    im.label_loops();
    REQUIRE(im.loop_count == 2);
    const auto total = multigraph_length(inst, im);

    // Enumerate every splice by hand.
    const std::vector<Edge> left{{0, 1}, {0, 2}, {1, 2}};
    const std::vector<Edge> right{{3, 4}, {3, 5}, {4, 5}};
    std::int64_t best = std::numeric_limits<std::int64_t>::max();
    for (const auto& l : left) {
        for (const auto& r : right) {
            const auto base = total - inst.distance(l.u, l.v) - inst.distance(r.u, r.v);
            best = std::min<std::int64_t>(best, base + inst.distance(l.u, r.u) + inst.distance(l.v, r.v));
            best = std::min<std::int64_t>(best, base + inst.distance(l.u, r.v) + inst.distance(l.v, r.u));
        }
    }
    for (int k : {1, 2, 5}) {
        CAPTURE(k);
        const NeighborLists nbrs(inst, k);
        const auto tour = merge_subloops(inst, nbrs, im);
        CHECK(tour == Tour({0, 2, 1, 4, 5, 3}));
        CHECK(tour_length(inst, tour) == best);
        CHECK(best == total - 20 + 6);
    }
}

TEST_CASE("each greedy step is the cheapest splice of the smallest loop") {
    Rng rng(808);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 6 + uniform_index(rng, 7);
        const auto inst = esga::testing::random_instance(n, 5000 + trial);
        // Full lists make the candidate scan exhaustive.
        const NeighborLists nbrs(inst, n - 1);
        SubloopMerger merger(inst, nbrs, random_loops(n, rng));
        std::int64_t length = multigraph_length(inst, merger.current());
        while (merger.loop_count() > 1) {
            const auto before = merger.current();
            const auto stats = loop_stats(before);
            const auto move = merger.step();
            const int loop = before.loop_of[move.a];
            CAPTURE(trial);
            REQUIRE(stats.size_of_loop.at(loop) == stats.min_size);
            REQUIRE(move.delta == exhaustive_best(inst, before, loop));
            length += move.delta;
            REQUIRE(multigraph_length(inst, merger.current()) == length);
        }
        const auto tour = merger.tour();
        REQUIRE_FALSE(validate(tour.order(), n).has_value());
        REQUIRE(tour_length(inst, tour) == length);
    }
}

TEST_CASE("short neighbor lists still merge everything into a valid tour") {
    Rng rng(31);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 6 + uniform_index(rng, 60);
        const auto inst = esga::testing::random_instance(n, 9000 + trial);
        const NeighborLists nbrs(inst, 1 + trial % 3);
        auto im = random_loops(n, rng);
        const auto start = multigraph_length(inst, im);
        SubloopMerger merger(inst, nbrs, std::move(im));
        const auto delta = merger.finish();
        const auto tour = merger.tour();
        REQUIRE_FALSE(validate(tour.order(), n).has_value());
        REQUIRE(tour_length(inst, tour) == start + delta);
    }
}

TEST_CASE("two-city loops from doubled edges are merged") {
    const auto inst = esga::testing::make_instance({{0, 0}, {1, 0}, {5, 0}, {6, 1}, {5, 2}});
    IntermediateSolution im;
    im.links = {{{1, 1}}, {{0, 0}}, {{3, 4}}, {{2, 4}}, {{2, 3}}};
    im.label_loops();
    REQUIRE(im.loop_count == 2);
    check_structure(im);
    const NeighborLists nbrs(inst, 2);
    const auto tour = merge_subloops(inst, nbrs, im);
    CHECK_FALSE(validate(tour.order(), 5).has_value());
}
