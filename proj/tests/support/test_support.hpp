#pragma once

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "esga/instance.hpp"
#include "esga/random.hpp"
#include "esga/tour.hpp"

namespace esga::testing {

inline std::filesystem::path data_dir() {
    return ESGA_DATA_DIR;
}

/// Uniform integer coordinates in [0, extent].
inline Instance random_instance(int n, std::uint64_t seed, int extent = 1000, std::string name = "random") {
    std::mt19937_64 gen(seed);
    std::uniform_int_distribution<int> coord(0, extent);
    std::vector<Point> pts(n);
    for (auto& p : pts) {
        p = {static_cast<double>(coord(gen)), static_cast<double>(coord(gen))};
    }
    return Instance(std::move(name), std::move(pts), EdgeWeightKind::Euc2d);
}

inline Instance make_instance(std::vector<Point> pts, EdgeWeightKind kind = EdgeWeightKind::Euc2d) {
    return Instance("test", std::move(pts), kind);
}

/// Square with the given side: 0=(0,0) 1=(s,0) 2=(s,s) 3=(0,s).
inline Instance square(double side) {
    return make_instance({{0, 0}, {side, 0}, {side, side}, {0, side}});
}

/// TSPLIB EUC_2D rounding written out independently of the library.
inline std::int64_t nint_distance(Point a, Point b) {
    return static_cast<std::int64_t>(std::floor(std::hypot(a.x - b.x, a.y - b.y) + 0.5));
}

/// Tour length summed straight from coordinates.
inline std::int64_t reference_length(const Instance& inst, std::span<const int> order) {
    std::int64_t total = 0;
    for (std::size_t i = 0; i < order.size(); ++i) {
        total += nint_distance(inst.coord(order[i]), inst.coord(order[(i + 1) % order.size()]));
    }
    return total;
}

/// Undirected edge multiset as counts.
inline std::map<Edge, int> edge_counts(const std::vector<Edge>& edges) {
    std::map<Edge, int> counts;
    for (const auto& e : edges) {
        ++counts[e];
    }
    return counts;
}

/// Size of the multiset symmetric difference.
inline int multiset_difference(const std::vector<Edge>& lhs, const std::vector<Edge>& rhs) {
    auto a = edge_counts(lhs);
    auto b = edge_counts(rhs);
    int diff = 0;
    for (const auto& [e, count] : a) {
        const auto it = b.find(e);
        diff += std::abs(count - (it == b.end() ? 0 : it->second));
    }
    for (const auto& [e, count] : b) {
        if (!a.contains(e)) {
            diff += count;
        }
    }
    return diff;
}

} // namespace esga::testing
