#include "esga/oracle.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <iterator>
#include <tuple>
#include <vector>

namespace esga::oracle {

std::pair<std::int64_t, Tour> brute_force_optimum(const Instance& inst) {
    const int n = inst.size();
    if (n > kBruteForceLimit) {
        throw std::invalid_argument("brute force is limited to " + std::to_string(kBruteForceLimit) + " cities");
    }
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::vector<int> best_order = order;
    std::int64_t best = std::numeric_limits<std::int64_t>::max();
    do {
        // Each cycle appears twice (once per direction); keep one.
        if (order[1] > order[n - 1]) {
            continue;
        }
        std::int64_t len = inst.distance(order[n - 1], order[0]);
        for (int i = 0; i + 1 < n; ++i) {
            len += inst.distance(order[i], order[i + 1]);
        }
        if (len < best) {
            best = len;
            best_order = order;
        }
    } while (std::next_permutation(order.begin() + 1, order.end()));
    return {best, Tour(std::move(best_order))};
}

std::int64_t held_karp(const Instance& inst) {
    const int n = inst.size();
    if (n > kHeldKarpLimit) {
        throw std::invalid_argument("Held-Karp is limited to " + std::to_string(kHeldKarpLimit) + " cities");
    }
    // City 0 is the fixed start; subsets range over cities 1..n-1.
    const int m = n - 1;
    const std::size_t subsets = std::size_t{1} << m;
    constexpr auto kInf = std::numeric_limits<std::int64_t>::max() / 4;
    std::vector<std::int64_t> cost(subsets * m, kInf);
    auto at = [&](std::size_t mask, int last) -> std::int64_t& { return cost[mask * m + last]; };

    for (int j = 0; j < m; ++j) {
        at(std::size_t{1} << j, j) = inst.distance(0, j + 1);
    }
    for (std::size_t mask = 1; mask < subsets; ++mask) {
        for (int last = 0; last < m; ++last) {
            if (!(mask & (std::size_t{1} << last))) {
                continue;
            }
            const auto here = at(mask, last);
            if (here >= kInf) {
                continue;
            }
            for (int next = 0; next < m; ++next) {
                const auto bit = std::size_t{1} << next;
                if (mask & bit) {
                    continue;
                }
                auto& slot = at(mask | bit, next);
                slot = std::min(slot, here + inst.distance(last + 1, next + 1));
            }
        }
    }
    std::int64_t best = kInf;
    for (int last = 0; last < m; ++last) {
        best = std::min(best, at(subsets - 1, last) + inst.distance(last + 1, 0));
    }
    return best;
}

std::optional<std::string> check_partition(const MergedGraph& graph, std::span<const MRing> rings) {
    using Key = std::tuple<int, int, int>;
    auto key = [](const LabeledEdge& e) {
        return Key{std::min(e.from, e.to), std::max(e.from, e.to), e.parent == Parent::A ? 0 : 1};
    };
    auto label = [](Parent p) { return p == Parent::A ? "A" : "B"; };

    for (std::size_t r = 0; r < rings.size(); ++r) {
        const auto& edges = rings[r].edges;
        const auto where = "ring " + std::to_string(r) + ": ";
        if (edges.empty() || edges.size() % 2 != 0) {
            return where + "edge count " + std::to_string(edges.size()) + " is not a positive even number";
        }
        for (std::size_t i = 0; i < edges.size(); ++i) {
            const auto& cur = edges[i];
            const auto& nxt = edges[(i + 1) % edges.size()];
            if (cur.to != nxt.from) {
                return where + "edge " + std::to_string(i) + " ends at " + std::to_string(cur.to) +
                       " but the next edge starts at " + std::to_string(nxt.from);
            }
            if (cur.parent == nxt.parent) {
                return where + "edges " + std::to_string(i) + " and " + std::to_string((i + 1) % edges.size()) +
                       " are both labeled " + label(cur.parent);
            }
        }
    }

    std::vector<Key> expected;
    for (const auto& e : graph.edges()) {
        expected.push_back(key(e));
    }
    std::vector<Key> covered;
    for (const auto& ring : rings) {
        for (const auto& e : ring.edges) {
            covered.push_back(key(e));
        }
    }
    std::sort(expected.begin(), expected.end());
    std::sort(covered.begin(), covered.end());

    std::vector<Key> missing;
    std::set_difference(expected.begin(), expected.end(), covered.begin(), covered.end(), std::back_inserter(missing));
    if (!missing.empty()) {
        const auto [u, v, p] = missing.front();
        return "edge {" + std::to_string(u) + "," + std::to_string(v) + "}/" + (p == 0 ? "A" : "B") +
               " is not covered by any ring";
    }
    std::vector<Key> extra;
    std::set_difference(covered.begin(), covered.end(), expected.begin(), expected.end(), std::back_inserter(extra));
    if (!extra.empty()) {
        const auto [u, v, p] = extra.front();
        return "edge {" + std::to_string(u) + "," + std::to_string(v) + "}/" + (p == 0 ? "A" : "B") +
               " is covered more often than it occurs in the merged graph";
    }
    return std::nullopt;
}

} // namespace esga::oracle
