#include <algorithm>
#include <limits>
#include <stdexcept>
#include <utility>

#include "esga/es_crossover.hpp"

namespace esga {

namespace {

/// Next city along a degree-2 multigraph, given where we came from. A loop
/// of two cities has both slots pointing at the partner.
inline int step_from(const std::array<int, 2>& links, int prev) {
    return links[0] != prev ? links[0] : links[1];
}

void replace_link(std::array<int, 2>& links, int from, int to) {
    if (links[0] == from) {
        links[0] = to;
    } else if (links[1] == from) {
        links[1] = to;
    } else {
        throw std::logic_error("intermediate solution: missing link " + std::to_string(from));
    }
}

} // namespace

void IntermediateSolution::label_loops() {
    const int n = size();
    loop_of.assign(n, -1);
    loop_count = 0;
    for (int start = 0; start < n; ++start) {
        if (loop_of[start] != -1) {
            continue;
        }
        int prev = -1;
        int cur = start;
        do {
            loop_of[cur] = loop_count;
            const int next = step_from(links[cur], prev);
            prev = cur;
            cur = next;
        } while (cur != start);
        ++loop_count;
    }
}

std::vector<std::vector<int>> IntermediateSolution::loops() const {
    std::vector<std::vector<int>> out;
    std::vector<char> seen(size(), 0);
    for (int start = 0; start < size(); ++start) {
        if (seen[start]) {
            continue;
        }
        auto& loop = out.emplace_back();
        int prev = -1;
        int cur = start;
        do {
            seen[cur] = 1;
            loop.push_back(cur);
            const int next = step_from(links[cur], prev);
            prev = cur;
            cur = next;
        } while (cur != start);
    }
    return out;
}

std::vector<Edge> IntermediateSolution::edges() const {
    std::vector<Edge> out;
    out.reserve(links.size());
    for (int c = 0; c < size(); ++c) {
        for (int other : links[c]) {
            if (c < other) {
                out.emplace_back(c, other);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

IntermediateSolution apply_rset(const Tour& pa, std::span<const MRing> rings, const RSet& rset) {
    IntermediateSolution im;
    const int n = pa.size();
    im.links.resize(n);
    for (int c = 0; c < n; ++c) {
        im.links[c] = {pa.prev(c), pa.next(c)};
    }
    for (int r : rset.rings) {
        for (const auto& e : rings[r].edges) {
            if (e.parent == Parent::A) {
                replace_link(im.links[e.from], e.to, -1);
                replace_link(im.links[e.to], e.from, -1);
            }
        }
    }
    for (int r : rset.rings) {
        for (const auto& e : rings[r].edges) {
            if (e.parent == Parent::B) {
                replace_link(im.links[e.from], -1, e.to);
                replace_link(im.links[e.to], -1, e.from);
            }
        }
    }
    im.label_loops();
    return im;
}

SubloopMerger::SubloopMerger(const Instance& inst, const NeighborLists& nbrs, IntermediateSolution im)
    : inst_(inst), nbrs_(nbrs), im_(std::move(im)) {
    if (std::cmp_not_equal(im_.loop_of.size(), im_.links.size())) {
        im_.label_loops();
    }
    loop_count_ = im_.loop_count;
    loop_size_.assign(im_.loop_count, 0);
    loop_start_.assign(im_.loop_count, -1);
    for (int c = 0; c < im_.size(); ++c) {
        const int loop = im_.loop_of[c];
        if (loop_size_[loop]++ == 0) {
            loop_start_[loop] = c;
        }
    }
}

int SubloopMerger::smallest_loop() const {
    int best = -1;
    for (int l = 0; l < static_cast<int>(loop_size_.size()); ++l) {
        if (loop_size_[l] > 0 && (best < 0 || loop_size_[l] < loop_size_[best])) {
            best = l;
        }
    }
    return best;
}

std::vector<int> SubloopMerger::cities_of(int loop) const {
    std::vector<int> cities;
    cities.reserve(loop_size_[loop]);
    const int start = loop_start_[loop];
    int prev = -1;
    int cur = start;
    do {
        cities.push_back(cur);
        const int next = step_from(im_.links[cur], prev);
        prev = cur;
        cur = next;
    } while (cur != start);
    return cities;
}

LoopMerge SubloopMerger::step() {
    if (loop_count_ <= 1) {
        throw std::logic_error("SubloopMerger::step called with a single loop");
    }
    const int small = smallest_loop();
    const auto members = cities_of(small);

    LoopMerge best;
    best.delta = std::numeric_limits<std::int64_t>::max();
    bool found = false;

    auto consider = [&](int a, int b, int c, int d) {
        const std::int64_t removed = inst_.distance(a, b) + inst_.distance(c, d);
        const std::int64_t straight = inst_.distance(a, c) + inst_.distance(b, d);
        const std::int64_t crossed = inst_.distance(a, d) + inst_.distance(b, c);
        const std::int64_t delta = std::min(straight, crossed) - removed;
        if (delta < best.delta) {
            best = crossed < straight ? LoopMerge{a, b, d, c, delta} : LoopMerge{a, b, c, d, delta};
            found = true;
        }
    };

    for (int a : members) {
        for (int b : im_.links[a]) {
            for (int c : nbrs_[a]) {
                if (im_.loop_of[c] == small) {
                    continue;
                }
                for (int d : im_.links[c]) {
                    consider(a, b, c, d);
                }
            }
        }
    }

    if (!found) {
        // No candidate-list pair spans loops: splice exhaustively against the
        // loop that holds the city nearest to this one.
        int nearest_city = -1;
        int nearest_dist = std::numeric_limits<int>::max();
        for (int a : members) {
            for (int x = 0; x < im_.size(); ++x) {
                if (im_.loop_of[x] == small) {
                    continue;
                }
                const int dist = inst_.distance(a, x);
                if (dist < nearest_dist) {
                    nearest_dist = dist;
                    nearest_city = x;
                }
            }
        }
        const auto target = cities_of(im_.loop_of[nearest_city]);
        for (int a : members) {
            for (int b : im_.links[a]) {
                for (int c : target) {
                    for (int d : im_.links[c]) {
                        consider(a, b, c, d);
                    }
                }
            }
        }
    }

    const int absorbing = im_.loop_of[best.c];
    replace_link(im_.links[best.a], best.b, best.c);
    replace_link(im_.links[best.b], best.a, best.d);
    replace_link(im_.links[best.c], best.d, best.a);
    replace_link(im_.links[best.d], best.c, best.b);
    for (int c : members) {
        im_.loop_of[c] = absorbing;
    }
    loop_size_[absorbing] += loop_size_[small];
    loop_size_[small] = 0;
    --loop_count_;
    im_.loop_count = loop_count_;
    return best;
}

std::int64_t SubloopMerger::finish() {
    std::int64_t total = 0;
    while (loop_count_ > 1) {
        total += step().delta;
    }
    return total;
}

Tour SubloopMerger::tour() const {
    if (loop_count_ != 1) {
        throw std::logic_error("SubloopMerger::tour called before all loops were merged");
    }
    const int n = im_.size();
    std::vector<int> order;
    order.reserve(n);
    int prev = -1;
    int cur = 0;
    do {
        order.push_back(cur);
        const int next = step_from(im_.links[cur], prev);
        prev = cur;
        cur = next;
    } while (cur != 0 && static_cast<int>(order.size()) <= n);
    return Tour(std::move(order));
}

Tour merge_subloops(const Instance& inst, const NeighborLists& nbrs, IntermediateSolution im) {
    SubloopMerger merger(inst, nbrs, std::move(im));
    merger.finish();
    return merger.tour();
}

} // namespace esga
