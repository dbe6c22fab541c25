#include "esga/two_opt.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace esga {

Tour random_tour(int n, Rng& rng) {
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    return Tour(std::move(order));
}

namespace {

class TwoOpt {
  public:
    TwoOpt(const Instance& inst, const NeighborLists& nbrs, Tour& tour)
        : inst_(inst), nbrs_(nbrs), tour_(tour), queued_(tour.size(), 0) {}

    void run(Rng& rng) {
        std::vector<int> cities(tour_.size());
        std::iota(cities.begin(), cities.end(), 0);
        std::shuffle(cities.begin(), cities.end(), rng);
        for (int c : cities) {
            push(c);
        }

        bool improved_in_sweep = true;
        while (improved_in_sweep) {
            drain();
            // Don't-look bits are a heuristic: a move elsewhere can change
            // next(c) for some c in nbrs[a] without touching a. A final sweep
            // over every city closes that gap.
            improved_in_sweep = false;
            std::shuffle(cities.begin(), cities.end(), rng);
            for (int a : cities) {
                if (improve_from(a)) {
                    improved_in_sweep = true;
                }
            }
        }
    }

  private:
    void push(int city) {
        if (!queued_[city]) {
            queued_[city] = 1;
            active_.push_back(city);
        }
    }

    void drain() {
        while (!active_.empty()) {
            const int a = active_.front();
            active_.pop_front();
            queued_[a] = 0;
            while (improve_from(a)) {
            }
        }
    }

    /// Applies the first improving move anchored at `a`.
    bool improve_from(int a) {
        for (int dir = 0; dir < 2; ++dir) {
            const int b = dir == 0 ? tour_.next(a) : tour_.prev(a);
            const int w_ab = inst_.distance(a, b);
            for (int c : nbrs_[a]) {
                const int d = dir == 0 ? tour_.next(c) : tour_.prev(c);
                if (c == b || d == a) {
                    continue;
                }
                const int gain = w_ab + inst_.distance(c, d) - inst_.distance(a, c) - inst_.distance(b, d);
                if (gain <= 0) {
                    continue;
                }
                // dir 0: a b ... c d -> a c ... b d
                // dir 1: b a ... d c -> b d ... a c
                if (dir == 0) {
                    tour_.reverse_path(b, c);
                } else {
                    tour_.reverse_path(a, d);
                }
                push(a);
                push(b);
                push(c);
                push(d);
                return true;
            }
        }
        return false;
    }

    const Instance& inst_;
    const NeighborLists& nbrs_;
    Tour& tour_;
    std::deque<int> active_;
    std::vector<char> queued_;
};

} // namespace

Tour two_opt(const Instance& inst, const NeighborLists& nbrs, Tour tour, Rng& rng) {
    if (tour.size() >= 4) {
        TwoOpt(inst, nbrs, tour).run(rng);
    }
    return tour;
}

} // namespace esga
