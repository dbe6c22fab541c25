#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "esga/es_crossover.hpp"

namespace esga {

std::string strategy_name(const Strategy& s) {
    struct Visitor {
        std::string operator()(const strategy::Single&) const { return "single"; }
        std::string operator()(const strategy::Random&) const { return "random"; }
        std::string operator()(const strategy::KMultiple&) const { return "kmultiple"; }
        std::string operator()(const strategy::Block&) const { return "block"; }
    };
    return std::visit(Visitor{}, s);
}

RingSelector::RingSelector(std::span<const MRing> rings, std::vector<Point> centroids, int min_ring_size)
    : rings_(rings), centroids_(std::move(centroids)) {
    for (int i = 0; i < static_cast<int>(rings_.size()); ++i) {
        if (rings_[i].size() >= min_ring_size) {
            effective_.push_back(i);
        }
    }
    unused_single_ = effective_;
}

RSet RingSelector::make_rset(std::vector<int> rings) const {
    std::sort(rings.begin(), rings.end());
    RSet rset;
    for (int r : rings) {
        rset.size += rings_[r].size();
    }
    rset.rings = std::move(rings);
    return rset;
}

RSet RingSelector::select_block(int seed_ring, int target_rings) const {
    if (centroids_.size() != rings_.size()) {
        throw std::logic_error("block selection needs one centroid per ring");
    }
    const Point seed = centroids_[seed_ring];
    auto dist2 = [&](int r) {
        const double dx = centroids_[r].x - seed.x;
        const double dy = centroids_[r].y - seed.y;
        return dx * dx + dy * dy;
    };

    std::vector<int> others;
    others.reserve(effective_.size());
    for (int r : effective_) {
        if (r != seed_ring) {
            others.push_back(r);
        }
    }
    const auto take = std::min<std::size_t>(std::max(target_rings - 1, 0), others.size());
    std::partial_sort(others.begin(), others.begin() + static_cast<std::ptrdiff_t>(take), others.end(),
                      [&](int a, int b) {
                          const double da = dist2(a);
                          const double db = dist2(b);
                          return da != db ? da < db : a < b;
                      });
    others.resize(take);
    others.push_back(seed_ring);
    return make_rset(std::move(others));
}

std::optional<RSet> RingSelector::select(const Strategy& strategy, Rng& rng) {
    if (effective_.empty()) {
        return std::nullopt;
    }
    const int count = static_cast<int>(effective_.size());

    if (std::holds_alternative<strategy::Single>(strategy)) {
        if (unused_single_.empty()) {
            return std::nullopt;
        }
        const int at = uniform_index(rng, static_cast<int>(unused_single_.size()));
        const int ring = unused_single_[at];
        unused_single_[at] = unused_single_.back();
        unused_single_.pop_back();
        return make_rset({ring});
    }

    if (const auto* random = std::get_if<strategy::Random>(&strategy)) {
        for (int attempt = 0; attempt < std::max(random->max_redraws, 1); ++attempt) {
            std::vector<int> chosen;
            for (int r : effective_) {
                if (coin_flip(rng)) {
                    chosen.push_back(r);
                }
            }
            if (!chosen.empty()) {
                return make_rset(std::move(chosen));
            }
        }
        return std::nullopt;
    }

    if (const auto* multiple = std::get_if<strategy::KMultiple>(&strategy)) {
        std::vector<int> pool = effective_;
        const int take = std::min(std::max(multiple->k, 1), count);
        for (int i = 0; i < take; ++i) {
            const int j = i + uniform_index(rng, count - i);
            std::swap(pool[i], pool[j]);
        }
        pool.resize(take);
        return make_rset(std::move(pool));
    }

    const auto& block = std::get<strategy::Block>(strategy);
    const int seed = effective_[uniform_index(rng, count)];
    return select_block(seed, std::max(block.target_rings, 1));
}

} // namespace esga
