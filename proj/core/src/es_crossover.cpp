#include <stdexcept>

#include "esga/es_crossover.hpp"

namespace esga {

std::vector<Offspring> es_crossover(const Instance& inst, const NeighborLists& nbrs, const Tour& pa,
                                    const Tour& pb, const Strategy& strategy, int n_ch, Rng& rng,
                                    const EsOptions& options) {
    const auto graph = merge_graphs(pa, pb);
    const auto rings = partition_m_rings(graph, rng);

    std::vector<Point> centroids;
    if (std::holds_alternative<strategy::Block>(strategy)) {
        centroids = ring_centroids(inst, rings);
    }
    RingSelector selector(rings, std::move(centroids), options.min_ring_size);

    std::vector<Offspring> children;
    if (!selector.has_effective()) {
        return children;
    }

    const std::int64_t parent_length = tour_length(inst, pa);
    const bool single = std::holds_alternative<strategy::Single>(strategy);
    children.reserve(n_ch);

    for (int child = 0; child < n_ch; ++child) {
        auto rset = selector.select(strategy, rng);
        if (!rset) {
            if (single) {
                break;
            }
            continue;
        }

        std::int64_t swap_delta = 0;
        for (int r : rset->rings) {
            for (const auto& e : rings[r].edges) {
                const int w = inst.distance(e.from, e.to);
                swap_delta += e.parent == Parent::B ? w : -w;
            }
        }

        auto im = apply_rset(pa, rings, *rset);
        const int loops = im.loop_count;
        SubloopMerger merger(inst, nbrs, std::move(im));
        const std::int64_t merge_delta = merger.finish();

        children.push_back(Offspring{merger.tour(), parent_length + swap_delta + merge_delta, rset->size, loops});
    }
    return children;
}

} // namespace esga
