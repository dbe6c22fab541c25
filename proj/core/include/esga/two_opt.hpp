#pragma once

#include "esga/instance.hpp"
#include "esga/random.hpp"
#include "esga/tour.hpp"

namespace esga {

/// Greedy first-improvement 2-opt restricted to neighbor lists, with
/// don't-look bits. For every city a, both tour directions and every c in
/// nbrs[a] are tried: (a,b),(c,d) -> (a,c),(b,d) is applied when it shortens
/// the tour by a positive integer amount. On return no such move exists.
Tour two_opt(const Instance& inst, const NeighborLists& nbrs, Tour tour, Rng& rng);

/// A uniformly random permutation of 0..n-1.
Tour random_tour(int n, Rng& rng);

} // namespace esga
