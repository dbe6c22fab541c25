#pragma once

/// @file es_crossover.hpp
/// @brief Edge swapping (ES) crossover.
///
/// The two parents' edge sets are merged into a labeled multigraph, whose
/// edges are partitioned into M-rings: closed walks alternating between
/// parent-A and parent-B edges. A strategy picks a set of rings (the R-set);
/// swapping the R-set's A-edges of parent A for its B-edges gives a degree-2
/// intermediate solution made of one or more loops, which are then spliced
/// into a single tour.
///
///   MergedGraph --partition--> [MRing] --select--> RSet --apply--> IntermediateSolution
///                                                                --merge--> Tour

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "esga/instance.hpp"
#include "esga/random.hpp"
#include "esga/tour.hpp"

namespace esga {

enum class Parent : std::uint8_t { A, B };

/// An edge traversed from `from` to `to`, labeled with its parent of origin.
struct LabeledEdge {
    int from = 0;
    int to = 0;
    Parent parent = Parent::A;
};

/// The multigraph of both parents' edges. Every city has exactly two
/// A-edges and two B-edges; an edge shared by both tours appears twice.
class MergedGraph {
  public:
    int size() const noexcept { return static_cast<int>(adj_a_.size()); }
    std::span<const LabeledEdge> edges() const noexcept { return edges_; }
    const std::array<int, 2>& a_neighbors(int city) const { return adj_a_[city]; }
    const std::array<int, 2>& b_neighbors(int city) const { return adj_b_[city]; }

  private:
    friend MergedGraph merge_graphs(const Tour& pa, const Tour& pb);

    std::vector<LabeledEdge> edges_;
    std::vector<std::array<int, 2>> adj_a_;
    std::vector<std::array<int, 2>> adj_b_;
};

/// Throws std::invalid_argument when the parents differ in size.
MergedGraph merge_graphs(const Tour& pa, const Tour& pb);

/// A closed alternating walk. edges[i].to == edges[i+1].from, the last edge
/// returns to edges[0].from, and labels alternate starting with A.
struct MRing {
    std::vector<LabeledEdge> edges;

    /// Number of A-edges (equivalently B-edges).
    int size() const noexcept { return static_cast<int>(edges.size() / 2); }

    /// Two overlapping copies of one edge; swapping it changes nothing.
    bool ineffective() const noexcept { return edges.size() == 2; }
};

/// Smallest ring size a strategy may select. Rings with more than four
/// edges (size >= 3) are effective; size-2 rings are left out by default.
inline constexpr int kMinEffectiveRingSize = 3;

/// Randomized partition of all labeled edges into M-rings. Each edge shared
/// by both parents first becomes its own ineffective ring. The rest is split
/// by alternating tracing: from a random vertex, follow A- and B-edges in turn
/// (random choice between two candidates), deleting traced edges; whenever a
/// suffix of the traced path closes into an alternating ring, cut it out and
/// keep tracing from the path's end, or from a fresh random vertex once the
/// path is empty.
std::vector<MRing> partition_m_rings(const MergedGraph& graph, Rng& rng);

/// Mean coordinate of each ring's vertices (one entry per traversed edge).
std::vector<Point> ring_centroids(const Instance& inst, std::span<const MRing> rings);

namespace strategy {

/// One ring per child, never reusing a ring within the same crossover call.
struct Single {};

/// Every effective ring independently with probability 1/2.
struct Random {
    int max_redraws = 20;
};

/// k rings uniformly without replacement.
struct KMultiple {
    int k = 6;
};

/// A random seed ring plus its nearest rings by centroid distance.
struct Block {
    int target_rings = 6;
};

} // namespace strategy

using Strategy = std::variant<strategy::Single, strategy::Random, strategy::KMultiple, strategy::Block>;

/// Lowercase strategy name: single, random, kmultiple, block.
std::string strategy_name(const Strategy& s);

/// Selected rings, as indices into the partition they came from.
struct RSet {
    std::vector<int> rings;
    /// Total A-edges across the selected rings.
    int size = 0;
};

/// Draws R-sets from one partition. Holds the per-crossover state needed by
/// the Single strategy (rings already handed out).
class RingSelector {
  public:
    RingSelector(std::span<const MRing> rings, std::vector<Point> centroids,
                 int min_ring_size = kMinEffectiveRingSize);

    /// False when the parents are too similar to yield any child.
    bool has_effective() const noexcept { return !effective_.empty(); }
    std::span<const int> effective() const noexcept { return effective_; }

    /// std::nullopt when no effective ring exists, when Single has used up
    /// every ring, or when Random keeps drawing empty sets.
    std::optional<RSet> select(const Strategy& strategy, Rng& rng);

    /// Block growth from a given seed ring (an index into the partition).
    RSet select_block(int seed_ring, int target_rings) const;

  private:
    RSet make_rset(std::vector<int> rings) const;

    std::span<const MRing> rings_;
    std::vector<Point> centroids_;
    std::vector<int> effective_;
    std::vector<int> unused_single_;
};

/// A degree-2 multigraph over all cities, stored as two neighbor slots per
/// city, together with its decomposition into loops. Two-city loops (a
/// doubled edge) are supported, though rings from partition_m_rings never
/// produce them.
struct IntermediateSolution {
    std::vector<std::array<int, 2>> links;
    std::vector<int> loop_of;
    int loop_count = 0;

    int size() const noexcept { return static_cast<int>(links.size()); }

    /// Cities of each loop in traversal order.
    std::vector<std::vector<int>> loops() const;

    /// Undirected edge multiset, sorted.
    std::vector<Edge> edges() const;

    /// Recomputes loop_of and loop_count from links.
    void label_loops();
};

/// E_C = (E_A minus the R-set's A-edges) plus the R-set's B-edges.
IntermediateSolution apply_rset(const Tour& pa, std::span<const MRing> rings, const RSet& rset);

/// One splice performed while merging loops: edges (a,b) and (c,d) are
/// replaced by (a,c) and (b,d).
struct LoopMerge {
    int a = 0;
    int b = 0;
    int c = 0;
    int d = 0;
    std::int64_t delta = 0;
};

/// Greedy loop merging. Each step takes the smallest loop L and, over every
/// edge (a,b) of L and every edge (c,d) of another loop with c in nbrs[a],
/// applies the splice with the least length increase
///   -w(a,b) - w(c,d) + min(w(a,c) + w(b,d), w(a,d) + w(b,c)).
/// When no neighbor-list pair spans loops, L is spliced exhaustively against
/// the loop holding the city nearest to it.
class SubloopMerger {
  public:
    SubloopMerger(const Instance& inst, const NeighborLists& nbrs, IntermediateSolution im);

    int loop_count() const noexcept { return loop_count_; }
    const IntermediateSolution& current() const noexcept { return im_; }

    /// Merges the smallest loop into another. Precondition: loop_count() > 1.
    LoopMerge step();

    /// Runs step() until one loop remains; returns the summed deltas.
    std::int64_t finish();

    /// Precondition: loop_count() == 1.
    Tour tour() const;

  private:
    int smallest_loop() const;
    std::vector<int> cities_of(int loop) const;

    const Instance& inst_;
    const NeighborLists& nbrs_;
    IntermediateSolution im_;
    std::vector<int> loop_size_;
    std::vector<int> loop_start_;
    int loop_count_ = 0;
};

Tour merge_subloops(const Instance& inst, const NeighborLists& nbrs, IntermediateSolution im);

struct EsOptions {
    int min_ring_size = kMinEffectiveRingSize;
};

struct Offspring {
    Tour tour;
    std::int64_t length = 0;
    /// Size of the R-set used.
    int rset_size = 0;
    /// Loops in the intermediate solution before merging.
    int loops = 1;
};

/// Builds and partitions the merged graph once, then produces up to n_ch
/// children with a fresh R-set each. Empty when no effective ring exists.
std::vector<Offspring> es_crossover(const Instance& inst, const NeighborLists& nbrs, const Tour& pa,
                                    const Tour& pb, const Strategy& strategy, int n_ch, Rng& rng,
                                    const EsOptions& options = {});

} // namespace esga
