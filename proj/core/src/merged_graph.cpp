#include <algorithm>
#include <stdexcept>

#include "esga/es_crossover.hpp"

namespace esga {

MergedGraph merge_graphs(const Tour& pa, const Tour& pb) {
    if (pa.size() != pb.size()) {
        throw std::invalid_argument("parents have different sizes: " + std::to_string(pa.size()) +
                                    " and " + std::to_string(pb.size()));
    }
    const int n = pa.size();
    MergedGraph g;
    g.edges_.reserve(2 * static_cast<std::size_t>(n));
    g.adj_a_.resize(n);
    g.adj_b_.resize(n);
    for (int city = 0; city < n; ++city) {
        g.adj_a_[city] = {pa.prev(city), pa.next(city)};
        g.adj_b_[city] = {pb.prev(city), pb.next(city)};
    }
    for (int city : pa.order()) {
        g.edges_.push_back({city, pa.next(city), Parent::A});
    }
    for (int city : pb.order()) {
        g.edges_.push_back({city, pb.next(city), Parent::B});
    }
    return g;
}

namespace {

constexpr Parent opposite(Parent p) { return p == Parent::A ? Parent::B : Parent::A; }

/// Edges not yet traced, per city and label.
class RemainingEdges {
  public:
    explicit RemainingEdges(const MergedGraph& g) : slots_(g.size()), count_(g.size()) {
        for (int city = 0; city < g.size(); ++city) {
            slots_[city][0] = g.a_neighbors(city);
            slots_[city][1] = g.b_neighbors(city);
            count_[city] = {2, 2};
        }
    }

    int count(int city, Parent p) const { return count_[city][index(p)]; }
    int degree(int city) const { return count_[city][0] + count_[city][1]; }
    int neighbor(int city, Parent p, int slot) const { return slots_[city][index(p)][slot]; }

    void remove(int u, int v, Parent p) {
        drop(u, v, p);
        drop(v, u, p);
    }

  private:
    static int index(Parent p) { return p == Parent::A ? 0 : 1; }

    void drop(int city, int other, Parent p) {
        auto& slots = slots_[city][index(p)];
        int& cnt = count_[city][index(p)];
        for (int s = 0; s < cnt; ++s) {
            if (slots[s] == other) {
                slots[s] = slots[cnt - 1];
                --cnt;
                return;
            }
        }
        throw std::logic_error("ring partition: edge already removed");
    }

    std::vector<std::array<std::array<int, 2>, 2>> slots_;
    std::vector<std::array<int, 2>> count_;
};

/// Cities with at least one untraced edge, with O(1) removal.
class LiveSet {
  public:
    explicit LiveSet(int n) : cities_(n), where_(n) {
        for (int c = 0; c < n; ++c) {
            cities_[c] = c;
            where_[c] = c;
        }
    }

    bool empty() const noexcept { return cities_.empty(); }
    int pick(Rng& rng) const { return cities_[uniform_index(rng, static_cast<int>(cities_.size()))]; }

    void erase(int city) {
        const int at = where_[city];
        const int last = cities_.back();
        cities_[at] = last;
        where_[last] = at;
        cities_.pop_back();
        where_[city] = -1;
    }

  private:
    std::vector<int> cities_;
    std::vector<int> where_;
};

} // namespace

std::vector<MRing> partition_m_rings(const MergedGraph& graph, Rng& rng) {
    const int n = graph.size();
    RemainingEdges remaining(graph);
    LiveSet live(n);

    // The traced path: path[i] -> path[i+1] uses an edge labeled labels[i].
    std::vector<int> path;
    std::vector<Parent> labels;
    // Positions at which each city currently sits on the path (at most three).
    std::vector<std::vector<int>> occurrences(n);

    std::vector<MRing> rings;

    auto take_edge = [&](int u, int v, Parent p) {
        remaining.remove(u, v, p);
        if (remaining.degree(u) == 0) {
            live.erase(u);
        }
        if (remaining.degree(v) == 0) {
            live.erase(v);
        }
    };

    // Edges present in both tours pair up into two-edge rings straight away.
    for (int u = 0; u < n; ++u) {
        for (int v : graph.a_neighbors(u)) {
            if (u < v && (graph.b_neighbors(u)[0] == v || graph.b_neighbors(u)[1] == v)) {
                take_edge(u, v, Parent::A);
                take_edge(u, v, Parent::B);
                rings.push_back(MRing{{{u, v, Parent::A}, {v, u, Parent::B}}});
            }
        }
    }

    while (!live.empty()) {
        if (labels.empty()) {
            if (!path.empty()) {
                occurrences[path.front()].clear();
                path.clear();
            }
            const int start = live.pick(rng);
            path.push_back(start);
            occurrences[start].push_back(0);
        }

        const int cur = path.back();
        const Parent label = labels.empty() ? Parent::A : opposite(labels.back());
        const int candidates = remaining.count(cur, label);
        if (candidates == 0) {
            throw std::logic_error("ring partition: dead end while tracing");
        }
        const int slot = candidates == 2 ? uniform_index(rng, 2) : 0;
        const int next = remaining.neighbor(cur, label, slot);
        take_edge(cur, next, label);
        labels.push_back(label);
        path.push_back(next);
        const int end = static_cast<int>(path.size()) - 1;

        // The most recent earlier visit whose outgoing label differs from the
        // label we arrived with closes an alternating ring.
        int close_at = -1;
        auto& occ = occurrences[next];
        for (auto it = occ.rbegin(); it != occ.rend(); ++it) {
            if (labels[*it] != label) {
                close_at = *it;
                break;
            }
        }
        if (close_at < 0) {
            occ.push_back(end);
            continue;
        }

        MRing ring;
        ring.edges.reserve(end - close_at);
        for (int i = close_at; i < end; ++i) {
            ring.edges.push_back({path[i], path[i + 1], labels[i]});
        }
        if (ring.edges.front().parent == Parent::B) {
            std::rotate(ring.edges.begin(), ring.edges.begin() + 1, ring.edges.end());
        }
        rings.push_back(std::move(ring));

        for (int i = close_at + 1; i < end; ++i) {
            auto& o = occurrences[path[i]];
            o.erase(std::find(o.begin(), o.end(), i));
        }
        path.resize(close_at + 1);
        labels.resize(close_at);
    }
    return rings;
}

std::vector<Point> ring_centroids(const Instance& inst, std::span<const MRing> rings) {
    std::vector<Point> centroids;
    centroids.reserve(rings.size());
    for (const auto& ring : rings) {
        Point sum;
        for (const auto& e : ring.edges) {
            const Point p = inst.coord(e.from);
            sum.x += p.x;
            sum.y += p.y;
        }
        const double k = static_cast<double>(ring.edges.size());
        centroids.push_back({sum.x / k, sum.y / k});
    }
    return centroids;
}

} // namespace esga
