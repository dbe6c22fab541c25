#pragma once

/// @file tour.hpp
/// @brief Hamiltonian cycles as a visit sequence plus a city -> position index.

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace esga {

class Instance;

struct TourViolation {
    enum class Kind { WrongLength, CityOutOfRange, DuplicateCity };
    Kind kind;
    std::string message;
};

/// Checks that `order` is a permutation of 0..n-1. Reports the first problem
/// found instead of throwing.
std::optional<TourViolation> validate(std::span<const int> order, int n);

/// Undirected edge with u < v.
struct Edge {
    int u = 0;
    int v = 0;

    Edge() = default;
    Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {}

    auto operator<=>(const Edge&) const = default;
};

/// Sorted list of undirected edges.
using EdgeSet = std::vector<Edge>;

class Tour {
  public:
    Tour() = default;

    /// Throws std::invalid_argument if `order` is not a permutation of 0..n-1.
    explicit Tour(std::vector<int> order);

    static Tour identity(int n);

    int size() const noexcept { return static_cast<int>(order_.size()); }
    std::span<const int> order() const noexcept { return order_; }
    int at(int position) const { return order_[position]; }
    int position(int city) const { return pos_[city]; }

    int next(int city) const {
        const int p = pos_[city] + 1;
        return order_[p == size() ? 0 : p];
    }
    int prev(int city) const {
        const int p = pos_[city];
        return order_[p == 0 ? size() - 1 : p - 1];
    }

    /// Reverses the cyclic path from `from` forward to `to` (inclusive). The
    /// shorter of the path and its complement is physically reversed, which
    /// yields the same cycle.
    void reverse_path(int from, int to);

    /// Equality on undirected edge sets: invariant under rotation and reversal.
    friend bool operator==(const Tour& lhs, const Tour& rhs);

  private:
    std::vector<int> order_;
    std::vector<int> pos_;
};

/// Sum of the n cyclic edge weights.
std::int64_t tour_length(const Instance& inst, const Tour& tour);

EdgeSet edges_of(const Tour& tour);

} // namespace esga
