#pragma once

/// @file instance.hpp
/// @brief Coordinate-based symmetric TSP instances with TSPLIB integer distances
/// and k-nearest-neighbor candidate lists.

#include <span>
#include <string>
#include <vector>

namespace esga {

enum class EdgeWeightKind { Euc2d, Ceil2d };

struct Point {
    double x = 0.0;
    double y = 0.0;
};

/// TSPLIB distance between two points: EUC_2D rounds to the nearest integer
/// (half up), CEIL_2D rounds up.
int rounded_distance(Point a, Point b, EdgeWeightKind kind);

/// An immutable instance. Distances are served from a precomputed matrix for
/// instances up to kMatrixLimit cities and computed on demand above that.
class Instance {
  public:
    static constexpr int kMatrixLimit = 4096;

    /// Throws std::invalid_argument when fewer than 3 cities are given or a
    /// coordinate is not finite.
    Instance(std::string name, std::vector<Point> coords, EdgeWeightKind kind);

    const std::string& name() const noexcept { return name_; }
    int size() const noexcept { return static_cast<int>(coords_.size()); }
    std::span<const Point> coords() const noexcept { return coords_; }
    Point coord(int city) const { return coords_[city]; }
    EdgeWeightKind kind() const noexcept { return kind_; }

    int distance(int i, int j) const {
        if (!matrix_.empty()) {
            return matrix_[static_cast<std::size_t>(i) * coords_.size() + j];
        }
        return rounded_distance(coords_[i], coords_[j], kind_);
    }

    friend bool operator==(const Instance& lhs, const Instance& rhs);

  private:
    std::string name_;
    std::vector<Point> coords_;
    EdgeWeightKind kind_;
    std::vector<int> matrix_;
};

/// For every city, its min(k, n-1) nearest other cities ordered by ascending
/// distance, ties broken by ascending city index.
class NeighborLists {
  public:
    static constexpr int kDefaultK = 10;

    /// Throws std::invalid_argument when k < 1.
    NeighborLists(const Instance& inst, int k = kDefaultK);

    /// Effective list length, i.e. min(k, n-1).
    int k() const noexcept { return k_; }
    int size() const noexcept { return n_; }

    std::span<const int> operator[](int city) const {
        return {flat_.data() + static_cast<std::size_t>(city) * k_, static_cast<std::size_t>(k_)};
    }

  private:
    int n_ = 0;
    int k_ = 0;
    std::vector<int> flat_;
};

} // namespace esga
