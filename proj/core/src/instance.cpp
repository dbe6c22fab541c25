#include "esga/instance.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace esga {

int rounded_distance(Point a, Point b, EdgeWeightKind kind) {
    const double dx = a.x - b.x;
    const double dy = a.y - b.y;
    const double d = std::sqrt(dx * dx + dy * dy);
    switch (kind) {
        case EdgeWeightKind::Euc2d:
            return static_cast<int>(d + 0.5);
        case EdgeWeightKind::Ceil2d:
            return static_cast<int>(std::ceil(d));
    }
    return 0;
}

Instance::Instance(std::string name, std::vector<Point> coords, EdgeWeightKind kind)
    : name_(std::move(name)), coords_(std::move(coords)), kind_(kind) {
    if (coords_.size() < 3) {
        throw std::invalid_argument("instance needs at least 3 cities, got " +
                                    std::to_string(coords_.size()));
    }
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (!std::isfinite(coords_[i].x) || !std::isfinite(coords_[i].y)) {
            throw std::invalid_argument("city " + std::to_string(i + 1) +
                                        " has a non-finite coordinate");
        }
    }

    const int n = size();
    if (n <= kMatrixLimit) {
        matrix_.resize(static_cast<std::size_t>(n) * n, 0);
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) {
                const int d = rounded_distance(coords_[i], coords_[j], kind_);
                matrix_[static_cast<std::size_t>(i) * n + j] = d;
                matrix_[static_cast<std::size_t>(j) * n + i] = d;
            }
        }
    }
}

bool operator==(const Instance& lhs, const Instance& rhs) {
    if (lhs.name_ != rhs.name_ || lhs.kind_ != rhs.kind_ || lhs.coords_.size() != rhs.coords_.size()) {
        return false;
    }
    return std::equal(lhs.coords_.begin(), lhs.coords_.end(), rhs.coords_.begin(),
                      [](Point a, Point b) { return a.x == b.x && a.y == b.y; });
}

NeighborLists::NeighborLists(const Instance& inst, int k) : n_(inst.size()) {
    if (k < 1) {
        throw std::invalid_argument("neighbor list size must be at least 1");
    }
    k_ = std::min(k, n_ - 1);
    flat_.resize(static_cast<std::size_t>(n_) * k_);

    std::vector<int> others(n_ - 1);
    for (int city = 0; city < n_; ++city) {
        std::iota(others.begin(), others.begin() + city, 0);
        std::iota(others.begin() + city, others.end(), city + 1);
        auto closer = [&](int a, int b) {
            const int da = inst.distance(city, a);
            const int db = inst.distance(city, b);
            return da != db ? da < db : a < b;
        };
        std::partial_sort(others.begin(), others.begin() + k_, others.end(), closer);
        std::copy_n(others.begin(), k_, flat_.begin() + static_cast<std::ptrdiff_t>(city) * k_);
    }
}

} // namespace esga
