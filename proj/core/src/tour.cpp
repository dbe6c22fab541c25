#include "esga/tour.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <utility>

#include "esga/instance.hpp"

namespace esga {

std::optional<TourViolation> validate(std::span<const int> order, int n) {
    using Kind = TourViolation::Kind;
    if (std::cmp_not_equal(order.size(), n)) {
        return TourViolation{Kind::WrongLength, "tour has " + std::to_string(order.size()) +
                                                    " cities, expected " + std::to_string(n)};
    }
    std::vector<char> seen(n, 0);
    for (std::size_t i = 0; i < order.size(); ++i) {
        const int city = order[i];
        if (city < 0 || city >= n) {
            return TourViolation{Kind::CityOutOfRange, "city " + std::to_string(city) + " at position " +
                                                           std::to_string(i) + " is out of range"};
        }
        if (seen[city]) {
            return TourViolation{Kind::DuplicateCity, "city " + std::to_string(city) +
                                                          " appears more than once"};
        }
        seen[city] = 1;
    }
    return std::nullopt;
}

Tour::Tour(std::vector<int> order) : order_(std::move(order)) {
    if (auto violation = validate(order_, static_cast<int>(order_.size()))) {
        throw std::invalid_argument("invalid tour: " + violation->message);
    }
    pos_.resize(order_.size());
    for (int p = 0; p < size(); ++p) {
        pos_[order_[p]] = p;
    }
}

Tour Tour::identity(int n) {
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    return Tour(std::move(order));
}

void Tour::reverse_path(int from, int to) {
    const int n = size();
    int i = pos_[from];
    int j = pos_[to];
    int len = j - i;
    if (len < 0) {
        len += n;
    }
    ++len;
    if (2 * len > n) {
        // Reverse the complement instead: positions j+1 .. i-1.
        const int ni = j + 1 == n ? 0 : j + 1;
        const int nj = i == 0 ? n - 1 : i - 1;
        i = ni;
        j = nj;
        len = n - len;
    }
    for (int step = 0; step < len / 2; ++step) {
        std::swap(order_[i], order_[j]);
        pos_[order_[i]] = i;
        pos_[order_[j]] = j;
        if (++i == n) {
            i = 0;
        }
        if (--j < 0) {
            j = n - 1;
        }
    }
}

bool operator==(const Tour& lhs, const Tour& rhs) {
    if (lhs.size() != rhs.size()) {
        return false;
    }
    for (int city = 0; city < lhs.size(); ++city) {
        const int a = lhs.next(city);
        const int b = lhs.prev(city);
        const int c = rhs.next(city);
        const int d = rhs.prev(city);
        if (!((a == c && b == d) || (a == d && b == c))) {
            return false;
        }
    }
    return true;
}

std::int64_t tour_length(const Instance& inst, const Tour& tour) {
    std::int64_t total = 0;
    const auto order = tour.order();
    for (std::size_t p = 0; p + 1 < order.size(); ++p) {
        total += inst.distance(order[p], order[p + 1]);
    }
    if (!order.empty()) {
        total += inst.distance(order.back(), order.front());
    }
    return total;
}

EdgeSet edges_of(const Tour& tour) {
    EdgeSet edges;
    edges.reserve(tour.size());
    for (int city : tour.order()) {
        edges.emplace_back(city, tour.next(city));
    }
    std::sort(edges.begin(), edges.end());
    return edges;
}

} // namespace esga
