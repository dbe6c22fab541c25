#include <doctest.h>

#include <algorithm>
#include <map>
#include <stdexcept>

#include "esga/tour.hpp"
#include "esga/two_opt.hpp"
#include "test_support.hpp"

using namespace esga;

namespace {

std::vector<int> rotate_reverse(std::span<const int> order, int shift, bool reverse) {
    std::vector<int> out(order.begin(), order.end());
    std::rotate(out.begin(), out.begin() + shift, out.end());
    if (reverse) {
        std::reverse(out.begin(), out.end());
    }
    return out;
}

} // namespace

TEST_CASE("validate reports the first problem") {
    const std::vector<int> ok{0, 1, 2, 3};
    CHECK_FALSE(validate(ok, 4).has_value());

    const std::vector<int> dup{0, 1, 1, 3};
    const auto v1 = validate(dup, 4);
    REQUIRE(v1.has_value());
    CHECK(v1->kind == TourViolation::Kind::DuplicateCity);

    const std::vector<int> short_order{0, 1, 2};
    const auto v2 = validate(short_order, 4);
    REQUIRE(v2.has_value());
    CHECK(v2->kind == TourViolation::Kind::WrongLength);

    const std::vector<int> out_of_range{0, 1, 4, 3};
    const auto v3 = validate(out_of_range, 4);
    REQUIRE(v3.has_value());
    CHECK(v3->kind == TourViolation::Kind::CityOutOfRange);
    CHECK_FALSE(v3->message.empty());

    CHECK_THROWS_AS(Tour({0, 0, 1}), std::invalid_argument);
}

TEST_CASE("triangle length") {
    const auto inst = esga::testing::make_instance({{0, 0}, {3, 0}, {0, 4}});
    CHECK(tour_length(inst, Tour({0, 1, 2})) == 12);
    CHECK(tour_length(inst, Tour({2, 1, 0})) == 12);
}

TEST_CASE("edge sets") {
    CHECK(edges_of(Tour({0, 1, 2})) == EdgeSet{{0, 1}, {0, 2}, {1, 2}});
    CHECK(edges_of(Tour({0, 1, 2, 3})) == edges_of(Tour({1, 2, 3, 0})));
    CHECK(edges_of(Tour({0, 1, 2, 3})) == edges_of(Tour({0, 3, 2, 1})));
    CHECK(Tour({0, 1, 2, 3}) == Tour({2, 1, 0, 3}));
    CHECK_FALSE(Tour({0, 1, 2, 3}) == Tour({0, 2, 1, 3}));
}

TEST_CASE("edge set has n edges and degree two everywhere") {
    Rng rng(17);
    for (int n : {3, 4, 5, 17, 64}) {
        const auto tour = random_tour(n, rng);
        const auto edges = edges_of(tour);
        REQUIRE(static_cast<int>(edges.size()) == n);
        std::map<int, int> degree;
        for (const auto& e : edges) {
            CHECK(e.u < e.v);
            ++degree[e.u];
            ++degree[e.v];
        }
        CHECK(static_cast<int>(degree.size()) == n);
        for (const auto& [city, d] : degree) {
            CHECK(d == 2);
        }
    }
}

TEST_CASE("length is invariant under rotation and reversal") {
    Rng rng(3);
    for (std::uint64_t seed = 1; seed <= 25; ++seed) {
        const auto inst = esga::testing::random_instance(20, seed);
        const auto tour = random_tour(inst.size(), rng);
        const auto expected = esga::testing::reference_length(inst, tour.order());
        CHECK(tour_length(inst, tour) == expected);
        for (int shift : {0, 1, 7, 19}) {
            for (bool rev : {false, true}) {
                const Tour moved(rotate_reverse(tour.order(), shift, rev));
                CHECK(tour_length(inst, moved) == expected);
                CHECK(moved == tour);
            }
        }
    }
}

TEST_CASE("next, prev and position are consistent") {
    const Tour tour({3, 0, 4, 1, 2});
    CHECK(tour.position(4) == 2);
    CHECK(tour.next(2) == 3);
    CHECK(tour.prev(3) == 2);
    CHECK(tour.next(0) == 4);
    CHECK(Tour::identity(4).at(3) == 3);
}

TEST_CASE("reverse_path matches a reference segment reversal") {
    Rng rng(99);
    for (int trial = 0; trial < 500; ++trial) {
        const int n = 4 + uniform_index(rng, 30);
        auto tour = random_tour(n, rng);
        const int from = uniform_index(rng, n);
        const int to = uniform_index(rng, n);

        // Reference: walk from `from` to `to`, reverse those cities in place.
        std::vector<int> seq;
        for (int c = from;; c = tour.next(c)) {
            seq.push_back(c);
            if (c == to) {
                break;
            }
        }
        std::vector<int> expected(tour.order().begin(), tour.order().end());
        std::vector<int> slots;
        for (int c : seq) {
            slots.push_back(tour.position(c));
        }
        for (std::size_t i = 0; i < slots.size(); ++i) {
            expected[slots[i]] = seq[seq.size() - 1 - i];
        }

        tour.reverse_path(from, to);
        REQUIRE(tour == Tour(expected));
        for (int c = 0; c < n; ++c) {
            REQUIRE(tour.at(tour.position(c)) == c);
        }
    }
}
