#pragma once

/// @file oracle.hpp
/// @brief Exact small-instance solvers and a ring-partition checker, kept
/// independent of the GA code paths they are used to verify.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>

#include "esga/es_crossover.hpp"
#include "esga/instance.hpp"
#include "esga/tour.hpp"

namespace esga::oracle {

inline constexpr int kBruteForceLimit = 10;
inline constexpr int kHeldKarpLimit = 18;

/// Enumerates all (n-1)!/2 distinct tours. Throws std::invalid_argument for
/// n > kBruteForceLimit.
std::pair<std::int64_t, Tour> brute_force_optimum(const Instance& inst);

/// Subset dynamic program. Throws std::invalid_argument for n > kHeldKarpLimit.
std::int64_t held_karp(const Instance& inst);

/// Verifies that the rings cover the labeled edge multiset of `graph`
/// exactly and that every ring is a closed alternating walk. Returns the
/// first violation found.
std::optional<std::string> check_partition(const MergedGraph& graph, std::span<const MRing> rings);

} // namespace esga::oracle
