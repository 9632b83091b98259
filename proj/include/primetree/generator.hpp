#pragma once

#include "primetree/bigint.hpp"
#include "primetree/forest.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace primetree {

inline constexpr std::uint64_t kDefaultEnumerationCap = 10'000'000;

struct GenSpec {
    std::uint32_t n_labels = 1;
    std::uint32_t max_height = 0;
    std::optional<BigInt> value_bound;

    // Throws std::invalid_argument unless n_labels >= 1 and value_bound >= 2.
    void check() const;
};

// S_0 = 1, S_i = (1 + S_{i-1})^n: number of validly labeled trees over n
// labels with height <= h. Throws SizeOverBudget only when the number itself
// would not fit in memory.
BigInt g_count(std::uint32_t n, std::uint32_t h);

// The forest G_h built by the graft/raise recurrence
//   G_0 = {root},  G_i = graft over k of ({root} u R(T_k, G_{i-1})).
// Throws SizeOverBudget when g_count(n, h) exceeds `cap`.
Forest g_forest(std::uint32_t n, std::uint32_t h, std::uint64_t cap = kDefaultEnumerationCap);

// Independent enumeration of the rooted subtrees of the complete n-ary tree
// of height h (vertex slot k carries label k), by bitmask over its vertices.
// Throws SizeOverBudget when the complete tree has more than 24 non-root
// vertices.
Forest all_valid_trees_bruteforce(std::uint32_t n, std::uint32_t h);

// Non-singleton trees over the given labels (at every depth) whose integer
// evaluation is <= bound, in compare() order. Pruned: each added branch or
// deeper exponent at least doubles the value. Inner loops run under OpenMP.
std::vector<Tree> g_stream_value_bounded(std::span<const std::uint32_t> prime_indices, const BigInt& bound);
// Single-threaded reference for g_stream_value_bounded.
std::vector<Tree> g_stream_value_bounded_serial(std::span<const std::uint32_t> prime_indices, const BigInt& bound);

}  // namespace primetree
