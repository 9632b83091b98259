#pragma once

#include "primetree/lazy.hpp"
#include "primetree/tree.hpp"

#include <cstddef>
#include <cstdint>

namespace primetree {

// Lazily enumerates trees in compare() order without materializing them.
// Depth-1 labels are the first `labels` primes, plus their inverses when
// `inverted_at_root` is set (a prime never appears both ways); deeper labels
// are plain primes from the same set.
Lazy<Tree> trees_of_height(std::uint32_t labels, bool inverted_at_root, std::size_t height);

// All such trees of height <= max_height, in compare() order.
Lazy<Tree> trees_up_to_height(std::uint32_t labels, bool inverted_at_root, std::size_t max_height);

}  // namespace primetree
