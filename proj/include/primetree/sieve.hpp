#pragma once

#include "primetree/tree.hpp"

#include <cstdint>
#include <vector>

namespace primetree {

struct Composite {
    std::uint64_t value = 0;
    Tree tree;
};

// One run of the tree sieve over the window (q, 2q].
struct SieveRun {
    std::uint64_t q = 0;
    std::vector<std::uint32_t> labels;     // indices of the primes <= q
    std::vector<Composite> composites;     // ascending, q < value <= 2q
    std::vector<std::uint64_t> primes_found;  // ascending, inside (q, 2q)
};

// Classical sieve: primes <= n.
std::vector<std::uint64_t> eratosthenes(std::uint64_t n);
// Segmented OpenMP variant of eratosthenes(); same output.
std::vector<std::uint64_t> eratosthenes_parallel(std::uint64_t n, std::uint64_t segment_size = 1 << 16);

// Composite values in (q, 2q] with their trees, enumerated from trees over
// the primes <= q. Throws NotPrime. q = 2 yields the single composite 4.
std::vector<Composite> composites_in_window(std::uint64_t q);
std::vector<Composite> composites_in_window_serial(std::uint64_t q);

// Full run: composites plus the primes read off the gaps of size 2.
SieveRun sieve_run(std::uint64_t q);

// Primes in the open interval (q, 2q). Throws NotPrime.
std::vector<std::uint64_t> combinatorial_sieve(std::uint64_t q);

// Same output through the literal G_old / G_new graft-raise fixpoint, each
// forest trimmed to evaluations <= 2q. Only for q <= 13; larger q throws
// SizeOverBudget.
std::vector<std::uint64_t> literal_fixpoint_sieve(std::uint64_t q);

}  // namespace primetree
