#pragma once

#include <cstdint>
#include <optional>

namespace primetree {

// k-th prime, zero-based (0 -> 2, 1 -> 3, ...). Backed by a shared table that
// grows on demand; safe to call from several threads.
std::uint64_t prime_at(std::uint32_t index);

// Index of p in the prime sequence, or nullopt when p is not prime.
std::optional<std::uint32_t> prime_index_of(std::uint64_t p);

// Number of primes <= n.
std::uint32_t prime_pi(std::uint64_t n);

// Deterministic trial division.
bool is_prime(std::uint64_t n);

}  // namespace primetree
