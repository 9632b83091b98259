#pragma once

#include "primetree/bigint.hpp"
#include "primetree/codec.hpp"
#include "primetree/forest.hpp"
#include "primetree/generator.hpp"
#include "primetree/lazy.hpp"

#include <cstdint>
#include <optional>
#include <unordered_set>

namespace primetree {

// (1 + 2 * g_count(m, i))^m: each of the first m primes contributes 1/p^e,
// nothing, or p^e with e drawn from G_i.
BigInt h_count(std::uint32_t i, std::uint32_t m);

// H_i over the first m primes:
//   graft over k < m of ({root} u R(T_{1/p_k}, G_i) u R(T_{p_k}, G_i)),
// with G_i = g_forest(m, i). Throws SizeOverBudget past `cap`.
Forest h_forest(std::uint32_t i, std::uint32_t m, std::uint64_t cap = kDefaultEnumerationCap);

// Membership in h_forest(i, m) without building it: all labels among the
// first m primes and every exponent subtree of height <= i.
bool in_h_forest(const Tree& t, std::uint32_t i, std::uint32_t m);

// First stream stage s >= 1 whose forest h_forest(s, s) holds t.
std::uint32_t stage_of(const Tree& t);

// Entries whose numerator or denominator would pass this many bits carry no
// value; the tree still identifies the rational exactly.
inline constexpr std::uint64_t kStreamValueBits = 1u << 20;

struct RationalEntry {
    std::optional<EvalValue> value;
    Tree tree;
    std::uint32_t stage = 0;
};

// Duplicate-free enumeration of the positive rationals. Stage s emits the
// members of h_forest(s, s) missing from h_forest(s - 1, s - 1) (stage 1
// emits all of h_forest(1, 1)), each stage in compare() order. Stages are
// walked lazily, never materialized.
class RationalStream {
public:
    RationalStream();

    RationalEntry next();

    std::uint32_t stage() const noexcept { return stage_; }
    std::uint64_t emitted() const noexcept { return emitted_; }

private:
    void open_stage(std::uint32_t s);

    std::uint32_t stage_ = 0;
    std::uint64_t emitted_ = 0;
    std::optional<Lazy<Tree>> walk_;
    std::unordered_set<Tree, TreeHash> seen_;
};

// Calkin-Wilf order: 1, 1/2, 2, 1/3, 3/2, 2/3, 3, ...
// via x -> 1 / (2 floor(x) - x + 1).
class CalkinWilfStream {
public:
    EvalValue next();

private:
    std::optional<EvalValue> current_;
};

}  // namespace primetree
