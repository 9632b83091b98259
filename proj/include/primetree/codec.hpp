#pragma once

#include "primetree/bigint.hpp"
#include "primetree/tree.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace primetree {

// Positive rational in lowest terms; integers have denominator 1.
struct EvalValue {
    BigInt numerator{1};
    BigInt denominator{1};

    bool is_integer() const { return denominator == 1; }
    // "num" for integers, "num/den" otherwise.
    std::string to_string() const;
    // Always "num/den".
    std::string to_fraction() const;

    friend bool operator==(const EvalValue&, const EvalValue&) = default;
};

struct EvalValueHash {
    std::size_t operator()(const EvalValue& v) const;
};

// Either the exact value (when it does not exceed the bound) or "over".
struct BoundedEval {
    std::optional<BigInt> value;

    bool over_bound() const { return !value.has_value(); }
};

using Factorization = std::vector<std::pair<std::uint64_t, std::uint64_t>>;

// Ascending (prime, exponent) pairs by trial division. factor(1) is empty;
// factor(0) throws ZeroInput. Divisors are tried up to 10^8, so a large input
// must be smooth apart from one cofactor below 10^16; otherwise it throws
// SizeOverBudget.
Factorization factor(std::uint64_t m);
Factorization factor(const BigInt& m);

// Siblings multiply, a child subtree is the exponent of its parent's prime.
// Throws InverseLabelPresent for rational trees, SizeOverBudget for towers too
// large to hold in memory.
BigInt eval_integer_tree(const Tree& t);

// Exact evaluation with early exit once the running value passes `bound`.
// Exponents are bounded by floor(log2(bound)) before any power is formed.
BoundedEval eval_bounded(const Tree& t, const BigInt& bound);

EvalValue eval_rational_tree(const Tree& t);

// Evaluation that gives up (nullopt) once numerator or denominator would
// need more than max_bits bits. Towers in the tree are never expanded past
// that size.
std::optional<EvalValue> eval_rational_within(const Tree& t, std::uint64_t max_bits);

// Throws ZeroInput for m = 0.
Tree encode_integer(const BigInt& m);

// Reduces num/den first. Throws ZeroInput when either side is 0.
Tree encode_rational(const BigInt& num, const BigInt& den);

}  // namespace primetree
