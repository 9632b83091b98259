#pragma once

// Test-only generators and oracles. Nothing here calls into the code paths
// it is used to check.

#include "primetree/bigint.hpp"
#include "primetree/tree.hpp"

#include <cstdint>
#include <random>
#include <set>
#include <utility>
#include <vector>

namespace testsupport {

using primetree::Branch;
using primetree::Label;
using primetree::Tree;

// Random plain tree: each of `labels` labels is present with probability
// `p`, recursing until `depth` runs out.
inline Tree random_plain_tree(std::mt19937_64& rng, std::uint32_t labels, std::size_t depth, double p = 0.35) {
    std::vector<Branch> branches;
    if (depth == 0) return Tree{};
    std::bernoulli_distribution take(p);
    for (std::uint32_t k = 0; k < labels; ++k)
        if (take(rng)) branches.push_back(Branch{Label{k, false}, random_plain_tree(rng, labels, depth - 1, p)});
    return Tree::from_branches(std::move(branches));
}

// Random rational tree: every root prime is absent, plain, or inverted.
inline Tree random_rational_tree(std::mt19937_64& rng, std::uint32_t labels, std::size_t depth) {
    std::vector<Branch> branches;
    std::uniform_int_distribution<int> pick(0, 2);
    for (std::uint32_t k = 0; k < labels; ++k) {
        int c = pick(rng);
        if (c == 0) continue;
        branches.push_back(Branch{Label{k, c == 2}, random_plain_tree(rng, labels, depth == 0 ? 0 : depth - 1)});
    }
    return Tree::from_branches(std::move(branches));
}

// Splits t's root branches at random into two depth-1-disjoint trees.
inline std::pair<Tree, Tree> random_split(std::mt19937_64& rng, const Tree& t) {
    std::vector<Branch> a, b;
    std::bernoulli_distribution coin(0.5);
    for (const auto& br : t.branches()) (coin(rng) ? a : b).push_back(br);
    return {Tree::from_branches(std::move(a)), Tree::from_branches(std::move(b))};
}

inline bool trial_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline std::vector<std::pair<std::uint64_t, std::uint64_t>> trial_factor(std::uint64_t n) {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        std::uint64_t e = 0;
        while (n % d == 0) {
            n /= d;
            ++e;
        }
        if (e) out.emplace_back(d, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

// m's prime factors, and recursively those of every exponent > 1, all lie
// in `allowed`.
inline bool supported(std::uint64_t m, const std::set<std::uint64_t>& allowed) {
    for (auto [p, e] : trial_factor(m)) {
        if (!allowed.count(p)) return false;
        if (e > 1 && !supported(e, allowed)) return false;
    }
    return true;
}

// Hand-computed value of a tree through prime values, no codec involved.
inline primetree::BigInt naive_value(const Tree& t, const std::vector<std::uint64_t>& primes) {
    primetree::BigInt v = 1;
    for (const auto& b : t.branches()) {
        auto e = naive_value(b.subtree, primes);
        primetree::BigInt pw = 1;
        for (primetree::BigInt i = 0; i < e; ++i) pw *= primes.at(b.label.prime_index);
        v *= pw;
    }
    return v;
}

inline const std::vector<std::uint64_t>& small_primes() {
    static const std::vector<std::uint64_t> primes = [] {
        std::vector<std::uint64_t> out;
        for (std::uint64_t n = 2; out.size() < 200; ++n)
            if (trial_prime(n)) out.push_back(n);
        return out;
    }();
    return primes;
}

// Calkin-Wilf tree in breadth-first order: a/b has children a/(a+b) and (a+b)/b.
inline std::vector<std::pair<std::uint64_t, std::uint64_t>> calkin_wilf_bfs(std::size_t count) {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> out{{1, 1}};
    for (std::size_t i = 0; out.size() < count; ++i) {
        auto [a, b] = out[i];
        out.emplace_back(a, a + b);
        if (out.size() < count) out.emplace_back(a + b, b);
    }
    out.resize(count);
    return out;
}

}  // namespace testsupport
