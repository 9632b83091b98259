#include "primetree/sieve.hpp"

#include "primetree/codec.hpp"
#include "primetree/error.hpp"
#include "primetree/forest.hpp"
#include "primetree/generator.hpp"
#include "primetree/primes.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace primetree {

std::vector<std::uint64_t> eratosthenes(std::uint64_t n) {
    std::vector<std::uint64_t> primes;
    if (n < 2) return primes;
    std::vector<bool> composite(n + 1, false);
    for (std::uint64_t i = 2; i <= n; ++i) {
        if (composite[i]) continue;
        primes.push_back(i);
        for (std::uint64_t j = i * i; j <= n; j += i) composite[j] = true;
    }
    return primes;
}

std::vector<std::uint64_t> eratosthenes_parallel(std::uint64_t n, std::uint64_t segment_size) {
    if (n < 2) return {};
    segment_size = std::max<std::uint64_t>(segment_size, 64);
    const auto root = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n))) + 1;
    const auto base = eratosthenes(root);

    const std::uint64_t segments = (n + segment_size) / segment_size;
    std::vector<std::vector<std::uint64_t>> found(segments);

#pragma omp parallel for schedule(dynamic, 1)
    for (std::int64_t s = 0; s < static_cast<std::int64_t>(segments); ++s) {
        const std::uint64_t lo = static_cast<std::uint64_t>(s) * segment_size;
        const std::uint64_t hi = std::min(lo + segment_size - 1, n);
        std::vector<char> composite(hi - lo + 1, 0);
        for (auto p : base) {
            if (p * p > hi) break;
            std::uint64_t start = std::max(p * p, (lo + p - 1) / p * p);
            for (std::uint64_t j = start; j <= hi; j += p) composite[j - lo] = 1;
        }
        auto& out = found[static_cast<std::size_t>(s)];
        for (std::uint64_t v = std::max<std::uint64_t>(lo, 2); v <= hi; ++v)
            if (!composite[v - lo]) out.push_back(v);
    }

    std::vector<std::uint64_t> primes;
    for (auto& f : found) primes.insert(primes.end(), f.begin(), f.end());
    return primes;
}

namespace {

void require_prime(std::uint64_t q) {
    if (!is_prime(q)) throw Error(ErrorKind::NotPrime, std::to_string(q) + " is not prime");
}

std::vector<std::uint32_t> labels_up_to(std::uint64_t q) {
    std::vector<std::uint32_t> labels(prime_pi(q));
    std::iota(labels.begin(), labels.end(), 0U);
    return labels;
}

std::vector<Composite> window_from(const std::vector<Tree>& trees, std::uint64_t q) {
    const BigInt bound = BigInt(2) * q;
    std::vector<Composite> out;
    for (const auto& t : trees) {
        // A lone leaf is the prime itself, never a composite.
        if (t.arity() == 1 && t.branches()[0].subtree.is_singleton()) continue;
        auto v = eval_bounded(t, bound);
        if (v.over_bound() || *v.value <= q) continue;
        out.push_back(Composite{v.value->convert_to<std::uint64_t>(), t});
    }
    std::sort(out.begin(), out.end(), [](const Composite& a, const Composite& b) { return a.value < b.value; });
    // Distinct trees have distinct values; a repeat means the bijection broke.
    auto dup = std::adjacent_find(out.begin(), out.end(), [](const Composite& a, const Composite& b) { return a.value == b.value; });
    if (dup != out.end()) throw std::logic_error("two trees evaluate to " + std::to_string(dup->value));
    return out;
}

std::vector<std::uint64_t> primes_from_gaps(const std::vector<Composite>& composites) {
    std::vector<std::uint64_t> primes;
    for (std::size_t i = 0; i + 1 < composites.size(); ++i)
        if (composites[i + 1].value == composites[i].value + 2) primes.push_back(composites[i].value + 1);
    return primes;
}

}  // namespace

std::vector<Composite> composites_in_window(std::uint64_t q) {
    require_prime(q);
    const auto labels = labels_up_to(q);
    return window_from(g_stream_value_bounded(labels, BigInt(2) * q), q);
}

std::vector<Composite> composites_in_window_serial(std::uint64_t q) {
    require_prime(q);
    const auto labels = labels_up_to(q);
    return window_from(g_stream_value_bounded_serial(labels, BigInt(2) * q), q);
}

SieveRun sieve_run(std::uint64_t q) {
    SieveRun run;
    run.q = q;
    run.composites = composites_in_window(q);
    run.labels = labels_up_to(q);
    // (2, 4] holds only the composite 4, so there is no pair to scan.
    run.primes_found = q == 2 ? std::vector<std::uint64_t>{3} : primes_from_gaps(run.composites);
    return run;
}

std::vector<std::uint64_t> combinatorial_sieve(std::uint64_t q) { return sieve_run(q).primes_found; }

namespace {

Forest trim(const Forest& f, const BigInt& bound) {
    std::vector<Tree> kept;
    for (const auto& t : f)
        if (!eval_bounded(t, bound).over_bound()) kept.push_back(t);
    return Forest(std::move(kept));
}

}  // namespace

std::vector<std::uint64_t> literal_fixpoint_sieve(std::uint64_t q) {
    require_prime(q);
    if (q > 13) throw Error(ErrorKind::SizeOverBudget, "literal fixpoint sieve is limited to q <= 13");
    if (q == 2) return {3};

    const auto n = prime_pi(q);
    const BigInt bound = BigInt(2) * q;
    const Forest root{singleton()};

    // Grafting multiplies and raising exponentiates, so a tree above 2q
    // never contributes to one below it; trimming after each step is exact.
    auto step = [&](const Forest& previous) {
        Forest next = root;
        for (std::uint32_t k = 0; k < n; ++k)
            next = trim(graft_forests(next, forest_union(root, raise_forest(label_tree(k), previous))), bound);
        return next;
    };

    Forest old_forest;
    Forest new_forest = step(root);
    auto has_fresh_small = [&] {
        for (const auto& t : difference(new_forest, old_forest))
            if (!eval_bounded(t, bound).over_bound()) return true;
        return false;
    };
    while (has_fresh_small()) {
        old_forest = new_forest;
        new_forest = step(old_forest);
    }

    std::vector<std::uint64_t> rest;
    for (const auto& t : new_forest) {
        auto v = eval_bounded(t, bound);
        if (!v.over_bound() && *v.value > q) rest.push_back(v.value->convert_to<std::uint64_t>());
    }
    std::sort(rest.begin(), rest.end());
    rest.erase(std::unique(rest.begin(), rest.end()), rest.end());

    std::vector<std::uint64_t> out;
    for (std::size_t i = 0; i + 1 < rest.size(); ++i)
        if (rest[i + 1] == rest[i] + 2) out.push_back(rest[i] + 1);
    return out;
}

}  // namespace primetree
