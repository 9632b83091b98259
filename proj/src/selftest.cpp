#include "primetree/selftest.hpp"

#include "primetree/codec.hpp"
#include "primetree/generator.hpp"
#include "primetree/rationals.hpp"
#include "primetree/sieve.hpp"

#include <algorithm>
#include <exception>
#include <functional>
#include <set>

namespace primetree {

namespace {

CheckResult check(std::string name, const std::function<std::string()>& body) {
    try {
        auto failure = body();
        return CheckResult{std::move(name), failure.empty(), failure};
    } catch (const std::exception& e) {
        return CheckResult{std::move(name), false, e.what()};
    }
}

}  // namespace

std::vector<CheckResult> run_selftest() {
    std::vector<CheckResult> results;

    results.push_back(check("integer bijection 1..5000", [] {
        for (std::uint64_t m = 1; m <= 5000; ++m)
            if (eval_integer_tree(encode_integer(m)) != m) return "eval(encode(" + std::to_string(m) + ")) differs";
        return std::string{};
    }));

    results.push_back(check("forest sizes match the S recurrence", [] {
        for (auto [n, h] : {std::pair{1U, 4U}, {2U, 2U}, {3U, 2U}})
            for (std::uint32_t i = 0; i <= h; ++i)
                if (BigInt(g_forest(n, i).size()) != g_count(n, i))
                    return "n=" + std::to_string(n) + " h=" + std::to_string(i);
        return std::string{};
    }));

    results.push_back(check("G(2,2) equals the brute-force subtree set", [] {
        return g_forest(2, 2) == all_valid_trees_bruteforce(2, 2) ? std::string{} : std::string{"sets differ"};
    }));

    results.push_back(check("tree sieve matches Eratosthenes for q <= 101", [] {
        const auto primes = eratosthenes(202);
        for (auto q : eratosthenes(101)) {
            std::vector<std::uint64_t> expected;
            for (auto p : primes)
                if (p > q && p < 2 * q) expected.push_back(p);
            if (combinatorial_sieve(q) != expected) return "q=" + std::to_string(q);
        }
        return std::string{};
    }));

    results.push_back(check("literal fixpoint sieve for q <= 7", [] {
        for (std::uint64_t q : {2, 3, 5, 7})
            if (literal_fixpoint_sieve(q) != combinatorial_sieve(q)) return "q=" + std::to_string(q);
        return std::string{};
    }));

    results.push_back(check("H forests are distinct reduced rationals", [] {
        for (auto [i, m] : {std::pair{0U, 3U}, {1U, 2U}}) {
            const auto h = h_forest(i, m);
            std::set<std::pair<BigInt, BigInt>> values;
            for (const auto& t : h) {
                auto v = eval_rational_tree(t);
                values.emplace(v.numerator, v.denominator);
            }
            if (BigInt(h.size()) != h_count(i, m) || values.size() != h.size())
                return "i=" + std::to_string(i) + " m=" + std::to_string(m);
        }
        return std::string{};
    }));

    results.push_back(check("first 200 Calkin-Wilf values are in the stream by their stage", [] {
        CalkinWilfStream cw;
        for (int k = 0; k < 200; ++k) {
            auto v = cw.next();
            auto t = encode_rational(v.numerator, v.denominator);
            auto s = stage_of(t);
            if (!in_h_forest(t, s, s)) return v.to_fraction();
        }
        return std::string{};
    }));

    return results;
}

}  // namespace primetree
