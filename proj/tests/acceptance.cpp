// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include "primetree/codec.hpp"
#include "primetree/forest.hpp"
#include "primetree/generator.hpp"
#include "primetree/rationals.hpp"
#include "primetree/sexpr.hpp"
#include "primetree/sieve.hpp"
#include "support.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <set>
#include <string>
#include <unordered_set>

using namespace primetree;

namespace {

struct Outcome {
    bool ok = true;
    std::string note;

    void fail(const std::string& why) {
        if (ok) note = why;
        ok = false;
    }
};

int failures = 0;

void criterion(const char* id, const char* title, double limit_seconds, const std::function<void(Outcome&)>& body) {
    Outcome o;
    auto t0 = std::chrono::steady_clock::now();
    try {
        body(o);
    } catch (const std::exception& e) {
        o.fail(std::string("exception: ") + e.what());
    }
    double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (limit_seconds > 0 && elapsed >= limit_seconds) o.fail("took " + std::to_string(elapsed) + " s, limit " + std::to_string(limit_seconds) + " s");
    if (!o.ok) ++failures;
    std::printf("[%s] %-4s %-62s %9.3f s%s%s\n", o.ok ? "PASS" : "FAIL", id, title, elapsed, o.note.empty() ? "" : "  ", o.note.c_str());
    std::fflush(stdout);
}

std::vector<std::uint64_t> expected_primes(std::uint64_t q) {
    std::vector<std::uint64_t> out;
    for (auto p : eratosthenes(2 * q))
        if (p > q && p < 2 * q) out.push_back(p);
    return out;
}

// Calkin-Wilf index of a/b (root 1/1 is index 1, children 2n and 2n + 1),
// or 0 once the path is longer than max_depth.
std::uint64_t calkin_wilf_index(std::uint64_t a, std::uint64_t b, std::size_t max_depth) {
    std::vector<int> bits;
    while (a != b) {
        if (bits.size() > max_depth) return 0;
        if (a < b) {
            b -= a;
            bits.push_back(0);
        } else {
            a -= b;
            bits.push_back(1);
        }
    }
    std::uint64_t n = 1;
    for (auto it = bits.rbegin(); it != bits.rend(); ++it) n = 2 * n + static_cast<std::uint64_t>(*it);
    return n;
}

// One Euclid step first: boost's gcd is slow when the operands differ
// greatly in size, which is the usual case for stream values.
BigInt gcd_of(const BigInt& a, const BigInt& b) {
    if (a < b) return gcd_of(b, a);
    if (b == 0) return a;
    return boost::multiprecision::gcd(b, BigInt(a % b));
}

}  // namespace

int main() {
    criterion("AC1", "bijection: integers 1..100000 and the 729 trees of G(3,2)", 30, [](Outcome& o) {
        for (std::uint64_t m = 1; m <= 100000; ++m)
            if (eval_integer_tree(encode_integer(m)) != m) return o.fail("eval(encode(" + std::to_string(m) + "))");
        auto g = g_forest(3, 2);
        if (g.size() != 729) return o.fail("G(3,2) has " + std::to_string(g.size()) + " trees");
        for (const auto& t : g)
            if (encode_integer(eval_integer_tree(t)) != t) return o.fail("encode(eval(" + to_sexpr(t) + "))");
    });

    criterion("AC2", "|G(n,h)| = S_h for (1,1..4), (2,1..2), (3,1..2)", 10, [](Outcome& o) {
        struct Case {
            std::uint32_t n, h;
            std::uint64_t expected;
        };
        for (auto c : {Case{1, 1, 2}, Case{1, 2, 3}, Case{1, 3, 4}, Case{1, 4, 5}, Case{2, 1, 4}, Case{2, 2, 25}, Case{3, 1, 8}, Case{3, 2, 729}}) {
            auto size = g_forest(c.n, c.h).size();
            if (size != c.expected || g_count(c.n, c.h) != c.expected)
                return o.fail("n=" + std::to_string(c.n) + " h=" + std::to_string(c.h) + ": |G|=" + std::to_string(size) + " S=" + g_count(c.n, c.h).str());
        }
    });

    criterion("AC3", "G(2,2) equals brute-force rooted subtrees of the binary tree", 0, [](Outcome& o) {
        auto g = g_forest(2, 2);
        auto brute = all_valid_trees_bruteforce(2, 2);
        if (brute.size() != 25) o.fail("brute force found " + std::to_string(brute.size()));
        if (!(g == brute)) o.fail("sets differ");
    });

    criterion("AC4", "tree sieve = Eratosthenes on (q,2q) for primes q <= 101", 60, [](Outcome& o) {
        for (auto q : eratosthenes(101))
            if (combinatorial_sieve(q) != expected_primes(q)) return o.fail("q=" + std::to_string(q));
        if (combinatorial_sieve(2) != std::vector<std::uint64_t>{3}) o.fail("q=2");
        if (combinatorial_sieve(7) != std::vector<std::uint64_t>{11, 13}) o.fail("q=7");
        for (std::uint64_t q : {3, 5, 7, 11, 13})
            if (literal_fixpoint_sieve(q) != combinatorial_sieve(q)) return o.fail("literal fixpoint differs at q=" + std::to_string(q));
    });

    criterion("AC5", "adjacent window composites differ by <= 2 for primes q <= 101", 0, [](Outcome& o) {
        std::size_t violations = 0;
        for (auto q : eratosthenes(101)) {
            auto cs = composites_in_window(q);
            for (std::size_t i = 1; i < cs.size(); ++i)
                if (cs[i].value - cs[i - 1].value > 2) ++violations;
        }
        if (violations) o.fail(std::to_string(violations) + " violations");
    });

    criterion("AC6", "|H(i,m)| = h_count for (0,1..3), (1,1..2); distinct, reduced", 0, [](Outcome& o) {
        struct Case {
            std::uint32_t i, m;
            std::uint64_t expected;
        };
        for (auto c : {Case{0, 1, 3}, Case{0, 2, 9}, Case{0, 3, 27}, Case{1, 1, 5}, Case{1, 2, 81}}) {
            auto h = h_forest(c.i, c.m);
            const auto tag = "i=" + std::to_string(c.i) + " m=" + std::to_string(c.m);
            if (h.size() != c.expected || h_count(c.i, c.m) != c.expected) return o.fail(tag + ": size " + std::to_string(h.size()));
            std::set<std::pair<BigInt, BigInt>> values;
            for (const auto& t : h) {
                auto v = eval_rational_tree(t);
                if (boost::multiprecision::gcd(v.numerator, v.denominator) != 1) return o.fail(tag + ": " + v.to_fraction() + " not reduced");
                values.emplace(v.numerator, v.denominator);
            }
            if (values.size() != h.size()) return o.fail(tag + ": repeated values");
        }
    });

    criterion("AC7", "10000 stream entries distinct+reduced; 500 Calkin-Wilf covered", 120, [](Outcome& o) {
        RationalStream stream;
        std::set<std::pair<BigInt, BigInt>> seen;
        std::unordered_set<Tree, TreeHash> towers;
        std::vector<std::pair<std::uint64_t, std::uint64_t>> small;
        for (int k = 0; k < 10000; ++k) {
            auto e = stream.next();
            if (!e.value) {
                // Too large to write out. Distinct canonical trees are
                // distinct rationals, and a root never holds p beside 1/p, so
                // the value is reduced.
                std::set<std::uint32_t> up, down;
                for (const auto& b : e.tree.branches()) (b.label.inverted ? down : up).insert(b.label.prime_index);
                for (auto k : down)
                    if (up.count(k)) return o.fail(to_sexpr(e.tree) + " not reduced");
                if (!towers.insert(e.tree).second) return o.fail(to_sexpr(e.tree) + " repeated");
                continue;
            }
            const auto& v = *e.value;
            if (gcd_of(v.numerator, v.denominator) != 1) return o.fail(v.to_fraction() + " not reduced");
            if (!seen.emplace(v.numerator, v.denominator).second) return o.fail(v.to_fraction() + " repeated");
            if (v.numerator <= 10000 && v.denominator <= 10000)
                small.emplace_back(v.numerator.convert_to<std::uint64_t>(), v.denominator.convert_to<std::uint64_t>());
        }
        const auto counts = std::to_string(seen.size()) + " evaluated, " + std::to_string(towers.size()) + " too large, checked structurally";

        const Forest built[] = {h_forest(1, 1), h_forest(2, 2)};
        CalkinWilfStream cw;
        for (int k = 0; k < 500; ++k) {
            auto v = cw.next();
            auto t = encode_rational(v.numerator, v.denominator);
            auto s = stage_of(t);
            // The stream emits all of H(s,s) by the end of stage s.
            if (!in_h_forest(t, s, s)) return o.fail(v.to_fraction() + " missing from stage " + std::to_string(s));
            if (s <= 2 && !built[s - 1].contains(t)) return o.fail(v.to_fraction() + " missing from built H(" + std::to_string(s) + ")");
        }

        // Reverse direction on the finite prefix: stream values with short
        // Calkin-Wilf paths must occur in the Calkin-Wilf listing.
        constexpr std::size_t kDepth = 17;
        std::set<std::pair<BigInt, BigInt>> cw_prefix;
        CalkinWilfStream cw2;
        for (std::uint64_t n = 1; n < (std::uint64_t{1} << (kDepth + 2)); ++n) {
            auto v = cw2.next();
            cw_prefix.emplace(v.numerator, v.denominator);
        }
        std::size_t checked = 0;
        for (auto [a, b] : small) {
            if (calkin_wilf_index(a, b, kDepth) == 0) continue;
            ++checked;
            if (!cw_prefix.count({a, b})) return o.fail(std::to_string(a) + "/" + std::to_string(b) + " not in Calkin-Wilf prefix");
        }
        if (checked == 0) return o.fail("no stream value had a short Calkin-Wilf path");
        o.note = counts + "; " + std::to_string(checked) + " found in Calkin-Wilf prefix";
    });

    criterion("AC8", "1000 random cases per law; raising non-commutativity witness", 0, [](Outcome& o) {
        std::mt19937_64 rng(8);
        for (int k = 0; k < 1000; ++k) {
            auto t = testsupport::random_rational_tree(rng, 4, 3);
            auto [a, b] = testsupport::random_split(rng, t);
            if (graft(a, b) != graft(b, a)) return o.fail("commutativity: " + to_sexpr(t));
        }
        for (int k = 0; k < 1000; ++k) {
            auto t = testsupport::random_rational_tree(rng, 4, 3);
            if (graft(t, singleton()) != t || graft(singleton(), t) != t) return o.fail("identity: " + to_sexpr(t));
        }
        for (int k = 0; k < 1000; ++k) {
            auto t = testsupport::random_plain_tree(rng, 4, 2, 0.4);
            auto [a, b] = testsupport::random_split(rng, t);
            if (eval_integer_tree(graft(a, b)) != eval_integer_tree(a) * eval_integer_tree(b)) return o.fail("multiplicativity: " + to_sexpr(t));
        }
        for (int k = 0; k < 1000; ++k) {
            auto t = testsupport::random_rational_tree(rng, 5, 3);
            if (parse_sexpr(to_sexpr(t)) != t || validate(to_raw(t)) != t) return o.fail("roundtrip: " + to_sexpr(t));
        }
        auto t0 = label_tree(0), t1 = label_tree(1);
        if (raise_forest(t0, Forest{t1}) == raise_forest(t1, Forest{t0})) o.fail("R(T_0,{T_1}) == R(T_1,{T_0})");
    });

    // As written: OverBound for 2^(2^(2^2)) under bound 10^6. That tower is
    // 65536, so a correct eval_bounded returns the value instead.
    criterion("AC9", "eval_bounded(2^(2^(2^2)), 10^6) is OverBound in < 1 ms", 0, [](Outcome& o) {
        auto tower = parse_sexpr("(r (2 (2 (2 (2)))))");
        auto t0 = std::chrono::steady_clock::now();
        auto r = eval_bounded(tower, BigInt(1'000'000));
        double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
        if (ms >= 1.0) o.fail("took " + std::to_string(ms) + " ms");
        if (!r.over_bound()) o.fail("returned " + r.value->str() + " (2^(2^(2^2)) = 65536 <= 10^6)");
    });

    criterion("AC9b", "eval_bounded(2^(2^(2^(2^2))), 10^6) is OverBound in < 1 ms", 0, [](Outcome& o) {
        auto tower = parse_sexpr("(r (2 (2 (2 (2 (2))))))");
        auto t0 = std::chrono::steady_clock::now();
        auto r = eval_bounded(tower, BigInt(1'000'000));
        double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
        if (ms >= 1.0) o.fail("took " + std::to_string(ms) + " ms");
        if (!r.over_bound()) o.fail("returned a value");
    });

    std::printf("%d criterion(s) failed\n", failures);
    return failures == 0 ? 0 : 1;
}
