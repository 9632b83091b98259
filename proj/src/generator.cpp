#include "primetree/generator.hpp"

#include "primetree/error.hpp"
#include "primetree/primes.hpp"

#include <boost/multiprecision/integer.hpp>

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

namespace primetree {

void GenSpec::check() const {
    if (n_labels < 1) throw std::invalid_argument("GenSpec needs at least one label");
    if (value_bound && *value_bound < 2) throw std::invalid_argument("GenSpec value bound must be >= 2");
}

BigInt g_count(std::uint32_t n, std::uint32_t h) {
    BigInt s = 1;
    for (std::uint32_t i = 0; i < h; ++i) {
        // (1 + s)^n needs about n * log2(1 + s) bits.
        if ((boost::multiprecision::msb(s + 1) + 1) * std::uint64_t{n} > (std::uint64_t{1} << 28))
            throw Error(ErrorKind::SizeOverBudget, "g_count(" + std::to_string(n) + ", " + std::to_string(h) + ") does not fit in memory");
        s = boost::multiprecision::pow(s + 1, n);
    }
    return s;
}

Forest g_forest(std::uint32_t n, std::uint32_t h, std::uint64_t cap) {
    // Count first; the recurrence is doubly exponential in h.
    const auto expected = g_count(n, h);
    if (expected > cap)
        throw Error(ErrorKind::SizeOverBudget,
                    "g_forest(" + std::to_string(n) + ", " + std::to_string(h) + ") has " + expected.str() + " trees, cap is " + std::to_string(cap));

    Forest g{singleton()};
    for (std::uint32_t i = 1; i <= h; ++i) {
        Forest next{singleton()};
        for (std::uint32_t k = 0; k < n; ++k)
            next = graft_forests(next, forest_union(Forest{singleton()}, raise_forest(label_tree(k), g)));
        g = std::move(next);
    }
    return g;
}

namespace {

struct CompleteTree {
    std::vector<std::int32_t> parent;  // -1 for children of the root
    std::vector<std::uint32_t> slot;
};

CompleteTree complete_nary(std::uint32_t n, std::uint32_t h) {
    CompleteTree ct;
    std::vector<std::int32_t> level{-1};
    for (std::uint32_t d = 1; d <= h; ++d) {
        std::vector<std::int32_t> next;
        for (auto p : level) {
            for (std::uint32_t k = 0; k < n; ++k) {
                next.push_back(static_cast<std::int32_t>(ct.parent.size()));
                ct.parent.push_back(p);
                ct.slot.push_back(k);
                if (ct.parent.size() > 24)
                    throw Error(ErrorKind::SizeOverBudget, "complete " + std::to_string(n) + "-ary tree of height " + std::to_string(h) + " is too large to brute force");
            }
        }
        level = std::move(next);
    }
    return ct;
}

Tree tree_from_mask(const CompleteTree& ct, std::uint32_t mask, std::int32_t at) {
    std::vector<Branch> branches;
    for (std::size_t v = 0; v < ct.parent.size(); ++v)
        if ((mask >> v & 1U) && ct.parent[v] == at)
            branches.push_back(Branch{Label{ct.slot[v], false}, tree_from_mask(ct, mask, static_cast<std::int32_t>(v))});
    return Tree::from_branches(std::move(branches));
}

}  // namespace

Forest all_valid_trees_bruteforce(std::uint32_t n, std::uint32_t h) {
    const auto ct = complete_nary(n, h);
    const auto vertices = ct.parent.size();
    std::vector<Tree> out;
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << vertices); ++mask) {
        bool closed = true;
        for (std::size_t v = 0; v < vertices && closed; ++v)
            if ((mask >> v & 1U) && ct.parent[v] >= 0 && !(mask >> ct.parent[v] & 1U)) closed = false;
        if (closed) out.push_back(tree_from_mask(ct, mask, -1));
    }
    return Forest(std::move(out));
}

namespace {

struct Valued {
    BigInt value;
    Tree tree;
};

class BoundedEnumerator {
public:
    BoundedEnumerator(std::span<const std::uint32_t> labels, bool parallel) : labels_(labels.begin(), labels.end()), parallel_(parallel) {
        std::sort(labels_.begin(), labels_.end());
        labels_.erase(std::unique(labels_.begin(), labels_.end()), labels_.end());
    }

    // Every tree (singleton included) with value <= bound, ascending by
    // label choice; exponent lists come out ascending by value.
    const std::vector<Valued>& upto(const BigInt& bound) {
        if (auto it = memo_.find(bound); it != memo_.end()) return it->second;

        std::vector<Valued> acc{Valued{1, Tree{}}};
        for (auto index : labels_) {
            const BigInt p = prime_at(index);
            if (p > bound) break;
            const auto exponents = upto(BigInt(boost::multiprecision::msb(bound)));
            std::vector<Valued> powers;
            for (const auto& e : exponents) {
                if (e.value == 0) continue;
                BigInt pw = 1;
                bool fits = true;
                for (BigInt i = 0; i < e.value && fits; ++i) {
                    pw *= p;
                    fits = pw <= bound;
                }
                if (fits) powers.push_back(Valued{pw, e.tree});
            }
            std::sort(powers.begin(), powers.end(), [](const Valued& a, const Valued& b) { return a.value < b.value; });
            extend(acc, index, powers, bound);
        }
        return memo_.emplace(bound, std::move(acc)).first->second;
    }

private:
    void extend(std::vector<Valued>& acc, std::uint32_t index, const std::vector<Valued>& powers, const BigInt& bound) const {
        const auto count = static_cast<std::int64_t>(acc.size());
        std::vector<std::vector<Valued>> grown(acc.size());
        auto grow_one = [&](std::int64_t i) {
            const auto& base = acc[static_cast<std::size_t>(i)];
            for (const auto& pw : powers) {
                BigInt v = base.value * pw.value;
                if (v > bound) break;
                std::vector<Branch> branches(base.tree.branches().begin(), base.tree.branches().end());
                branches.push_back(Branch{Label{index, false}, pw.tree});
                grown[static_cast<std::size_t>(i)].push_back(Valued{std::move(v), Tree::from_branches(std::move(branches))});
            }
        };
        if (parallel_ && count >= 64) {
#pragma omp parallel for schedule(dynamic, 16)
            for (std::int64_t i = 0; i < count; ++i) grow_one(i);
        } else {
            for (std::int64_t i = 0; i < count; ++i) grow_one(i);
        }
        for (auto& g : grown)
            for (auto& v : g) acc.push_back(std::move(v));
    }

    std::vector<std::uint32_t> labels_;
    bool parallel_;
    std::map<BigInt, std::vector<Valued>> memo_;
};

std::vector<Tree> value_bounded(std::span<const std::uint32_t> prime_indices, const BigInt& bound, bool parallel) {
    if (bound < 2) throw std::invalid_argument("value bound must be >= 2");
    BoundedEnumerator e(prime_indices, parallel);
    std::vector<Tree> out;
    for (const auto& v : e.upto(bound))
        if (!v.tree.is_singleton()) out.push_back(v.tree);
    std::sort(out.begin(), out.end(), [](const Tree& a, const Tree& b) { return compare(a, b) < 0; });
    return out;
}

}  // namespace

std::vector<Tree> g_stream_value_bounded(std::span<const std::uint32_t> prime_indices, const BigInt& bound) {
#ifdef PRIMETREE_HAVE_OPENMP
    return value_bounded(prime_indices, bound, true);
#else
    return value_bounded(prime_indices, bound, false);
#endif
}

std::vector<Tree> g_stream_value_bounded_serial(std::span<const std::uint32_t> prime_indices, const BigInt& bound) {
    return value_bounded(prime_indices, bound, false);
}

}  // namespace primetree
