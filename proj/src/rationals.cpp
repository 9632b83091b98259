#include "primetree/rationals.hpp"

#include "primetree/error.hpp"
#include "primetree/ordered.hpp"
#include "primetree/sexpr.hpp"

#include <boost/multiprecision/integer.hpp>

#include <algorithm>
#include <stdexcept>
#include <string>

namespace primetree {

BigInt h_count(std::uint32_t i, std::uint32_t m) {
    return boost::multiprecision::pow(1 + 2 * g_count(m, i), m);
}

Forest h_forest(std::uint32_t i, std::uint32_t m, std::uint64_t cap) {
    const auto expected = h_count(i, m);
    if (expected > cap)
        throw Error(ErrorKind::SizeOverBudget,
                    "h_forest(" + std::to_string(i) + ", " + std::to_string(m) + ") has " + expected.str() + " trees, cap is " + std::to_string(cap));

    const auto g = g_forest(m, i, cap);
    const Forest root{singleton()};
    Forest h = root;
    for (std::uint32_t k = 0; k < m; ++k) {
        auto factor = forest_union(root, forest_union(raise_forest(label_tree(k, true), g), raise_forest(label_tree(k, false), g)));
        h = graft_forests(h, factor);
    }
    return h;
}

namespace {

bool plain_within(const Tree& t, std::uint32_t m, std::size_t max_height) {
    if (t.height() > max_height) return false;
    for (const auto& b : t.branches())
        if (b.label.inverted || b.label.prime_index >= m || !plain_within(b.subtree, m, max_height - 1)) return false;
    return true;
}

std::uint32_t max_index(const Tree& t) {
    std::uint32_t best = 0;
    for (const auto& b : t.branches()) best = std::max({best, b.label.prime_index + 1, max_index(b.subtree)});
    return best;
}

}  // namespace

bool in_h_forest(const Tree& t, std::uint32_t i, std::uint32_t m) {
    for (const auto& b : t.branches())
        if (b.label.prime_index >= m || !plain_within(b.subtree, m, i)) return false;
    return true;
}

std::uint32_t stage_of(const Tree& t) {
    const auto h = static_cast<std::uint32_t>(t.height());
    return std::max({1U, max_index(t), h > 0 ? h - 1 : 0U});
}

RationalStream::RationalStream() { open_stage(1); }

void RationalStream::open_stage(std::uint32_t s) {
    stage_ = s;
    walk_.emplace(trees_up_to_height(s, true, s + 1));
}

RationalEntry RationalStream::next() {
    for (;;) {
        auto t = walk_->next();
        if (!t) {
            open_stage(stage_ + 1);
            continue;
        }
        if (stage_ > 1 && in_h_forest(*t, stage_ - 1, stage_ - 1)) continue;
        if (!seen_.insert(*t).second) throw std::logic_error("rational stream repeated " + to_sexpr(*t));
        auto value = eval_rational_within(*t, kStreamValueBits);
        ++emitted_;
        return RationalEntry{std::move(value), std::move(*t), stage_};
    }
}

EvalValue CalkinWilfStream::next() {
    if (!current_) {
        current_ = EvalValue{};
        return *current_;
    }
    // a/b -> b / (2 floor(a/b) b - a + b)
    const auto& x = *current_;
    const BigInt floor_x = x.numerator / x.denominator;
    EvalValue succ{x.denominator, 2 * floor_x * x.denominator - x.numerator + x.denominator};
    current_ = succ;
    return succ;
}

}  // namespace primetree
