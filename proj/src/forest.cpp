#include "primetree/forest.hpp"

#include "primetree/error.hpp"
#include "primetree/sexpr.hpp"

#include <algorithm>
#include <iterator>
#include <optional>
#include <string>

#ifdef PRIMETREE_HAVE_OPENMP
#include <omp.h>
#endif

namespace primetree {

namespace {

void canonicalize(std::vector<Tree>& trees) {
    std::sort(trees.begin(), trees.end(), [](const Tree& a, const Tree& b) { return compare(a, b) < 0; });
    trees.erase(std::unique(trees.begin(), trees.end()), trees.end());
}

bool tree_less(const Tree& a, const Tree& b) { return compare(a, b) < 0; }

Error pair_error(const Error& e, const Tree& a, const Tree& b) {
    return Error(e.kind(), e.detail() + " grafting " + to_sexpr(a) + " with " + to_sexpr(b));
}

}  // namespace

Forest::Forest(std::initializer_list<Tree> trees) : trees_(trees) { canonicalize(trees_); }

Forest::Forest(std::vector<Tree> trees) : trees_(std::move(trees)) { canonicalize(trees_); }

bool Forest::contains(const Tree& t) const { return std::binary_search(trees_.begin(), trees_.end(), t, tree_less); }

Forest forest_union(const Forest& a, const Forest& b) {
    std::vector<Tree> out;
    out.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out), tree_less);
    return Forest(std::move(out));
}

Forest difference(const Forest& a, const Forest& b) {
    std::vector<Tree> out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out), tree_less);
    return Forest(std::move(out));
}

bool is_subset(const Forest& a, const Forest& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end(), tree_less);
}

Forest graft_forests_serial(const Forest& f, const Forest& g) {
    std::vector<Tree> out;
    out.reserve(f.size() * g.size());
    for (const auto& a : f) {
        for (const auto& b : g) {
            try {
                out.push_back(graft(a, b));
            } catch (const Error& e) {
                throw pair_error(e, a, b);
            }
        }
    }
    return Forest(std::move(out));
}

Forest graft_forests(const Forest& f, const Forest& g) {
#ifdef PRIMETREE_HAVE_OPENMP
    const auto rows = static_cast<std::int64_t>(f.size());
    const auto cols = static_cast<std::int64_t>(g.size());
    const std::int64_t total = rows * cols;
    if (total < 4096) return graft_forests_serial(f, g);

    std::vector<std::optional<Tree>> slots(static_cast<std::size_t>(total));
    std::int64_t first_failure = total;

#pragma omp parallel for schedule(static)
    for (std::int64_t idx = 0; idx < total; ++idx) {
        try {
            slots[static_cast<std::size_t>(idx)] = graft(f[static_cast<std::size_t>(idx / cols)], g[static_cast<std::size_t>(idx % cols)]);
        } catch (const Error&) {
#pragma omp critical(primetree_graft_failure)
            first_failure = std::min(first_failure, idx);
        }
    }

    if (first_failure < total) {
        const auto& a = f[static_cast<std::size_t>(first_failure / cols)];
        const auto& b = g[static_cast<std::size_t>(first_failure % cols)];
        try {
            graft(a, b);
        } catch (const Error& e) {
            throw pair_error(e, a, b);
        }
    }

    std::vector<Tree> out;
    out.reserve(slots.size());
    for (auto& s : slots) out.push_back(std::move(*s));
    return Forest(std::move(out));
#else
    return graft_forests_serial(f, g);
#endif
}

Tree raise_tree(const Tree& stock, const Tree& scion) {
    if (stock.is_singleton()) return scion;
    std::vector<Branch> branches;
    branches.reserve(stock.arity());
    for (const auto& b : stock.branches()) branches.push_back(Branch{b.label, raise_tree(b.subtree, scion)});
    return Tree::from_branches(std::move(branches));
}

Forest raise_forest(const Tree& t, const Forest& f) {
    if (t.is_singleton()) return Forest{singleton()};
    std::vector<Tree> out;
    out.reserve(f.size());
    for (const auto& member : f) out.push_back(member.is_singleton() ? t : raise_tree(t, member));
    return Forest(std::move(out));
}

}  // namespace primetree
