#pragma once

#include "primetree/tree.hpp"

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace primetree {

// Duplicate-free set of trees, iterated in compare() order.
class Forest {
public:
    Forest() = default;
    Forest(std::initializer_list<Tree> trees);
    explicit Forest(std::vector<Tree> trees);

    std::size_t size() const noexcept { return trees_.size(); }
    bool empty() const noexcept { return trees_.empty(); }
    auto begin() const noexcept { return trees_.begin(); }
    auto end() const noexcept { return trees_.end(); }
    const Tree& operator[](std::size_t i) const { return trees_[i]; }
    std::span<const Tree> trees() const noexcept { return trees_; }

    bool contains(const Tree& t) const;

    friend bool operator==(const Forest&, const Forest&) = default;

private:
    std::vector<Tree> trees_;
};

inline bool contains(const Forest& f, const Tree& t) { return f.contains(t); }
Forest forest_union(const Forest& a, const Forest& b);
Forest difference(const Forest& a, const Forest& b);
// True when every member of a is in b.
bool is_subset(const Forest& a, const Forest& b);

// All pairwise grafts of F x G. Pairs are grafted in parallel (OpenMP); a
// failing pair raises SiblingCollision for the lowest failing pair index, so
// errors are deterministic.
Forest graft_forests(const Forest& f, const Forest& g);
// Single-threaded reference for graft_forests.
Forest graft_forests_serial(const Forest& f, const Forest& g);

// R(t, F): each member's branches hung beneath every leaf of t. A singleton
// member maps to t, and a singleton t maps everything to the singleton.
Forest raise_forest(const Tree& t, const Forest& f);

// Hangs `scion`'s branches beneath every leaf of `stock`.
Tree raise_tree(const Tree& stock, const Tree& scion);

}  // namespace primetree
