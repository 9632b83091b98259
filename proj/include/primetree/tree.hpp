#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <vector>

namespace primetree {

// Vertex decoration: the prime with the given index, or its inverse.
// Ordered plain-before-inverted, then by prime index.
struct Label {
    std::uint32_t prime_index = 0;
    bool inverted = false;

    std::uint64_t prime() const;

    friend bool operator==(const Label&, const Label&) = default;
    friend std::strong_ordering operator<=>(const Label& a, const Label& b) {
        if (a.inverted != b.inverted) return a.inverted ? std::strong_ordering::greater : std::strong_ordering::less;
        return a.prime_index <=> b.prime_index;
    }
};

struct Branch;

// Immutable rooted tree with an unlabeled root. A tree is the sorted list of
// branches hanging from its root; the singleton (root only) has none.
//
// Every constructed Tree is validly labeled: siblings carry distinct labels,
// inverted labels only hang from the root, and a root never carries both p
// and 1/p. Branches are kept in Label order, so structural equality is
// semantic equality. Copies share structure.
class Tree {
public:
    Tree();

    // Checked construction from branches in any order.
    static Tree from_branches(std::vector<Branch> branches);

    std::span<const Branch> branches() const;
    bool is_singleton() const noexcept { return node_ == nullptr; }
    std::size_t arity() const noexcept;
    std::size_t height() const noexcept;
    std::uint64_t leaf_count() const noexcept;
    // True when some root branch carries an inverted label.
    bool has_inverse() const noexcept;
    std::size_t hash() const noexcept;

    friend bool operator==(const Tree& a, const Tree& b);
    friend std::strong_ordering operator<=>(const Tree& a, const Tree& b);
    friend std::strong_ordering compare(const Tree& a, const Tree& b);

private:
    struct Node;
    explicit Tree(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

    std::shared_ptr<const Node> node_;
};

struct Branch {
    Label label;
    Tree subtree;

    friend bool operator==(const Branch&, const Branch&) = default;
};

struct TreeHash {
    std::size_t operator()(const Tree& t) const noexcept { return t.hash(); }
};

// Unchecked input for validate(): arbitrary order, arbitrary labels.
struct RawNode {
    Label label;
    std::vector<RawNode> children;
};

struct RawTree {
    std::vector<RawNode> children;
};

Tree singleton();
Tree label_tree(std::uint32_t prime_index, bool inverted = false);

// Root-merge of two trees. Throws SiblingCollision when the operands share a
// depth-1 label (or one carries p and the other 1/p).
Tree graft(const Tree& a, const Tree& b);

// Canonicalizes raw data, or throws SiblingCollision / MisplacedInverse with
// the path of the offending vertex.
Tree validate(const RawTree& raw);
RawTree to_raw(const Tree& t);

// Total order: height, then arity, then branch sequences lexicographically
// (label first, subtree recursively).
std::strong_ordering compare(const Tree& a, const Tree& b);

inline std::size_t height(const Tree& t) { return t.height(); }
inline std::uint64_t leaf_count(const Tree& t) { return t.leaf_count(); }

}  // namespace primetree

template <>
struct std::hash<primetree::Tree> {
    std::size_t operator()(const primetree::Tree& t) const noexcept { return t.hash(); }
};
