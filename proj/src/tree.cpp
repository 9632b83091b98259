#include "primetree/tree.hpp"

#include "primetree/error.hpp"
#include "primetree/primes.hpp"

#include <algorithm>
#include <string>

namespace primetree {

struct Tree::Node {
    std::vector<Branch> branches;
    std::size_t height = 0;
    std::uint64_t leaves = 0;
    std::size_t hash = 0;
    bool has_inverse = false;
};

namespace {

std::string label_text(const Label& l) {
    auto p = std::to_string(l.prime());
    return l.inverted ? "1/" + p : p;
}

std::size_t mix(std::size_t seed, std::size_t v) {
    return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace

std::uint64_t Label::prime() const { return prime_at(prime_index); }

Tree::Tree() = default;

Tree Tree::from_branches(std::vector<Branch> branches) {
    if (branches.empty()) return Tree{};
    std::sort(branches.begin(), branches.end(), [](const Branch& a, const Branch& b) { return a.label < b.label; });

    auto node = std::make_shared<Node>();
    std::size_t seed = branches.size();
    for (std::size_t i = 0; i < branches.size(); ++i) {
        const auto& b = branches[i];
        if (i > 0 && branches[i - 1].label == b.label)
            throw Error(ErrorKind::SiblingCollision, "two siblings labeled " + label_text(b.label));
        if (b.subtree.has_inverse())
            throw Error(ErrorKind::MisplacedInverse, "inverted label below " + label_text(b.label));
        node->height = std::max(node->height, b.subtree.height() + 1);
        node->leaves += b.subtree.leaf_count();
        node->has_inverse = node->has_inverse || b.label.inverted;
        seed = mix(seed, (std::size_t{b.label.prime_index} << 1) | (b.label.inverted ? 1 : 0));
        seed = mix(seed, b.subtree.hash());
    }
    if (node->has_inverse) {
        // p and 1/p at one root would make the evaluation non-reduced.
        for (const auto& b : branches) {
            if (!b.label.inverted) continue;
            Label plain{b.label.prime_index, false};
            auto hit = std::lower_bound(branches.begin(), branches.end(), plain,
                                        [](const Branch& x, const Label& l) { return x.label < l; });
            if (hit != branches.end() && hit->label == plain)
                throw Error(ErrorKind::SiblingCollision, "root carries both " + label_text(plain) + " and " + label_text(b.label));
        }
    }
    node->hash = seed;
    node->branches = std::move(branches);
    return Tree{std::shared_ptr<const Node>(std::move(node))};
}

std::span<const Branch> Tree::branches() const {
    if (!node_) return {};
    return node_->branches;
}

std::size_t Tree::arity() const noexcept { return node_ ? node_->branches.size() : 0; }
std::size_t Tree::height() const noexcept { return node_ ? node_->height : 0; }
std::uint64_t Tree::leaf_count() const noexcept { return node_ ? node_->leaves : 1; }
bool Tree::has_inverse() const noexcept { return node_ && node_->has_inverse; }
std::size_t Tree::hash() const noexcept { return node_ ? node_->hash : 0x51ed27; }

bool operator==(const Tree& a, const Tree& b) {
    if (a.hash() != b.hash()) return false;
    return compare(a, b) == 0;
}

std::strong_ordering operator<=>(const Tree& a, const Tree& b) { return compare(a, b); }

std::strong_ordering compare(const Tree& a, const Tree& b) {
    if (a.node_ == b.node_) return std::strong_ordering::equal;
    if (auto c = a.height() <=> b.height(); c != 0) return c;
    if (auto c = a.arity() <=> b.arity(); c != 0) return c;
    auto ab = a.branches();
    auto bb = b.branches();
    for (std::size_t i = 0; i < ab.size(); ++i) {
        if (auto c = ab[i].label <=> bb[i].label; c != 0) return c;
        if (auto c = compare(ab[i].subtree, bb[i].subtree); c != 0) return c;
    }
    return std::strong_ordering::equal;
}

Tree singleton() { return Tree{}; }

Tree label_tree(std::uint32_t prime_index, bool inverted) {
    return Tree::from_branches({Branch{Label{prime_index, inverted}, Tree{}}});
}

Tree graft(const Tree& a, const Tree& b) {
    if (a.is_singleton()) return b;
    if (b.is_singleton()) return a;
    std::vector<Branch> merged;
    merged.reserve(a.arity() + b.arity());
    merged.insert(merged.end(), a.branches().begin(), a.branches().end());
    merged.insert(merged.end(), b.branches().begin(), b.branches().end());
    return Tree::from_branches(std::move(merged));
}

namespace {

Tree validate_children(const std::vector<RawNode>& children, const std::string& path, bool at_root) {
    std::vector<Branch> branches;
    branches.reserve(children.size());
    for (const auto& child : children) {
        const auto here = path + "/" + label_text(child.label);
        if (child.label.inverted && !at_root)
            throw Error(ErrorKind::MisplacedInverse, "inverted label at " + here);
        branches.push_back(Branch{child.label, validate_children(child.children, here, false)});
    }
    for (std::size_t i = 0; i < branches.size(); ++i)
        for (std::size_t j = i + 1; j < branches.size(); ++j)
            if (branches[i].label == branches[j].label)
                throw Error(ErrorKind::SiblingCollision, "two children of " + path + " labeled " + label_text(branches[i].label));
    try {
        return Tree::from_branches(std::move(branches));
    } catch (const Error& e) {
        throw Error(e.kind(), e.detail() + " at " + path);
    }
}

}  // namespace

Tree validate(const RawTree& raw) { return validate_children(raw.children, "r", true); }

namespace {

RawNode to_raw_node(const Branch& b) {
    RawNode n{b.label, {}};
    for (const auto& c : b.subtree.branches()) n.children.push_back(to_raw_node(c));
    return n;
}

}  // namespace

RawTree to_raw(const Tree& t) {
    RawTree raw;
    for (const auto& b : t.branches()) raw.children.push_back(to_raw_node(b));
    return raw;
}

}  // namespace primetree
