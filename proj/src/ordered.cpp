#include "primetree/ordered.hpp"

#include <algorithm>
#include <memory>
#include <vector>

namespace primetree {

namespace {

struct Bucket {
    std::vector<Label> labels;  // depth-1 labels in Label order
    std::uint32_t label_count = 0;
    std::size_t height = 0;
};

bool plain_taken(const std::vector<Branch>& prefix, std::uint32_t index) {
    return std::any_of(prefix.begin(), prefix.end(),
                       [&](const Branch& b) { return !b.label.inverted && b.label.prime_index == index; });
}

// Labels at positions >= from that could still extend `prefix`.
std::size_t usable_after(const Bucket& bucket, std::size_t from, const std::vector<Branch>& prefix) {
    std::size_t n = 0;
    for (std::size_t j = from; j < bucket.labels.size(); ++j)
        if (!bucket.labels[j].inverted || !plain_taken(prefix, bucket.labels[j].prime_index)) ++n;
    return n;
}

// Completes `prefix` with `remaining` more branches whose labels come after
// position `start`, in lexicographic order of the branch sequence. At least
// one subtree must reach height - 1.
Lazy<Tree> complete(std::shared_ptr<const Bucket> bucket, std::size_t start, std::size_t remaining, bool reached,
                    std::vector<Branch> prefix) {
    if (remaining == 0) {
        if (reached) co_yield Tree::from_branches(prefix);
        co_return;
    }
    const auto sub_height = bucket->height - 1;
    for (std::size_t li = start; li < bucket->labels.size(); ++li) {
        const Label label = bucket->labels[li];
        if (label.inverted && plain_taken(prefix, label.prime_index)) continue;
        prefix.push_back(Branch{label, Tree{}});
        const bool feasible = usable_after(*bucket, li + 1, prefix) >= remaining - 1;
        prefix.pop_back();
        if (!feasible) continue;

        const bool must_reach = remaining == 1 && !reached;
        for (std::size_t h = must_reach ? sub_height : 0; h <= sub_height; ++h) {
            for (const auto& sub : trees_of_height(bucket->label_count, false, h)) {
                prefix.push_back(Branch{label, sub});
                for (const auto& t : complete(bucket, li + 1, remaining - 1, reached || h == sub_height, prefix)) co_yield t;
                prefix.pop_back();
            }
        }
    }
}

}  // namespace

Lazy<Tree> trees_of_height(std::uint32_t labels, bool inverted_at_root, std::size_t height) {
    if (height == 0) {
        co_yield Tree{};
        co_return;
    }
    auto bucket = std::make_shared<Bucket>();
    bucket->label_count = labels;
    bucket->height = height;
    for (std::uint32_t k = 0; k < labels; ++k) bucket->labels.push_back(Label{k, false});
    if (inverted_at_root)
        for (std::uint32_t k = 0; k < labels; ++k) bucket->labels.push_back(Label{k, true});

    // Each prime contributes at most one depth-1 branch.
    for (std::size_t arity = 1; arity <= labels; ++arity)
        for (const auto& t : complete(bucket, 0, arity, false, {})) co_yield t;
}

Lazy<Tree> trees_up_to_height(std::uint32_t labels, bool inverted_at_root, std::size_t max_height) {
    for (std::size_t h = 0; h <= max_height; ++h)
        for (const auto& t : trees_of_height(labels, inverted_at_root, h)) co_yield t;
}

}  // namespace primetree
