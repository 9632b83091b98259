#pragma once

#include "primetree/tree.hpp"

#include <span>
#include <string>
#include <string_view>

namespace primetree {

// Canonical text form, e.g. 12 <-> "(r (2 (2)) (3))". Labels are written as
// prime values; inverted ones as "1/p".
std::string to_sexpr(const Tree& t);

// Accepts any whitespace and any sibling order; the result is canonical.
// Throws Parse for malformed text or non-prime labels, and the validate()
// errors for invalid labelings.
Tree parse_sexpr(std::string_view text);

// Graphviz digraph with one component per tree; roots drawn as "r".
std::string to_dot(std::span<const Tree> trees);

}  // namespace primetree
