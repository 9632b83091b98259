#include "primetree/sexpr.hpp"

#include "primetree/error.hpp"
#include "primetree/primes.hpp"

#include <cctype>
#include <charconv>

namespace primetree {

namespace {

void write_branch(const Branch& b, std::string& out) {
    out += '(';
    if (b.label.inverted) out += "1/";
    out += std::to_string(b.label.prime());
    for (const auto& c : b.subtree.branches()) {
        out += ' ';
        write_branch(c, out);
    }
    out += ')';
}

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    RawTree parse() {
        expect('(');
        skip_ws();
        if (!consume("r")) fail("expected root marker 'r'");
        RawTree raw;
        raw.children = parse_children();
        expect(')');
        skip_ws();
        if (pos_ != text_.size()) fail("trailing characters");
        return raw;
    }

private:
    std::vector<RawNode> parse_children() {
        std::vector<RawNode> children;
        for (;;) {
            skip_ws();
            if (peek() != '(') return children;
            ++pos_;
            skip_ws();
            RawNode node;
            node.label = parse_label();
            node.children = parse_children();
            expect(')');
            children.push_back(std::move(node));
        }
    }

    Label parse_label() {
        bool inverted = false;
        if (text_.substr(pos_, 2) == "1/") {
            inverted = true;
            pos_ += 2;
        }
        std::uint64_t value = 0;
        auto first = text_.data() + pos_;
        auto [ptr, ec] = std::from_chars(first, text_.data() + text_.size(), value);
        if (ec != std::errc{} || ptr == first) fail("expected a prime label");
        pos_ += static_cast<std::size_t>(ptr - first);
        auto index = prime_index_of(value);
        if (!index) throw Error(ErrorKind::Parse, "label " + std::to_string(value) + " is not prime");
        return Label{*index, inverted};
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    bool consume(std::string_view token) {
        if (text_.substr(pos_, token.size()) != token) return false;
        pos_ += token.size();
        return true;
    }

    void expect(char c) {
        skip_ws();
        if (peek() != c) fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    [[noreturn]] void fail(const std::string& msg) const {
        throw Error(ErrorKind::Parse, msg + " at offset " + std::to_string(pos_));
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

void write_dot_vertex(const Tree& sub, const std::string& parent, std::size_t& next_id, const std::string& prefix,
                      std::string& out) {
    for (const auto& b : sub.branches()) {
        auto id = prefix + std::to_string(next_id++);
        out += "  " + id + " [label=\"" + (b.label.inverted ? "1/" : "") + std::to_string(b.label.prime()) + "\"];\n";
        out += "  " + parent + " -> " + id + ";\n";
        write_dot_vertex(b.subtree, id, next_id, prefix, out);
    }
}

}  // namespace

std::string to_sexpr(const Tree& t) {
    std::string out = "(r";
    for (const auto& b : t.branches()) {
        out += ' ';
        write_branch(b, out);
    }
    out += ')';
    return out;
}

Tree parse_sexpr(std::string_view text) { return validate(Parser(text).parse()); }

std::string to_dot(std::span<const Tree> trees) {
    std::string out = "digraph forest {\n  node [shape=circle];\n";
    for (std::size_t i = 0; i < trees.size(); ++i) {
        auto prefix = "t" + std::to_string(i) + "_";
        auto root = prefix + "r";
        out += "  " + root + " [label=\"r\"];\n";
        std::size_t next_id = 0;
        write_dot_vertex(trees[i], root, next_id, prefix, out);
    }
    out += "}\n";
    return out;
}

}  // namespace primetree
