#include "primetree/cli.hpp"

#include "primetree/codec.hpp"
#include "primetree/error.hpp"
#include "primetree/generator.hpp"
#include "primetree/rationals.hpp"
#include "primetree/selftest.hpp"
#include "primetree/sexpr.hpp"
#include "primetree/sieve.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <optional>
#include <ostream>

namespace primetree::cli {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::uint64_t parse_natural(std::string_view text) {
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty())
        throw UsageError("expected a non-negative integer, got '" + std::string(text) + "'");
    return v;
}

BigInt parse_big(std::string_view text) {
    if (text.empty() || text.find_first_not_of("0123456789") != std::string_view::npos)
        throw UsageError("expected a non-negative integer, got '" + std::string(text) + "'");
    return BigInt(std::string(text));
}

struct Fraction {
    BigInt num;
    std::optional<BigInt> den;
};

Fraction parse_fraction(std::string_view text) {
    Fraction f;
    auto slash = text.find('/');
    f.num = parse_big(text.substr(0, slash));
    if (slash != std::string_view::npos) f.den = parse_big(text.substr(slash + 1));
    return f;
}

void print_forest(const Forest& forest, bool dot, std::ostream& out) {
    if (dot) {
        out << to_dot(forest.trees());
        return;
    }
    for (const auto& t : forest) out << to_sexpr(t) << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Prime-labeled rooted trees: integer/rational codec, forests, sieve", "primetree"};
    app.require_subcommand(1);

    std::string encode_value;
    auto* encode = app.add_subcommand("encode", "Print the tree of n or p/q");
    encode->add_option("value", encode_value, "n or p/q")->required();

    std::string decode_text;
    auto* decode = app.add_subcommand("decode", "Evaluate a tree S-expression");
    decode->add_option("sexpr", decode_text, "e.g. \"(r (2 (2)) (3))\"")->required();

    std::uint32_t labels = 0;
    std::uint32_t height = 0;
    bool count_only = false;
    bool dot = false;
    auto* forest = app.add_subcommand("forest", "List G_h over n labels");
    forest->add_option("--labels", labels, "number of labels n")->required()->check(CLI::Range(1U, 1000U));
    forest->add_option("--height", height, "height bound h")->required();
    forest->add_flag("--count-only", count_only, "print only the number of trees");
    forest->add_flag("--dot", dot, "Graphviz output");

    std::uint32_t count_labels = 0;
    std::uint32_t count_height = 0;
    auto* count = app.add_subcommand("count", "Exact |G_h| from the S recurrence");
    count->add_option("--labels", count_labels, "number of labels n")->required()->check(CLI::Range(1U, 1000U));
    count->add_option("--height", count_height, "height bound h")->required();

    std::string sieve_q;
    bool show_composites = false;
    bool fidelity = false;
    auto* sieve = app.add_subcommand("sieve", "Primes in (q, 2q) from composite trees");
    sieve->add_option("q", sieve_q, "a prime")->required();
    auto* show_flag = sieve->add_flag("--show-composites", show_composites, "also print each composite and its tree");
    sieve->add_flag("--fidelity", fidelity, "use the literal fixpoint recurrence (q <= 13)")->excludes(show_flag);

    std::uint64_t rational_count = 0;
    std::uint32_t max_stage = 0;
    std::string locate_value;
    auto* rationals = app.add_subcommand("rationals", "Duplicate-free listing of the positive rationals");
    auto* count_opt = rationals->add_option("--count", rational_count, "number of entries to print");
    auto* stage_opt = rationals->add_option("--max-stage", max_stage, "stop after this stage")->needs(count_opt);
    auto* locate_opt = rationals->add_option("--locate", locate_value, "print the first stage containing p/q");
    count_opt->excludes(locate_opt);
    stage_opt->excludes(locate_opt);
    rationals->require_option(1, 2);

    auto* selftest = app.add_subcommand("selftest", "Run the oracle checks");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*encode) {
            auto f = parse_fraction(encode_value);
            auto t = f.den ? encode_rational(f.num, *f.den) : encode_integer(f.num);
            out << to_sexpr(t) << '\n';
        } else if (*decode) {
            out << eval_rational_tree(parse_sexpr(decode_text)).to_string() << '\n';
        } else if (*forest) {
            auto g = g_forest(labels, height);
            if (count_only)
                out << g.size() << '\n';
            else
                print_forest(g, dot, out);
        } else if (*count) {
            out << g_count(count_labels, count_height).str() << '\n';
        } else if (*sieve) {
            const auto q = parse_natural(sieve_q);
            if (fidelity) {
                for (auto p : literal_fixpoint_sieve(q)) out << p << '\n';
            } else {
                auto run = sieve_run(q);
                if (show_composites)
                    for (const auto& c : run.composites) out << c.value << '\t' << to_sexpr(c.tree) << '\n';
                for (auto p : run.primes_found) out << p << '\n';
            }
        } else if (*rationals) {
            if (*locate_opt) {
                auto f = parse_fraction(locate_value);
                out << stage_of(encode_rational(f.num, f.den.value_or(BigInt(1)))) << '\n';
            } else {
                RationalStream stream;
                for (std::uint64_t i = 0; i < rational_count; ++i) {
                    auto e = stream.next();
                    if (*stage_opt && e.stage > max_stage) break;
                    out << (e.value ? e.value->to_fraction() : std::string("overflow")) << '\t' << to_sexpr(e.tree) << '\n';
                }
            }
        } else if (*selftest) {
            bool all = true;
            for (const auto& r : run_selftest()) {
                out << (r.passed ? "PASS " : "FAIL ") << r.name;
                if (!r.passed) out << ": " << r.detail;
                out << '\n';
                all = all && r.passed;
            }
            return all ? kExitOk : kExitDomain;
        }
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitDomain;
    }
    return kExitOk;
}

}  // namespace primetree::cli
