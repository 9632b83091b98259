#include "primetree/codec.hpp"

#include "primetree/error.hpp"
#include "primetree/primes.hpp"

#include <boost/multiprecision/integer.hpp>

#include <limits>

namespace primetree {

namespace {

// Exponents past this would need more than ~8 MiB per power.
constexpr std::uint64_t kMaxExponentBits = std::uint64_t{1} << 26;

BigInt power_of_prime(std::uint64_t p, const BigInt& exponent) {
    // p >= 2, so the result needs at least `exponent` bits.
    if (exponent > kMaxExponentBits)
        throw Error(ErrorKind::SizeOverBudget, "exponent " + exponent.str() + " of " + std::to_string(p) + " is too large to evaluate");
    return boost::multiprecision::pow(BigInt(p), exponent.convert_to<unsigned>());
}

std::optional<BigInt> bounded_value(const Tree& t, const BigInt& bound) {
    if (bound < 1) return std::nullopt;
    BigInt acc = 1;
    if (t.is_singleton()) return acc;
    const auto exponent_bound = BigInt(boost::multiprecision::msb(bound));
    for (const auto& b : t.branches()) {
        auto exponent = bounded_value(b.subtree, exponent_bound);
        if (!exponent) return std::nullopt;
        const BigInt p = b.label.prime();
        for (BigInt i = 0; i < *exponent; ++i) {
            acc *= p;
            if (acc > bound) return std::nullopt;
        }
    }
    return acc;
}

// Value of t if it fits in max_bits bits.
std::optional<BigInt> integer_within(const Tree& t, std::uint64_t max_bits) {
    BigInt acc = 1;
    for (const auto& b : t.branches()) {
        auto exponent = integer_within(b.subtree, max_bits);
        if (!exponent || *exponent > max_bits) return std::nullopt;
        const auto p = b.label.prime();
        // p^e has at least e * floor(log2 p) + 1 bits.
        const auto e = exponent->convert_to<std::uint64_t>();
        const std::uint64_t floor_log2 = static_cast<std::uint64_t>(boost::multiprecision::msb(BigInt(p)));
        if (e * floor_log2 >= max_bits) return std::nullopt;
        acc *= boost::multiprecision::pow(BigInt(p), static_cast<unsigned>(e));
        if (boost::multiprecision::msb(acc) >= max_bits) return std::nullopt;
    }
    return acc;
}

void append_branches(const BigInt& m, bool inverted, std::vector<Branch>& out) {
    for (const auto& [p, e] : factor(m)) {
        auto index = prime_index_of(p);
        out.push_back(Branch{Label{*index, inverted}, encode_integer(e)});
    }
}

constexpr std::uint64_t kTrialLimit = 100'000'000;

}  // namespace

std::string EvalValue::to_string() const { return is_integer() ? numerator.str() : to_fraction(); }

std::string EvalValue::to_fraction() const { return numerator.str() + "/" + denominator.str(); }

std::size_t EvalValueHash::operator()(const EvalValue& v) const {
    auto h1 = std::hash<std::string>{}(v.numerator.str());
    auto h2 = std::hash<std::string>{}(v.denominator.str());
    return h1 ^ (h2 * 0x9e3779b97f4a7c15ULL);
}

Factorization factor(std::uint64_t m) {
    if (m == 0) throw Error(ErrorKind::ZeroInput, "cannot factor 0");
    Factorization out;
    auto take = [&](std::uint64_t d) {
        std::uint64_t e = 0;
        while (m % d == 0) {
            m /= d;
            ++e;
        }
        if (e > 0) out.emplace_back(d, e);
    };
    take(2);
    take(3);
    for (std::uint64_t d = 5; d <= m / d; d += 6) {
        take(d);
        take(d + 2);
    }
    if (m > 1) out.emplace_back(m, 1);
    return out;
}

Factorization factor(const BigInt& value) {
    if (value == 0) throw Error(ErrorKind::ZeroInput, "cannot factor 0");
    constexpr auto kWord = std::numeric_limits<std::uint64_t>::max();
    if (value <= kWord) return factor(value.convert_to<std::uint64_t>());

    BigInt m = value;
    Factorization out;
    auto take = [&](std::uint64_t d) {
        std::uint64_t e = 0;
        while (boost::multiprecision::integer_modulus(m, d) == 0) {
            m /= d;
            ++e;
        }
        if (e > 0) out.emplace_back(d, e);
    };
    take(2);
    take(3);
    std::uint64_t d = 5;
    for (; m > kWord; d += 6) {
        if (d > kTrialLimit)
            throw Error(ErrorKind::SizeOverBudget, value.str() + " has no small enough factors for trial division");
        take(d);
        take(d + 2);
    }
    // The rest fits a word; finish in machine arithmetic from d onwards.
    std::uint64_t rest = m.convert_to<std::uint64_t>();
    for (; rest > 1 && d <= rest / d; d += 6) {
        if (d > kTrialLimit)
            throw Error(ErrorKind::SizeOverBudget, value.str() + " has no small enough factors for trial division");
        for (std::uint64_t c : {d, d + 2}) {
            std::uint64_t e = 0;
            while (rest % c == 0) {
                rest /= c;
                ++e;
            }
            if (e > 0) out.emplace_back(c, e);
        }
    }
    if (rest > 1) out.emplace_back(rest, 1);
    return out;
}

BigInt eval_integer_tree(const Tree& t) {
    if (t.has_inverse()) throw Error(ErrorKind::InverseLabelPresent, "integer evaluation of a tree with inverted labels");
    BigInt value = 1;
    for (const auto& b : t.branches()) value *= power_of_prime(b.label.prime(), eval_integer_tree(b.subtree));
    return value;
}

BoundedEval eval_bounded(const Tree& t, const BigInt& bound) {
    if (t.has_inverse()) throw Error(ErrorKind::InverseLabelPresent, "bounded evaluation of a tree with inverted labels");
    return BoundedEval{bounded_value(t, bound)};
}

EvalValue eval_rational_tree(const Tree& t) {
    EvalValue v;
    for (const auto& b : t.branches()) {
        auto pw = power_of_prime(b.label.prime(), eval_integer_tree(b.subtree));
        (b.label.inverted ? v.denominator : v.numerator) *= pw;
    }
    if (boost::multiprecision::gcd(v.numerator, v.denominator) != 1)
        throw std::logic_error("rational tree evaluated to a non-reduced fraction " + v.to_fraction());
    return v;
}

std::optional<EvalValue> eval_rational_within(const Tree& t, std::uint64_t max_bits) {
    EvalValue v;
    for (const auto& b : t.branches()) {
        auto pw = integer_within(Tree::from_branches({Branch{Label{b.label.prime_index, false}, b.subtree}}), max_bits);
        if (!pw) return std::nullopt;
        auto& side = b.label.inverted ? v.denominator : v.numerator;
        side *= *pw;
        if (boost::multiprecision::msb(side) >= max_bits) return std::nullopt;
    }
    return v;
}

Tree encode_integer(const BigInt& m) {
    if (m == 0) throw Error(ErrorKind::ZeroInput, "0 has no tree");
    std::vector<Branch> branches;
    append_branches(m, false, branches);
    return Tree::from_branches(std::move(branches));
}

Tree encode_rational(const BigInt& num, const BigInt& den) {
    if (num == 0 || den == 0) throw Error(ErrorKind::ZeroInput, "rationals must have nonzero numerator and denominator");
    const BigInt g = boost::multiprecision::gcd(num, den);
    std::vector<Branch> branches;
    append_branches(num / g, false, branches);
    append_branches(den / g, true, branches);
    return Tree::from_branches(std::move(branches));
}

}  // namespace primetree
