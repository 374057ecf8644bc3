#include "jaco/sequence.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <stdexcept>

#include "jaco/checked.hpp"
#include "jaco/pascal.hpp"

namespace jaco {
namespace {

// f_93 is the last Fibonacci number representable in 64 bits.
constexpr std::uint64_t kMaxExactFibIndex = 93;

std::uint64_t fib_term(std::uint64_t i, bool saturate) {
    if (!saturate && i > kMaxExactFibIndex)
        throw std::overflow_error("fibonacci term f_" + std::to_string(i) +
                                  " exceeds 64 bits");
    std::uint64_t a = 1, b = 1;  // f_1, f_2
    for (std::uint64_t idx = 2; idx < i; ++idx) {
        std::uint64_t next = sat_add_u64(a, b);
        a = b;
        b = next;
    }
    return i == 1 ? 1 : b;
}

// a_i = i - floor(2(i+1) / (3 + sqrt 5)). With m = i + 1 the floor equals
// floor((3m - sqrt(5 m^2)) / 2), and since 5 m^2 is never a perfect square,
// t = isqrt(5 m^2) gives floor exactly as (3m - t - 1) / 2.
std::uint64_t linear_term(std::uint64_t i) {
    const std::uint64_t m = i + 1;
    const unsigned __int128 sq = static_cast<unsigned __int128>(5) * m * m;
    if (sq > kU64Max)
        throw std::overflow_error("linear-jaco term at index " + std::to_string(i) +
                                  " exceeds exact 64-bit evaluation range");
    const std::uint64_t t = isqrt(static_cast<std::uint64_t>(sq));
    return i - (3 * m - t - 1) / 2;
}

std::uint64_t set_term(std::uint64_t base, SetVariant variant, std::uint64_t i) {
    const std::uint64_t period = (1ULL << base) - 1;
    const std::uint64_t pos = 1 + (i - 1) % period;
    if (variant == SetVariant::PaperFigure) {
        static constexpr std::uint64_t printed[7] = {1, 2, 3, 4, 4, 5, 6};
        return printed[pos - 1];
    }
    std::uint64_t sum = 0;
    for (std::uint64_t e : subset_at(base, pos)) sum += e;
    return sum;
}

std::uint64_t term_impl(const SequenceSpec& spec, std::uint64_t i, bool saturate) {
    switch (spec.kind) {
        case Family::PositiveIntegers:
            return i;
        case Family::Fibonacci:
            return fib_term(i, saturate);
        case Family::ModuloK:
            return i % spec.k;
        case Family::SetSequence:
            return set_term(spec.base, spec.set_variant, i);
        case Family::LinearJaco:
            return linear_term(i);
        case Family::Explicit:
            if (i > spec.terms.size())
                throw std::out_of_range("explicit sequence has " +
                                        std::to_string(spec.terms.size()) +
                                        " terms; index " + std::to_string(i) +
                                        " requested");
            return spec.terms[i - 1];
    }
    throw std::invalid_argument("unknown sequence family");
}

std::vector<std::uint64_t> prefix_impl(const SequenceSpec& spec, std::uint64_t n,
                                       bool saturate) {
    spec.validate();
    std::vector<std::uint64_t> out;
    out.reserve(n);
    if (spec.kind == Family::Fibonacci) {
        // iterate once instead of recomputing per index
        std::uint64_t a = 1, b = 1;
        for (std::uint64_t i = 1; i <= n; ++i) {
            if (!saturate && i > kMaxExactFibIndex)
                throw std::overflow_error("fibonacci term f_" + std::to_string(i) +
                                          " exceeds 64 bits");
            out.push_back(i == 1 ? 1 : b);
            if (i >= 2) {
                std::uint64_t next = sat_add_u64(a, b);
                a = b;
                b = next;
            }
        }
        return out;
    }
    for (std::uint64_t i = 1; i <= n; ++i) out.push_back(term_impl(spec, i, saturate));
    return out;
}

}  // namespace

SequenceSpec SequenceSpec::positive_integers() {
    return SequenceSpec{Family::PositiveIntegers, 0, 0, SetVariant::Definitional, {}};
}

SequenceSpec SequenceSpec::fibonacci() {
    return SequenceSpec{Family::Fibonacci, 0, 0, SetVariant::Definitional, {}};
}

SequenceSpec SequenceSpec::modulo(std::uint64_t k) {
    return SequenceSpec{Family::ModuloK, k, 0, SetVariant::Definitional, {}};
}

SequenceSpec SequenceSpec::set_sequence(std::uint64_t base, SetVariant variant) {
    return SequenceSpec{Family::SetSequence, 0, base, variant, {}};
}

SequenceSpec SequenceSpec::linear_jaco() {
    return SequenceSpec{Family::LinearJaco, 0, 0, SetVariant::Definitional, {}};
}

SequenceSpec SequenceSpec::explicit_terms(std::vector<std::uint64_t> terms) {
    return SequenceSpec{Family::Explicit, 0, 0, SetVariant::Definitional,
                        std::move(terms)};
}

void SequenceSpec::validate() const {
    switch (kind) {
        case Family::ModuloK:
            if (k < 2) throw std::invalid_argument("modulo sequence requires k >= 2");
            break;
        case Family::SetSequence:
            if (base < 1 || base > 62)
                throw std::invalid_argument("set sequence base must be in [1, 62]");
            if (set_variant == SetVariant::PaperFigure && base != 3)
                throw std::invalid_argument(
                    "the paper-figure set-sequence variant is defined for base 3 only");
            break;
        case Family::Explicit:
            if (terms.empty())
                throw std::invalid_argument("explicit sequence has no terms");
            break;
        default:
            break;
    }
}

std::string SequenceSpec::family_name() const {
    switch (kind) {
        case Family::PositiveIntegers: return "positive-integers";
        case Family::Fibonacci: return "fibonacci";
        case Family::ModuloK: return "modulo-k";
        case Family::SetSequence: return "set-sequence";
        case Family::LinearJaco: return "linear-jaco";
        case Family::Explicit: return "explicit";
    }
    return "unknown";
}

std::uint64_t sequence_term(const SequenceSpec& spec, std::uint64_t i) {
    spec.validate();
    if (i == 0) throw std::invalid_argument("sequence indices are 1-based");
    return term_impl(spec, i, /*saturate=*/false);
}

std::vector<std::uint64_t> sequence_prefix(const SequenceSpec& spec, std::uint64_t n) {
    return prefix_impl(spec, n, /*saturate=*/false);
}

std::vector<std::uint64_t> sequence_prefix_saturating(const SequenceSpec& spec,
                                                      std::uint64_t n) {
    return prefix_impl(spec, n, /*saturate=*/true);
}

std::vector<std::uint64_t> subset_at(std::uint64_t base, std::uint64_t idx) {
    if (base < 1 || base > 62)
        throw std::invalid_argument("subset ground set size must be in [1, 62]");
    const std::uint64_t total = (1ULL << base) - 1;
    if (idx < 1 || idx > total)
        throw std::out_of_range("subset index " + std::to_string(idx) +
                                " outside [1, " + std::to_string(total) + "]");

    // Find the cardinality block, then unrank lexicographically inside it.
    std::uint64_t card = 1, rank = idx;
    while (rank > binomial(base, card)) {
        rank -= binomial(base, card);
        ++card;
    }
    std::vector<std::uint64_t> out;
    out.reserve(card);
    std::uint64_t lo = 1, remaining = card;
    while (remaining > 0) {
        const std::uint64_t with_lo = binomial(base - lo, remaining - 1);
        if (rank <= with_lo) {
            out.push_back(lo);
            --remaining;
        } else {
            rank -= with_lo;
        }
        ++lo;
    }
    return out;
}

std::uint64_t isqrt(std::uint64_t x) {
    if (x == 0) return 0;
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(x)));
    while (r > 0 && static_cast<unsigned __int128>(r) * r > x) --r;
    while (static_cast<unsigned __int128>(r + 1) * (r + 1) <= x) ++r;
    return r;
}

SequenceSpec load_explicit_sequence(std::istream& in) {
    std::vector<std::uint64_t> terms;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        const auto last = line.find_last_not_of(" \t\r");
        const std::string tok = line.substr(first, last - first + 1);
        if (tok[0] == '#') continue;

        std::uint64_t value = 0;
        const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (ec != std::errc{} || ptr != tok.data() + tok.size())
            throw std::invalid_argument("line " + std::to_string(lineno) +
                                        ": expected a non-negative integer, got \"" +
                                        tok + "\"");
        terms.push_back(value);
    }
    if (terms.empty())
        throw std::invalid_argument("sequence input contains no terms");
    return SequenceSpec::explicit_terms(std::move(terms));
}

SequenceSpec load_explicit_sequence_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::invalid_argument("cannot open sequence file: " + path);
    return load_explicit_sequence(f);
}

}  // namespace jaco
