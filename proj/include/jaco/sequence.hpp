#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace jaco {

enum class Family {
    PositiveIntegers,  // a_i = i
    Fibonacci,         // a_i = f_i with f_1 = f_2 = 1
    ModuloK,           // a_i = i mod k
    SetSequence,       // a_i derived from the i-th non-empty subset of {1..base}
    LinearJaco,        // a_i = i - floor(2(i+1) / (3 + sqrt 5)), exact
    Explicit,          // caller-provided terms
};

// Term rule for the set sequence. Definitional sums the elements of the i-th
// subset; PaperFigure is the printed periodic variant 1,2,3,4,4,5,6 that the
// published base-3 figures were drawn from (the two differ at one position
// per period).
enum class SetVariant {
    Definitional,
    PaperFigure,
};

// Declarative description of an out-degree sequence {a_i}.
struct SequenceSpec {
    Family kind = Family::PositiveIntegers;
    std::uint64_t k = 0;     // ModuloK: the modulus, >= 2
    std::uint64_t base = 0;  // SetSequence: ground set is {1..base}
    SetVariant set_variant = SetVariant::Definitional;
    std::vector<std::uint64_t> terms;  // Explicit only

    static SequenceSpec positive_integers();
    static SequenceSpec fibonacci();
    static SequenceSpec modulo(std::uint64_t k);
    static SequenceSpec set_sequence(std::uint64_t base,
                                     SetVariant variant = SetVariant::Definitional);
    static SequenceSpec linear_jaco();
    static SequenceSpec explicit_terms(std::vector<std::uint64_t> terms);

    // Throws std::invalid_argument when the parameters are unusable
    // (modulus < 2, base outside [1,62], paper-figure variant with base != 3,
    // empty explicit term list).
    void validate() const;

    // Canonical family name: "positive-integers", "fibonacci", "modulo-k",
    // "set-sequence", "linear-jaco", "explicit".
    std::string family_name() const;
};

// a_i (1-based). Exact: throws std::overflow_error when the true value does
// not fit 64 bits (Fibonacci index >= 94, linear-jaco index beyond the range
// where 5(i+1)^2 fits), std::out_of_range past the end of an explicit list,
// std::invalid_argument for i = 0.
std::uint64_t sequence_term(const SequenceSpec& spec, std::uint64_t i);

// a_1..a_n as a 0-based vector (result[0] = a_1). Same error behavior as
// sequence_term.
std::vector<std::uint64_t> sequence_prefix(const SequenceSpec& spec, std::uint64_t n);

// Like sequence_prefix but clamps unrepresentable terms to 2^64-1 instead of
// throwing. Graph construction uses this: the arc rule only ever needs
// min(i + a_i, n), which the clamp preserves exactly.
std::vector<std::uint64_t> sequence_prefix_saturating(const SequenceSpec& spec,
                                                      std::uint64_t n);

// The idx-th non-empty subset of {1..base} (idx is 1-based): all 1-element
// subsets in ascending order, then 2-element subsets lexicographically, and
// so on up to the full set. Elements are returned ascending.
std::vector<std::uint64_t> subset_at(std::uint64_t base, std::uint64_t idx);

// floor(sqrt(x)).
std::uint64_t isqrt(std::uint64_t x);

// Reads an explicit sequence: one non-negative integer per line; blank lines
// and lines starting with '#' are ignored. Throws std::invalid_argument on
// malformed input (with the line number) or if no terms are present.
SequenceSpec load_explicit_sequence(std::istream& in);
SequenceSpec load_explicit_sequence_file(const std::string& path);

}  // namespace jaco
