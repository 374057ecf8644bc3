#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <quadmath.h>

#include <sstream>
#include <stdexcept>

#include "jaco/checked.hpp"
#include "jaco/sequence.hpp"

using namespace jaco;

TEST_CASE("positive integers: a_i = i") {
    const auto s = SequenceSpec::positive_integers();
    CHECK(sequence_term(s, 1) == 1);
    CHECK(sequence_term(s, 7) == 7);
    CHECK(sequence_term(s, 1'000'000) == 1'000'000);
    CHECK(sequence_prefix(s, 5) == std::vector<std::uint64_t>{1, 2, 3, 4, 5});
}

TEST_CASE("fibonacci: classic prefix and the 64-bit ceiling") {
    const auto s = SequenceSpec::fibonacci();
    const std::vector<std::uint64_t> first12 = {1,  1,  2,  3,  5,  8,
                                                13, 21, 34, 55, 89, 144};
    CHECK(sequence_prefix(s, 12) == first12);
    // last exactly representable term
    CHECK(sequence_term(s, 93) == 12200160415121876738ULL);
    CHECK_THROWS_AS((void)sequence_term(s, 94), std::overflow_error);
    CHECK_THROWS_AS((void)sequence_prefix(s, 94), std::overflow_error);

    SUBCASE("saturating prefix clamps instead of throwing") {
        const auto p = sequence_prefix_saturating(s, 96);
        CHECK(p[92] == 12200160415121876738ULL);
        CHECK(p[93] == kU64Max);
        CHECK(p[94] == kU64Max);
        CHECK(p[95] == kU64Max);
    }
}

TEST_CASE("modulo-k") {
    const auto s = SequenceSpec::modulo(5);
    CHECK(sequence_term(s, 12) == 2);
    CHECK(sequence_term(s, 5) == 0);
    CHECK(sequence_term(s, 10) == 0);
    CHECK(sequence_term(s, 4) == 4);
    CHECK_THROWS_AS((void)sequence_term(SequenceSpec::modulo(1), 3),
                    std::invalid_argument);
}

TEST_CASE("set-sequence, definitional: subset sums with period 2^base - 1") {
    const auto s = SequenceSpec::set_sequence(3);
    CHECK(sequence_prefix(s, 7) ==
          std::vector<std::uint64_t>{1, 2, 3, 3, 4, 5, 6});
    CHECK(sequence_term(s, 5) == 4);   // subset {1,3}
    CHECK(sequence_term(s, 9) == 2);   // wraps to subset {2}
    CHECK(sequence_term(s, 8) == sequence_term(s, 1));
    CHECK(sequence_term(s, 7 * 1000 + 4) == 3);

    SUBCASE("base 1 degenerates to the constant 1") {
        const auto one = SequenceSpec::set_sequence(1);
        CHECK(sequence_term(one, 1) == 1);
        CHECK(sequence_term(one, 17) == 1);
    }
}

TEST_CASE("set-sequence, paper-figure flavour") {
    const auto s = SequenceSpec::set_sequence(3, SetVariant::PaperFigure);
    CHECK(sequence_prefix(s, 7) ==
          std::vector<std::uint64_t>{1, 2, 3, 4, 4, 5, 6});
    CHECK(sequence_term(s, 4) == 4);   // differs from the subset sum 3
    CHECK(sequence_term(s, 11) == 4);  // periodic
    // that flavour is tied to base 3
    CHECK_THROWS_AS((void)sequence_term(
                        SequenceSpec::set_sequence(4, SetVariant::PaperFigure), 1),
                    std::invalid_argument);
}

TEST_CASE("subset_at: cardinality-then-lex unranking") {
    CHECK(subset_at(3, 1) == std::vector<std::uint64_t>{1});
    CHECK(subset_at(3, 3) == std::vector<std::uint64_t>{3});
    CHECK(subset_at(3, 4) == std::vector<std::uint64_t>{1, 2});
    CHECK(subset_at(3, 5) == std::vector<std::uint64_t>{1, 3});
    CHECK(subset_at(3, 7) == std::vector<std::uint64_t>{1, 2, 3});

    SUBCASE("bijection and ordering for small bases") {
        for (std::uint64_t base = 1; base <= 5; ++base) {
            std::vector<std::vector<std::uint64_t>> all;
            for (std::uint64_t idx = 1; idx < (1ULL << base); ++idx) {
                auto sub = subset_at(base, idx);
                REQUIRE(!sub.empty());
                REQUIRE(std::is_sorted(sub.begin(), sub.end()));
                REQUIRE(sub.back() <= base);
                if (!all.empty()) {
                    const auto& prev = all.back();
                    const bool ordered =
                        prev.size() < sub.size() ||
                        (prev.size() == sub.size() && prev < sub);
                    REQUIRE(ordered);
                }
                all.push_back(std::move(sub));
            }
            CHECK(all.size() == (1ULL << base) - 1);
        }
    }
}

TEST_CASE("linear-jaco: golden-ratio floor via integer arithmetic") {
    const auto s = SequenceSpec::linear_jaco();
    CHECK(sequence_term(s, 1) == 1);
    CHECK(sequence_term(s, 5) == 3);
    CHECK(sequence_term(s, 10) == 6);

    SUBCASE("agrees with a 128-bit float evaluation over a long range") {
        const __float128 denom = static_cast<__float128>(3) +
                                 sqrtq(static_cast<__float128>(5));
        for (std::uint64_t i = 1; i <= 1'000'000; ++i) {
            const __float128 q =
                static_cast<__float128>(2) * static_cast<__float128>(i + 1) / denom;
            const std::uint64_t expect =
                i - static_cast<std::uint64_t>(floorq(q));
            if (sequence_term(s, i) != expect) {
                CAPTURE(i);
                REQUIRE(sequence_term(s, i) == expect);
            }
        }
        CHECK(true);
    }

    SUBCASE("terms never exceed the non-decreasing envelope") {
        std::uint64_t prev = 0;
        for (std::uint64_t i = 1; i <= 2000; ++i) {
            const auto a = sequence_term(s, i);
            CHECK(a >= prev);  // non-decreasing
            CHECK(a <= i);
            // a_i tracks i / phi^2-complement: roughly 0.618 i
            CHECK(100 * a + 100 >= 61 * i);
            CHECK(100 * a <= 62 * i + 100);
            prev = a;
        }
    }
}

TEST_CASE("isqrt") {
    CHECK(isqrt(0) == 0);
    CHECK(isqrt(1) == 1);
    CHECK(isqrt(24) == 4);
    CHECK(isqrt(25) == 5);
    CHECK(isqrt(26) == 5);
    const std::uint64_t big = 4294967295ULL;  // 2^32 - 1
    CHECK(isqrt(big * big) == big);
    CHECK(isqrt(big * big + 2 * big) == big);  // one less than (2^32)^2
    CHECK(isqrt(kU64Max) == big);
}

TEST_CASE("index validation") {
    CHECK_THROWS_AS((void)sequence_term(SequenceSpec::positive_integers(), 0),
                    std::invalid_argument);
    const auto ex = SequenceSpec::explicit_terms({4, 1, 3});
    CHECK(sequence_term(ex, 3) == 3);
    CHECK_THROWS_AS((void)sequence_term(ex, 4), std::out_of_range);
    CHECK_THROWS_AS(SequenceSpec::explicit_terms({}).validate(),
                    std::invalid_argument);
}

TEST_CASE("explicit sequence loader") {
    SUBCASE("comments, blanks and surrounding whitespace") {
        std::istringstream in("# header\n5\n\n  8  \n# mid\n13\r\n");
        const auto spec = load_explicit_sequence(in);
        CHECK(spec.kind == Family::Explicit);
        CHECK(spec.terms == std::vector<std::uint64_t>{5, 8, 13});
    }
    SUBCASE("malformed token reports the line number") {
        std::istringstream in("5\nx7\n");
        try {
            (void)load_explicit_sequence(in);
            FAIL("expected invalid_argument");
        } catch (const std::invalid_argument& e) {
            CHECK(std::string(e.what()).find("line 2") != std::string::npos);
        }
    }
    SUBCASE("trailing junk on a line is rejected") {
        std::istringstream in("1 2\n");
        CHECK_THROWS_AS((void)load_explicit_sequence(in), std::invalid_argument);
    }
    SUBCASE("no terms at all") {
        std::istringstream in("# only comments\n\n");
        CHECK_THROWS_AS((void)load_explicit_sequence(in), std::invalid_argument);
    }
    SUBCASE("missing file") {
        CHECK_THROWS_AS((void)load_explicit_sequence_file("/nonexistent/seq.txt"),
                        std::invalid_argument);
    }
}

TEST_CASE("family names") {
    CHECK(SequenceSpec::positive_integers().family_name() == "positive-integers");
    CHECK(SequenceSpec::fibonacci().family_name() == "fibonacci");
    CHECK(SequenceSpec::modulo(5).family_name() == "modulo-k");
    CHECK(SequenceSpec::set_sequence(3).family_name() == "set-sequence");
    CHECK(SequenceSpec::linear_jaco().family_name() == "linear-jaco");
    CHECK(SequenceSpec::explicit_terms({1}).family_name() == "explicit");
}
