#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <stdexcept>

#include "jaco/census.hpp"
#include "jaco/checked.hpp"
#include "jaco/pascal.hpp"

using namespace jaco;

TEST_CASE("binomial coefficients") {
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(10, 0) == 1);
    CHECK(binomial(10, 10) == 1);
    CHECK(binomial(3, 5) == 0);
    CHECK(binomial(52, 5) == 2598960);
    CHECK(binomial(64, 32) == 1832624140942590534ULL);
    CHECK_THROWS_AS((void)binomial(68, 34), std::overflow_error);

    SUBCASE("addition rule across a block of the triangle") {
        for (std::uint64_t n = 1; n <= 40; ++n)
            for (std::uint64_t k = 1; k <= n; ++k)
                REQUIRE(binomial(n, k) ==
                        binomial(n - 1, k - 1) + binomial(n - 1, k));
    }
}

TEST_CASE("census totals of complete graphs") {
    CHECK(total_cliques(1) == 1);
    CHECK(total_cliques(3) == 7);
    CHECK(total_cliques(10) == 1023);
    CHECK(total_cliques(63) == kU64Max / 2);
    CHECK_THROWS_AS((void)total_cliques(0), std::invalid_argument);
    CHECK_THROWS_AS((void)total_cliques(64), std::overflow_error);
    CHECK(eta_complete(10, 3) == 120);
    CHECK_THROWS_AS((void)eta_complete(10, 0), std::invalid_argument);
}

TEST_CASE("clique matrix and its inverse") {
    const auto a = clique_matrix(5);
    CHECK(a.dim() == 5);
    CHECK(a.at(4, 2) == 6);
    CHECK(a.at(5, 5) == 1);
    CHECK(a.at(2, 4) == 0);
    CHECK(a.at(5, 1) == 5);

    const auto b = clique_matrix_inverse(5);
    CHECK(b.at(4, 1) == -4);
    CHECK(b.at(4, 2) == 6);
    CHECK(b.at(4, 3) == -4);
    CHECK(b.at(4, 4) == 1);
    CHECK(b.at(5, 1) == 5);

    SUBCASE("index validation") {
        CHECK_THROWS_AS((void)a.at(0, 1), std::out_of_range);
        CHECK_THROWS_AS((void)a.at(1, 6), std::out_of_range);
        CHECK_THROWS_AS((void)clique_matrix(0), std::invalid_argument);
        CHECK_THROWS_AS((void)clique_matrix(65), std::overflow_error);
    }

    SUBCASE("mutual inverses for every small dimension") {
        for (std::uint64_t n = 1; n <= 10; ++n) {
            const auto m = clique_matrix(n);
            const auto inv = clique_matrix_inverse(n);
            CHECK(is_identity(multiply(m, inv)));
            CHECK(is_identity(multiply(inv, m)));
        }
        CHECK_FALSE(is_identity(clique_matrix(3)));
    }

    SUBCASE("csv layout") {
        CHECK(clique_matrix(3).to_csv() == "1,0,0\n2,1,0\n3,3,1\n");
        CHECK(clique_matrix_inverse(3).to_csv() == "1,0,0\n-2,1,0\n3,-3,1\n");
    }
}

TEST_CASE("join recurrence on censuses") {
    SUBCASE("K_2 to K_3") {
        const CliqueCensus c2(2, {2, 1});
        const auto c3 = join_census(c2);
        CHECK(c3.order() == 3);
        CHECK(c3.counts() == std::vector<std::uint64_t>{3, 3, 1});
    }
    SUBCASE("a worked non-complete census") {
        const CliqueCensus j8(8, {8, 16, 14, 6, 1});
        const auto joined = join_census(j8);
        CHECK(joined.counts() ==
              std::vector<std::uint64_t>{9, 24, 30, 20, 7, 1});
    }
    SUBCASE("edgeless pair becomes a star") {
        const CliqueCensus bar(2, {2});
        CHECK(join_census(bar).counts() == std::vector<std::uint64_t>{3, 2});
    }
    SUBCASE("iterating from a single vertex walks the binomial rows") {
        CliqueCensus c(1, {1});
        for (std::uint64_t n = 2; n <= 20; ++n) {
            c = join_census(c);
            for (std::uint64_t l = 1; l <= n; ++l)
                REQUIRE(c.count(l) == binomial(n, l));
        }
    }
}

TEST_CASE("closed-form clique degrees of complete graphs") {
    CHECK(complete_clique_degree(8, 3) == 21);
    CHECK(complete_clique_degree(8, 1) == 1);
    CHECK(complete_clique_degree(8, 8) == 1);
    CHECK(complete_clique_degree(1, 1) == 1);
    CHECK_THROWS_AS((void)complete_clique_degree(3, 0), std::invalid_argument);
    CHECK_THROWS_AS((void)complete_clique_degree(3, 4), std::invalid_argument);
}

TEST_CASE("sizes attaining the maximum clique degree") {
    CHECK(max_degree_clique_sizes(1) == std::vector<std::uint64_t>{1});
    CHECK(max_degree_clique_sizes(2) == std::vector<std::uint64_t>{1, 2});
    CHECK(max_degree_clique_sizes(6) == std::vector<std::uint64_t>{3, 4});
    CHECK(max_degree_clique_sizes(7) == std::vector<std::uint64_t>{4});

    SUBCASE("matches a direct scan of the degree row") {
        for (std::uint64_t n = 1; n <= 30; ++n) {
            std::uint64_t peak = 0;
            for (std::uint64_t l = 1; l <= n; ++l)
                peak = std::max(peak, complete_clique_degree(n, l));
            std::vector<std::uint64_t> argmax;
            for (std::uint64_t l = 1; l <= n; ++l)
                if (complete_clique_degree(n, l) == peak) argmax.push_back(l);
            REQUIRE(argmax == max_degree_clique_sizes(n));
        }
    }
}

TEST_CASE("census container behavior") {
    SUBCASE("trailing zeros are trimmed") {
        const CliqueCensus c(4, {4, 3, 0, 0});
        CHECK(c.omega() == 2);
        CHECK(c.count(2) == 3);
        CHECK(c.count(3) == 0);
        CHECK(c.count(0) == 1);
        CHECK(c.total() == 7);
    }
    SUBCASE("equality ignores the presentation flag") {
        CliqueCensus a(3, {3, 2}), b(3, {3, 2}, true);
        CHECK(a == b);
        CHECK(a.to_csv() == "l,count\n1,3\n2,2\n");
        CHECK(b.to_csv() == "l,count\n0,1\n1,3\n2,2\n");
    }
    SUBCASE("degree table bounds") {
        CliqueDegreeTable t(3, 2);
        t.cell(2, 1) = 7;
        CHECK(t.at(2, 1) == 7);
        CHECK(t.at(1, 5) == 0);  // beyond omega reads as zero
        CHECK_THROWS_AS((void)t.at(0, 1), std::out_of_range);
        CHECK_THROWS_AS((void)t.at(4, 1), std::out_of_range);
        CHECK_THROWS_AS((void)t.at(1, 0), std::out_of_range);
    }
}
