#include <doctest.h>

#include "hk/oracle.hpp"
#include "hk/toric.hpp"

using namespace hk;

TEST_CASE("divisor normalization") {
    CHECK(normalize_divisor(0, 0, 0, 0, 3) == DivisorClass{0, 0});
    CHECK(normalize_divisor(1, 1, 0, 0, 2) == DivisorClass{-1, 1});
    // principal divisors of characters normalize to zero
    for (i64 a = 1; a <= 4; ++a)
        for (i64 x = -3; x <= 3; ++x)
            for (i64 y = -3; y <= 3; ++y)
                CHECK(normalize_divisor(-x, -y, x - a * y, y, a) == DivisorClass{0, 0});
}

TEST_CASE("positivity tests") {
    CHECK(is_ample({1, 1}));
    CHECK(is_globally_generated({1, 1}));
    CHECK_FALSE(is_ample({0, 5}));
    CHECK(is_globally_generated({0, 5}));
    CHECK_FALSE(is_ample({-1, 2}));
    CHECK_FALSE(is_globally_generated({-1, 2}));
    CHECK_THROWS_AS(SurfaceBundle(0, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(SurfaceBundle(1, 0, 1), std::invalid_argument);
}

TEST_CASE("section counts") {
    CHECK(h0(1, {0, 0}) == 1);
    CHECK(h0(1, {1, 1}) == 5);
    CHECK(h0(2, {3, 2}) == 18);
    CHECK(h0(3, {5, -1}) == 0);
    CHECK(h0(2, {-3, 2}) == 2);  // only the j=2 summand survives
    // counts the lattice points of the dilated polygon
    for (i64 a = 1; a <= 3; ++a)
        for (i64 c = 1; c <= 3; ++c)
            for (i64 d = 1; d <= 3; ++d)
                for (i64 m = 0; m <= 50; ++m)
                    CHECK(h0(a, {m * c, m * d}) == polytope_count(a, c, d, m));
}

TEST_CASE("summand class examples") {
    CHECK(summand_class(1, 1, 1, 1, 5, 0, 0) == std::pair<i64, i64>{0, 0});
    CHECK(summand_class(1, 1, 1, 1, 5, 3, 2) == std::pair<i64, i64>{0, -1});
    CHECK(summand_class(2, 3, 1, 0, 4, 1, 3) == std::pair<i64, i64>{-1, -1});
    CHECK_THROWS_AS(summand_class(1, 1, 1, 1, 5, 5, 0), std::invalid_argument);
    CHECK_THROWS_AS(summand_class(1, 1, 1, 1, 5, 0, -1), std::invalid_argument);
}

TEST_CASE("decomposition at q = 1 is the identity") {
    for (i64 a = 1; a <= 3; ++a)
        for (i64 m : {0, 1, 5}) {
            auto classes = frobenius_decompose(a, 2, 3, m, 1);
            REQUIRE(classes.size() == 1);
            CHECK(classes[0] == SummandClass{2 * m, 3 * m, 1});
        }
}

TEST_CASE("decomposition of the four characters at q = 2") {
    auto classes = frobenius_decompose(1, 1, 1, 1, 2);
    REQUIRE(classes.size() == 2);
    CHECK(classes[0] == SummandClass{0, 0, 3});
    CHECK(classes[1] == SummandClass{1, 0, 1});
}

TEST_CASE("segment decomposition agrees with the full scan") {
    for (i64 a = 1; a <= 3; ++a)
        for (i64 c = 1; c <= 3; ++c)
            for (i64 d = 1; d <= 3; ++d)
                for (i64 m : {0, 1, 2, 3, 7})
                    for (i64 q : {1, 2, 3, 4, 5, 8, 9, 16}) {
                        auto fast = frobenius_decompose(a, c, d, m, q);
                        auto naive = frobenius_decompose_naive(a, c, d, m, q);
                        REQUIRE(fast == naive);
                    }
}

TEST_CASE("multiplicities partition q^2 and classes respect the range bounds") {
    for (i64 a = 1; a <= 3; ++a)
        for (i64 c = 1; c <= 4; ++c)
            for (i64 d = 1; d <= 4; ++d)
                for (i64 m : {0, 1, 2, 5, 9})
                    for (i64 q : {2, 4, 7, 9, 27}) {
                        auto classes = frobenius_decompose(a, c, d, m, q);
                        i64 total = 0;
                        const i64 t = floor_div(m * c, q);
                        for (const auto& sc : classes) {
                            total += sc.multiplicity;
                            CHECK(sc.alpha >= t - 1);
                            CHECK(sc.alpha <= t + a);
                            CHECK(sc.beta >= -1);
                            CHECK(sc.beta <= floor_div(m * d, q));
                        }
                        CHECK(total == q * q);
                    }
}

TEST_CASE("high twist keeps alpha within one of t") {
    const i64 t = 3;  // m*c/q = 6/2
    for (const auto& sc : frobenius_decompose(1, 2, 1, 3, 2)) {
        CHECK(sc.alpha >= t - 1);
        CHECK(sc.alpha <= t + 1);
    }
}
