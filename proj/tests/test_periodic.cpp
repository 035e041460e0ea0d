#include <doctest.h>

#include <algorithm>

#include "hk/periodic.hpp"
#include "reference_scans.hpp"

using namespace hk;

TEST_CASE("power sums match their closed forms on [1,12] x [1,200]") {
    for (i64 d = 1; d <= 12; ++d) {
        for (i64 q = 1; q <= 200; ++q) {
            auto direct = testing::power_sums_direct(d, q);
            auto closed = power_sums(d, q).as_array();
            for (int i = 0; i < 7; ++i) REQUIRE(direct[i] == closed[i]);
        }
    }
}

TEST_CASE("power sum examples") {
    CHECK(power_sums(1, 5).ones == rat(5));  // defect vanishes, d*sum 1 = q
    auto ps = power_sums(3, 7).as_array();
    std::array<Rat, 7> expect{rat(9), rat(27), rat(12), rat(27), rat(135), rat(27), rat(66)};
    for (int i = 0; i < 7; ++i) CHECK(ps[i] == expect[i]);
    auto single = power_sums(5, 3).as_array();  // single term m = 0
    std::array<Rat, 7> expect1{rat(5), rat(0), rat(3), rat(10), rat(0), rat(0), rat(9)};
    for (int i = 0; i < 7; ++i) CHECK(single[i] == expect1[i]);
}

TEST_CASE("periodic constants degenerate as expected") {
    auto pc = periodic_constants(1, 1, 1, 4);
    CHECK(pc.delta0 == 0);
    CHECK(pc.Delta0 == 0);
    CHECK(pc.Delta1 == 0);
    CHECK(pc.Delta2 == 0);
    CHECK(pc.M1 == 0);
    CHECK(pc.a1 == 1);

    auto pc2 = periodic_constants(2, 4, 1, 8);  // a | c
    CHECK(pc2.a1 == 1);
    CHECK(pc2.Delta0 == 0);
    CHECK(pc2.Delta1 == 0);
    CHECK(pc2.Delta2 == 0);
}

TEST_CASE("periodic constants at (2,3,5,9)") {
    auto pc = periodic_constants(2, 3, 5, 9);
    CHECK(pc.eps0 == rat(4, 13));
    CHECK(pc.eps0_bar == rat(12, 13));
    CHECK(pc.eps1 == 0);
    CHECK(pc.eps2 == rat(1, 5));
    CHECK(pc.delta0 == rat(1, 2));
    CHECK(pc.a1 == 2);
    CHECK(pc.Delta0 == 0);
    CHECK(pc.Delta1 == 0);
    CHECK(pc.Delta2 == 0);
    CHECK(pc.M1 == rat(5, 4));
    REQUIRE(pc.delta_window.size() == 2);
    CHECK(pc.delta_window[0] == rat(1, 2));
    CHECK(pc.delta_window[1] == 0);
}

TEST_CASE("defects stay in [0,1) and the window is computed by definition") {
    for (i64 a = 1; a <= 4; ++a)
        for (i64 c = 1; c <= 4; ++c)
            for (i64 d = 1; d <= 4; ++d)
                for (i64 q : {2, 3, 5, 8, 9, 16, 27}) {
                    auto pc = periodic_constants(a, c, d, q);
                    for (const Rat& e : {pc.eps0, pc.eps0_bar, pc.eps1, pc.eps2, pc.delta0}) {
                        CHECK(e >= 0);
                        CHECK(e < 1);
                    }
                    CHECK(pc.Delta0 < pc.a1);
                    CHECK(pc.Delta1 < pc.a1);
                    CHECK(pc.Delta2 < pc.a1);
                    REQUIRE(static_cast<i64>(pc.delta_window.size()) == pc.a1);
                    for (i64 m = 0; m < pc.a1; ++m)
                        CHECK(pc.delta_window[static_cast<size_t>(m)] == delta_defect(a, c, q, m));
                }
}

TEST_CASE("the defect window has period a1") {
    for (i64 a = 1; a <= 5; ++a)
        for (i64 c = 1; c <= 5; ++c)
            for (i64 q : {3, 4, 7, 16, 25})
                for (i64 m = 0; m <= 3 * a; ++m) {
                    i64 a1 = periodic_constants(a, c, 1, q).a1;
                    CHECK(delta_defect(a, c, q, m + a1) == delta_defect(a, c, q, m));
                }
}

// The window {delta_i} always equals {delta_min + i/a1} as a multiset, but
// delta0 itself is the minimum only when no value wraps past 1.  The short
// aggregate sum delta0*a1 + (a1-1)/2 is therefore valid exactly on the
// no-wrap locus delta0 < 1/a1; in general the minimum replaces delta0.
TEST_CASE("window aggregates: wraparound characterization") {
    bool saw_wrap = false;
    for (i64 a = 1; a <= 5; ++a)
        for (i64 c = 1; c <= 5; ++c)
            for (i64 q : {2, 3, 4, 5, 7, 8, 9, 16, 25, 27, 81}) {
                auto pc = periodic_constants(a, c, 1, q);
                Rat sum = pc.window_sum();
                Rat dmin = *std::min_element(pc.delta_window.begin(), pc.delta_window.end());
                CHECK(sum == dmin * pc.a1 + rat(pc.a1 - 1, 2));
                const bool no_wrap = pc.delta0 < rat(1, pc.a1);
                CHECK((sum == pc.delta0 * pc.a1 + rat(pc.a1 - 1, 2)) == no_wrap);
                CHECK((pc.m1_exact(a) == pc.M1) == no_wrap);
                if (!no_wrap) saw_wrap = true;
            }
    CHECK(saw_wrap);  // e.g. a=2, c=1, q=3
}
