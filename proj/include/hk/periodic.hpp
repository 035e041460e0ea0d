// Periodic constants and closed power sums.
//
// Every lower-order coefficient of the Hilbert-Kunz quasi-polynomial is
// built from ceiling defects of q against the denominators a, c, d, ad+c.
// This header bundles those defects (PeriodicConstants) and the closed
// forms for the basic sums over m = 0 .. ceil(q/d)-1 (PowerSums), both of
// which are exact for every positive integer q, prime power or not.

#pragma once

#include <array>
#include <vector>

#include "hk/exact.hpp"

namespace hk {

struct PeriodicConstants {
    Rat eps0;      // ceil(q/(ad+c)) - q/(ad+c)
    Rat eps0_bar;  // ceil((a+1)q/(ad+c)) - (a+1)q/(ad+c)
    Rat eps1;      // ceil(q/c) - q/c
    Rat eps2;      // ceil(q/d) - q/d
    Rat delta0;    // ceil(q/a) - q/a
    i64 a1 = 1;    // a / gcd(a, c); the period of m -> delta_m
    i64 Delta0 = 0;  // (ceil(q/c) - 1) mod a1
    i64 Delta1 = 0;  // (ceil(q/(ad+c)) - 1) mod a1
    i64 Delta2 = 0;  // (ceil((a+1)q/(ad+c)) - 1) mod a1
    Rat M1;        // a*a1*delta0^2/2 + delta0(2a1-a)/2 + (a1-1)(6a1-a*a1-a)/(12a1)
    std::vector<Rat> delta_window;  // delta_m = ceil((q-mc)/a) - (q-mc)/a, m = 0..a1-1

    // Partial sums over the defect window; k in [-1, a1-1].
    Rat prefix_delta(i64 k) const;
    Rat prefix_delta_sq(i64 k) const;
    Rat window_sum() const { return prefix_delta(a1 - 1); }
    Rat window_sum_sq() const { return prefix_delta_sq(a1 - 1); }

    // (a/2) sum delta_i^2 + (1 - a/2) sum delta_i over the actual window.
    // Coincides with M1 exactly when the window is the unwrapped arithmetic
    // progression delta0 + i/a1, i.e. when delta0 < 1/a1; see periodic.cpp.
    Rat m1_exact(i64 a) const;
};

// All constants for the surface/bundle (a, c, d) at scale q.
// Preconditions a, c, d, q >= 1; throws std::invalid_argument otherwise.
PeriodicConstants periodic_constants(i64 a, i64 c, i64 d, i64 q);

// delta_m for arbitrary m >= 0, by definition (not via the window).
Rat delta_defect(i64 a, i64 c, i64 q, i64 m);

// The seven basic sums over m = 0 .. ceil(q/d)-1, via their closed forms:
//   d*sum 1, d*sum md, sum (q-md), sum d(q-md-1),
//   sum m^2 d^3, sum d^2 m(q-md-1), sum (q-md)^2.
// Substituting (d, q) -> (c+ad, (a+1)q) yields the sums needed on the
// wider range m = 0 .. ceil((a+1)q/(c+ad))-1.
struct PowerSums {
    Rat ones;       // d * sum 1            = q + d e
    Rat md;         // d * sum md           (e = ceil(q/d) - q/d)
    Rat q_md;       // sum (q - md)
    Rat d_qmd1;     // sum d(q - md - 1)
    Rat m2d3;       // sum m^2 d^3
    Rat d2m_qmd1;   // sum d^2 m (q - md - 1)
    Rat qmd_sq;     // sum (q - md)^2

    std::array<Rat, 7> as_array() const {
        return {ones, md, q_md, d_qmd1, m2d3, d2m_qmd1, qmd_sq};
    }
};

PowerSums power_sums(i64 d, i64 q);

}  // namespace hk
