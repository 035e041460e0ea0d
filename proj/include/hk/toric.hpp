// The Hirzebruch surface F_a as a toric/ruled surface.
//
// Divisor classes are written against the two Picard generators D1 (fiber)
// and D4 (relative hyperplane).  A class alpha*D1 + beta*D4 is ample iff
// alpha, beta > 0 and globally generated iff alpha, beta >= 0.  The q-power
// Frobenius pushforward of O(m(cD1+dD4)) splits into line bundles indexed
// by the q^2 characters (a1, a2) in [0,q)^2; frobenius_decompose groups the
// characters by their summand class.

#pragma once

#include <utility>
#include <vector>

#include "hk/exact.hpp"

namespace hk {

// The surface F_a together with the ample bundle c*D1 + d*D4.
struct SurfaceBundle {
    i64 a, c, d;
    SurfaceBundle(i64 a_, i64 c_, i64 d_) : a(a_), c(c_), d(d_) {
        if (a < 1) throw std::invalid_argument("SurfaceBundle: a must be >= 1");
        if (c < 1 || d < 1)
            throw std::invalid_argument("SurfaceBundle: c, d must be >= 1 (ample)");
    }
};

struct DivisorClass {
    i64 alpha = 0;  // coefficient of D1
    i64 beta = 0;   // coefficient of D4
    friend bool operator==(const DivisorClass&, const DivisorClass&) = default;
};

// One Frobenius summand class with the number of characters mapping to it.
struct SummandClass {
    i64 alpha = 0;
    i64 beta = 0;
    i64 multiplicity = 0;
    friend bool operator==(const SummandClass&, const SummandClass&) = default;
};

// Reduce b1 D1 + b2 D2 + b3 D3 + b4 D4 to (b1 - a b2 + b3) D1 + (b2 + b4) D4.
DivisorClass normalize_divisor(i64 b1, i64 b2, i64 b3, i64 b4, i64 a);

inline bool is_ample(DivisorClass dc) { return dc.alpha > 0 && dc.beta > 0; }
inline bool is_globally_generated(DivisorClass dc) { return dc.alpha >= 0 && dc.beta >= 0; }

// dim H^0(F_a, O(alpha D1 + beta D4)) = sum_{j=0}^{beta} max(0, alpha + ja + 1),
// zero for beta < 0.  Negative classes are allowed.
Int h0(i64 a, DivisorClass dc);

// The summand class of the character (a1, a2):
//   alpha = floor((mc-a1)/q) + floor((a1-a*a2)/q) - a*floor(-a2/q)
//   beta  = floor(-a2/q) + floor((md+a2)/q)
// Floors are toward -infinity.  Requires 0 <= a1, a2 < q.
std::pair<i64, i64> summand_class(i64 a, i64 c, i64 d, i64 m, i64 q, i64 a1, i64 a2);

// Group all q^2 characters by summand class.  Multiplicities sum to q^2 and
// every class lies in t-1 <= alpha <= t+a, -1 <= beta <= floor(md/q) with
// t = floor(mc/q).  Output is sorted by (alpha, beta).
//
// The row-wise implementation uses that beta is constant and alpha is
// piecewise constant in a1 along each fixed-a2 row, so it runs in O(q)
// segments instead of O(q^2) points.  frobenius_decompose_naive scans all
// q^2 characters and is kept as a debug path.
std::vector<SummandClass> frobenius_decompose(i64 a, i64 c, i64 d, i64 m, i64 q);
std::vector<SummandClass> frobenius_decompose_naive(i64 a, i64 c, i64 d, i64 m, i64 q);

}  // namespace hk
