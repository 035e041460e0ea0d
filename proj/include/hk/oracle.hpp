// Brute-force colength oracle on the monomial side.
//
// The section ring of (F_a, cD1 + dD4) has a monomial basis in degree m
// given by the lattice points of the dilated polygon
//   P_m = { (x, y) : 0 <= y <= md, -mc <= x <= a y }.
// For q a power of the characteristic, the q-th Frobenius power of the
// irrelevant ideal is monomial, so the colength splits degree by degree:
//   len(R / m^{[q]}) = sum_{m<q} |P_m| + sum_{m>=0} |P_{m+q} \ S_m|,
// with S_m = { q u + v : u in P_1, v in P_m } the monomials reachable from
// the q-th powers of the degree-one generators.
//
// Nothing here uses the summand-class machinery, so agreement with the
// enumeration tier is genuine two-sided evidence.

#pragma once

#include <utility>
#include <vector>

#include "hk/exact.hpp"

namespace hk {

// All lattice points of P_m, sorted lexicographically by (y, x).
std::vector<std::pair<i64, i64>> polytope_points(i64 a, i64 c, i64 d, i64 m);

// |P_m| by summing row lengths (independent of the closed count formula).
Int polytope_count(i64 a, i64 c, i64 d, i64 m);

// len(R / m^{[q]}) for q = p^n.  Throws std::invalid_argument when p is not
// prime or q is not a power of p (the monomial reduction needs Frobenius
// linearity, which holds only in characteristic p with q = p^n).
//
// The degree sum stops once the per-degree difference has been empty twice
// in a row at or past ceil(q/min(c,d)); with HK_ORACLE_DEBUG=1 it keeps
// scanning to twice that cutoff and checks every later term is zero.
Int hk_colength(i64 a, i64 c, i64 d, i64 q, i64 p);

}  // namespace hk
