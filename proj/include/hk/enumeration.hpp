// Per-degree cokernel census and the Hilbert-Kunz function.
//
// In degree m + q the multiplication map R_1^{[q]} (x) R_m -> R_{m+q} has a
// cokernel whose dimension decomposes over the Frobenius summand classes.
// Classes with alpha >= 0, beta >= 0 contribute nothing; the only nonzero
// contributions come from the beta = -1 strip and the alpha = -1 column.
// Summing the per-degree cokernels and the first q section counts yields
// the Hilbert-Kunz value
//   HK(q) = sum_{m=0}^{q-1} h^0(m) + sum_{m>=0} dim coker Phi_m.
//
// Two interchangeable engines are provided: a closed-form path computing
// each per-degree cokernel in O(1) from the weighted class counts, and a
// scan path tallying the full character decomposition.  They are compared
// against each other and against the lattice-point oracle in the tests.

#pragma once

#include <string>
#include <vector>

#include "hk/exact.hpp"
#include "hk/periodic.hpp"
#include "hk/toric.hpp"

namespace hk {

enum class Tier { enumeration, oracle, closed_form };

std::string tier_name(Tier t);

struct HKResult {
    SurfaceBundle params;
    i64 q = 0;
    Int value;
    Tier tier = Tier::enumeration;
};

// Decomposition of the degree-m cokernel over summand classes.
struct CokerCensus {
    i64 m = 0;
    i64 q = 0;
    std::vector<SummandClass> classes;
    Int coker_total;  // sum multiplicity * cokernel_dimension
};

// dim coker of the class-(alpha, beta) component of the multiplication map:
//   d(c + alpha + 1 + (d-1)a/2)   if beta = -1, alpha >= -1
//   0                             if alpha >= 0, beta >= 0
//   (d+1)(c + ad/2)               if alpha = -1, beta = 0
//   c                             if alpha = -1, beta >= 1
// Inputs with alpha < -1 or beta < -1 never arise from the decomposition
// and are rejected with std::invalid_argument.
Int cokernel_dimension(i64 a, i64 c, i64 d, i64 alpha, i64 beta);

// Scan path: full decomposition of degree m, weighted by cokernel_dimension.
Int coker_phi_m(i64 a, i64 c, i64 d, i64 m, i64 q);
CokerCensus coker_census(i64 a, i64 c, i64 d, i64 m, i64 q);

// Closed-form path, degree m in O(1).  Equals coker_phi_m everywhere.
Int coker_phi_m_closed(i64 a, i64 c, i64 d, i64 m, i64 q);

// Total cokernel weight of the beta = -1 strip,
//   sum_alpha d(c + alpha + 1 + (d-1)a/2) |{characters of class (alpha,-1)}|,
// via its closed form: 0 for md >= q, else d(q-md-1)[(q+m)(c+ad/2)+1].
// Integer-valued.
Rat coker_weight_beta_neg1(i64 a, i64 c, i64 d, i64 m, i64 q);

// |{characters with class alpha = -1, beta >= 0}| via the three-case closed
// form, selecting by exact comparison of m against q/(c+ad) and q/c.
Int count_alpha_neg1_beta_ge0(i64 a, i64 c, i64 d, i64 m, i64 q);

// |{characters with class alpha = -1, beta >= 1}|.  Identically zero when
// c >= d; otherwise selected by comparing m against q/d, (a+1)q/(c+ad), q/c.
Int count_alpha_neg1_beta_ge1(i64 a, i64 c, i64 d, i64 m, i64 q);

// sum_{m=0}^{q-1} h^0(F_a, m(cD1+dD4)) via its cubic closed form.
Int sum_sections(i64 a, i64 c, i64 d, i64 q);

enum class HKStrategy {
    automatic,  // formula, unless env HK_DEBUG_SCAN=1 forces the scan path
    formula,
    scan,
};

// Hilbert-Kunz value at scale q >= 2.  The cokernel sum is truncated at
// M* = ceil(q/min(c,d)), past which every per-degree term vanishes; the
// terms at M* and M*+1 are recomputed and asserted to be zero as a guard
// against an off-by-one in that cutoff.
HKResult hilbert_kunz(i64 a, i64 c, i64 d, i64 q, HKStrategy strategy = HKStrategy::automatic);

}  // namespace hk
