// Closed-form Hilbert-Kunz quasi-polynomial.
//
// For fixed (a, c, d) the Hilbert-Kunz value is a cubic in q whose two top
// coefficients depend on (a, c, d) alone and whose lower coefficients are
// periodic in q through the ceiling defects of q against a, c, d and ad+c.
// hk_closed assembles all four coefficients exactly; the q^3 coefficient is
// the Hilbert-Kunz multiplicity.
//
// Two subterm families admit a shorter "compact" transcription that is only
// valid on part of the parameter space (see closed_form_variants): the
// defect-window sums collapse to an M1-based display only when the window
// {delta_i} is the unwrapped progression delta0 + i/a1, and one compact q^2
// display drops a factor 1/c.  The assembly below always uses the generally
// valid forms; closed_form_variants reports where the compact ones deviate.

#pragma once

#include <string>
#include <vector>

#include "hk/enumeration.hpp"
#include "hk/exact.hpp"
#include "hk/periodic.hpp"
#include "hk/toric.hpp"

namespace hk {

struct HKClosedForm {
    SurfaceBundle params;
    i64 q = 0;
    PeriodicConstants pc;
    Rat coeff_q3;  // depends on (a, c, d) only
    Rat coeff_q2;  // depends on (a, c, d) only
    Rat coeff_q1;  // also involves eps2 and the defect window (and eps0_bar when c < d)
    Rat coeff_q0;  // involves all periodic constants
    Int value;     // coeff_q3 q^3 + coeff_q2 q^2 + coeff_q1 q + coeff_q0
};

// Defect-window sums over m-ranges of the cokernel count:
//   part1 = sum_{m=ceil(q/(c+ad))}^{ceil(q/c)-1} (a/2 delta_m^2 + (1-a/2) delta_m - 1)
//   part2 = sum_{m=ceil((a+1)q/(c+ad))}^{ceil(q/c)-1} (-a/2 delta_m^2 + (a/2-1) delta_m)
// computed exactly by splitting each prefix into full periods plus a partial
// window (delta has period a1).  Empty ranges yield 0.
std::pair<Rat, Rat> defect_window_sums(i64 a, i64 c, i64 d, i64 q, const PeriodicConstants& pc);

// The compact M1-based display of the same two sums.  Valid exactly when the
// defect window does not wrap mod 1 (delta0 < 1/a1); kept for cross-checks.
std::pair<Rat, Rat> defect_window_sums_compact(i64 a, i64 c, i64 d, i64 q, const PeriodicConstants& pc);

// Cubic closed form for the full cokernel series
//   sum_m [beta=-1 strip weight] + (d+1)(c+ad/2) sum_m [alpha=-1 counts, beta>=0 ranges]
// which is the entire sum_m dim coker Phi_m when c >= d and the base part of it
// when c < d.  Equals the definitional triple sum for every (a, c, d, q).
Rat coker_series_base(i64 a, i64 c, i64 d, i64 q, const PeriodicConstants& pc);

// Cubic closed form for the c < d tail
//   -(dc + d(d+1)a/2) * sum_m [alpha=-1, beta>=1 counts over their two ranges];
// identically zero at c = d.  Only meaningful for c <= d.
Rat coker_series_tail(i64 a, i64 c, i64 d, i64 q, const PeriodicConstants& pc);

// The assembled quasi-polynomial at scale q >= 2.  Throws
// internal_inconsistency (naming the subterm) if any assembled piece fails
// integrality.
HKClosedForm hk_closed(i64 a, i64 c, i64 d, i64 q);

// Hilbert-Kunz multiplicity: the exact q^3 coefficient.
Rat ehk(i64 a, i64 c, i64 d);

// One compact-transcription deviation at (a, c, d, q).
struct VariantDeviation {
    std::string subterm;
    Rat compact;
    Rat exact;
};

// Evaluates every compact variant against the generally valid form and
// returns the ones that deviate (empty when all agree).
std::vector<VariantDeviation> closed_form_variants(i64 a, i64 c, i64 d, i64 q);

// Quasi-polynomial residual probe.  Computes HK(p^n) on the enumeration
// tier for n = 1..n_max, subtracts the q^3 and q^2 closed-form terms, and
// checks that the leftover equals coeff_q1 * q + coeff_q0 and that those two
// coefficients repeat whenever q mod lcm(a, c, d, ad+c) repeats.
struct ProbeSample {
    i64 n = 0;
    i64 q = 0;
    i64 residue = 0;  // q mod lcm(a, c, d, ad+c)
    Int hk;
    Rat coeff_q1;
    Rat coeff_q0;
};

struct ProbeReport {
    SurfaceBundle params;
    i64 p = 0;
    i64 n_max = 0;
    i64 modulus = 0;          // lcm(a, c, d, ad+c)
    i64 detected_period = 0;  // 0 when no period is visible in the sample
    i64 repeat_pairs = 0;     // number of sample pairs with equal residue
    std::vector<ProbeSample> samples;
    std::vector<std::string> violations;  // empty on success
};

ProbeReport quasipoly_probe(i64 a, i64 c, i64 d, i64 p, i64 n_max);

std::string probe_to_text(const ProbeReport& report);

}  // namespace hk
