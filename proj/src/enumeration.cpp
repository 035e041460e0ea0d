#include "hk/enumeration.hpp"

#include <algorithm>
#include <cstdlib>

namespace hk {

std::string tier_name(Tier t) {
    switch (t) {
        case Tier::enumeration: return "enum";
        case Tier::oracle: return "oracle";
        case Tier::closed_form: return "closed";
    }
    return "?";
}

Int cokernel_dimension(i64 a, i64 c, i64 d, i64 alpha, i64 beta) {
    if (alpha < -1 || beta < -1)
        throw std::invalid_argument("cokernel_dimension: class outside the decomposition table");
    if (alpha >= 0 && beta >= 0) return 0;
    if (beta == -1) {
        // d(d-1)a is even, so this is integral
        return to_integer(rat(d) * (c + alpha + 1 + rat((d - 1) * a, 2)), "beta=-1 cokernel weight");
    }
    // alpha == -1 from here on
    if (beta == 0)
        return to_integer(rat(d + 1) * (c + rat(a * d, 2)), "alpha=-1, beta=0 cokernel weight");
    return c;  // alpha = -1, beta >= 1
}

CokerCensus coker_census(i64 a, i64 c, i64 d, i64 m, i64 q) {
    CokerCensus census;
    census.m = m;
    census.q = q;
    census.classes = frobenius_decompose(a, c, d, m, q);
    census.coker_total = 0;
    for (const auto& sc : census.classes)
        census.coker_total += Int(static_cast<long>(sc.multiplicity)) * cokernel_dimension(a, c, d, sc.alpha, sc.beta);
    return census;
}

Int coker_phi_m(i64 a, i64 c, i64 d, i64 m, i64 q) {
    return coker_census(a, c, d, m, q).coker_total;
}

Rat coker_weight_beta_neg1(i64 a, i64 c, i64 d, i64 m, i64 q) {
    if (q < 1) throw std::invalid_argument("coker_weight_beta_neg1: q must be >= 1");
    if (m * d >= q) return Rat(0);  // the beta = -1 strip is empty
    return rat(d) * (q - m * d - 1) * ((q + m) * (rat(c) + rat(a * d, 2)) + 1);
}

Int count_alpha_neg1_beta_ge0(i64 a, i64 c, i64 d, i64 m, i64 q) {
    if (q < 1) throw std::invalid_argument("count_alpha_neg1_beta_ge0: q must be >= 1");
    if (m * c >= q) return 0;                         // q/c <= m
    Rat v;
    if (m * (c + a * d) < q) {                        // m < q/(c+ad)
        v = rat(m * d + 1) * (q - m * c - 1 - rat(a * m * d, 2));
    } else {                                          // q/(c+ad) <= m < q/c
        const i64 t = ceil_div(q - m * c, a);
        v = rat(t) * (q - m * c - 1 - rat(a, 2) * (t - 1));
    }
    return to_integer(v, "alpha=-1, beta>=0 count");
}

Int count_alpha_neg1_beta_ge1(i64 a, i64 c, i64 d, i64 m, i64 q) {
    if (q < 1) throw std::invalid_argument("count_alpha_neg1_beta_ge1: q must be >= 1");
    if (c >= d) return 0;
    if (m * d < q) return 0;                          // m < q/d
    if (m * c >= q) return 0;                         // q/c <= m
    Rat v;
    if (m * (c + a * d) < (a + 1) * q) {              // q/d <= m < (a+1)q/(c+ad)
        v = rat(m * d - q + 1) * (q - m * c - 1 - rat(a, 2) * (m * d - q));
    } else {                                          // (a+1)q/(c+ad) <= m < q/c
        const i64 t = ceil_div(q - m * c, a);
        v = rat(t) * (q - m * c - 1 - rat(a, 2) * (t - 1));
    }
    return to_integer(v, "alpha=-1, beta>=1 count");
}

Int coker_phi_m_closed(i64 a, i64 c, i64 d, i64 m, i64 q) {
    Rat total = coker_weight_beta_neg1(a, c, d, m, q)
              + rat(d + 1) * (c + rat(a * d, 2)) * count_alpha_neg1_beta_ge0(a, c, d, m, q)
              - (rat(d) * c + rat(d * (d + 1) * a, 2)) * count_alpha_neg1_beta_ge1(a, c, d, m, q);
    return to_integer(total, "per-degree cokernel");
}

Int sum_sections(i64 a, i64 c, i64 d, i64 q) {
    if (q < 1) throw std::invalid_argument("sum_sections: q must be >= 1");
    const Rat cad = rat(c) + rat(a * d, 2);
    const Rat lin = rat(d) + c + rat(a * d, 2);
    Rat v = rat(q) * q * q * rat(d, 3) * cad
          + rat(q) * q * (-rat(d, 2) * cad + lin / 2)
          + rat(q) * (rat(d, 6) * cad - lin / 2 + 1);
    return to_integer(v, "section sum");
}

HKResult hilbert_kunz(i64 a, i64 c, i64 d, i64 q, HKStrategy strategy) {
    SurfaceBundle sb(a, c, d);
    if (q < 2) throw std::invalid_argument("hilbert_kunz: q must be >= 2");
    if (strategy == HKStrategy::automatic) {
        const char* dbg = std::getenv("HK_DEBUG_SCAN");
        strategy = (dbg && dbg[0] == '1') ? HKStrategy::scan : HKStrategy::formula;
    }
    auto per_degree = (strategy == HKStrategy::scan) ? coker_phi_m : coker_phi_m_closed;

    const i64 mstar = ceil_div(q, std::min(c, d));
    Int total = sum_sections(a, c, d, q);
    for (i64 m = 0; m < mstar; ++m) {
        Int term = per_degree(a, c, d, m, q);
        if (term < 0) throw internal_inconsistency("negative per-degree cokernel");
        total += term;
    }
    // cutoff guard: everything at and past M* must vanish
    if (per_degree(a, c, d, mstar, q) != 0 || per_degree(a, c, d, mstar + 1, q) != 0)
        throw internal_inconsistency("nonzero cokernel at or past the M* cutoff");
    return HKResult{sb, q, total, Tier::enumeration};
}

}  // namespace hk
