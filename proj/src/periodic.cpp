#include "hk/periodic.hpp"

#include <numeric>

namespace hk {

Rat PeriodicConstants::prefix_delta(i64 k) const {
    Rat s;
    for (i64 i = 0; i <= k; ++i) s += delta_window[static_cast<size_t>(i)];
    return s;
}

Rat PeriodicConstants::prefix_delta_sq(i64 k) const {
    Rat s;
    for (i64 i = 0; i <= k; ++i) {
        const Rat& d = delta_window[static_cast<size_t>(i)];
        s += d * d;
    }
    return s;
}

Rat PeriodicConstants::m1_exact(i64 a) const {
    return rat(a, 2) * window_sum_sq() + (1 - rat(a, 2)) * window_sum();
}

Rat delta_defect(i64 a, i64 c, i64 q, i64 m) {
    return ceil_defect(q - m * c, a);
}

namespace {

// (x/den + (e-1)/a1) with e the defect of x against den equals
// (ceil(x/den) - 1)/a1; its floor times a1 subtracted from ceil(x/den)-1
// is the residue used for the partial window sums.
i64 window_residue(i64 x, i64 den, i64 a1, const Rat& eps, const char* name) {
    Rat closed = rat(x, den) + eps - 1 - Rat(floor_div(ceil_div(x, den) - 1, a1)) * a1;
    Int v = to_integer(closed, name);
    i64 res = static_cast<i64>(v.get_si());
    i64 direct = ((ceil_div(x, den) - 1) % a1 + a1) % a1;
    if (res != direct || res < 0 || res >= a1)
        throw internal_inconsistency(std::string(name) + " outside [0, a1)");
    return res;
}

}  // namespace

PeriodicConstants periodic_constants(i64 a, i64 c, i64 d, i64 q) {
    if (a < 1 || c < 1 || d < 1 || q < 1)
        throw std::invalid_argument("periodic_constants: a, c, d, q must be >= 1");
    PeriodicConstants pc;
    const i64 D = a * d + c;
    pc.eps0 = ceil_defect(q, D);
    pc.eps0_bar = ceil_defect((a + 1) * q, D);
    pc.eps1 = ceil_defect(q, c);
    pc.eps2 = ceil_defect(q, d);
    pc.delta0 = ceil_defect(q, a);
    pc.a1 = a / std::gcd(a, c);
    pc.Delta0 = window_residue(q, c, pc.a1, pc.eps1, "Delta0");
    pc.Delta1 = window_residue(q, D, pc.a1, pc.eps0, "Delta1");
    pc.Delta2 = window_residue((a + 1) * q, D, pc.a1, pc.eps0_bar, "Delta2");
    pc.M1 = rat(a * pc.a1, 2) * pc.delta0 * pc.delta0 + pc.delta0 * rat(2 * pc.a1 - a, 2)
          + rat((pc.a1 - 1) * (6 * pc.a1 - a * pc.a1 - a), 12 * pc.a1);
    pc.delta_window.reserve(static_cast<size_t>(pc.a1));
    for (i64 m = 0; m < pc.a1; ++m)
        pc.delta_window.push_back(delta_defect(a, c, q, m));
    return pc;
}

PowerSums power_sums(i64 d, i64 q) {
    if (d < 1 || q < 1)
        throw std::invalid_argument("power_sums: d, q must be >= 1");
    const Rat e = ceil_defect(q, d);
    const Rat dd = rat(d), qq = rat(q);
    const Rat e2 = e * e, e3 = e * e * e;
    PowerSums ps;
    ps.ones = qq + dd * e;
    ps.md = qq * qq / 2 + qq * (dd * e - dd / 2) + (dd * dd * e2 / 2 - dd * dd * e / 2);
    ps.q_md = qq * qq / (2 * dd) + qq / 2 + dd * e * (1 - e) / 2;
    ps.d_qmd1 = qq * qq / 2 + qq * (dd / 2 - 1) - (dd * dd * e2 / 2 - dd * dd * e / 2 + dd * e);
    ps.m2d3 = qq * qq * qq / 3 + qq * qq * (dd * e - dd / 2)
            + qq * (dd * dd * e2 - dd * dd * e + dd * dd / 6)
            + (dd * dd * dd * e3 / 3 - dd * dd * dd * e2 / 2 + dd * dd * dd * e / 6);
    ps.d2m_qmd1 = qq * qq * qq / 6 - qq * qq / 2
                - qq * (dd * dd * e * (e - 1) / 2 + dd * dd / 6 + dd * e - dd / 2)
                - (dd * dd * e) * (e2 * dd / 3 - dd * e / 2 + dd / 6 + (e - 1) / 2);
    ps.qmd_sq = qq * qq * qq / (3 * dd) + qq * qq / 2 + qq * dd / 6
              + dd * dd * e * (e2 - rat(3, 2) * e + rat(1, 2)) / 3;
    return ps;
}

}  // namespace hk
