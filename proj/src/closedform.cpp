#include "hk/closedform.hpp"

#include <numeric>
#include <sstream>

namespace hk {

namespace {

// Cubic in q with exact rational coefficients.  The lower coefficients may
// carry ceiling defects of q, which is what makes the total a
// quasi-polynomial rather than a polynomial.
struct Cubic {
    Rat k3, k2, k1, k0;

    Rat eval(i64 q) const {
        Rat qq = rat(q);
        return ((k3 * qq + k2) * qq + k1) * qq + k0;
    }
    Cubic& operator+=(const Cubic& o) {
        k3 += o.k3; k2 += o.k2; k1 += o.k1; k0 += o.k0;
        return *this;
    }
    Cubic& operator-=(const Cubic& o) {
        k3 -= o.k3; k2 -= o.k2; k1 -= o.k1; k0 -= o.k0;
        return *this;
    }
    friend Cubic operator+(Cubic l, const Cubic& r) { return l += r; }
    friend Cubic operator-(Cubic l, const Cubic& r) { return l -= r; }
    friend Cubic operator*(const Rat& s, const Cubic& o) {
        return {s * o.k3, s * o.k2, s * o.k1, s * o.k0};
    }
};

// sum_{m=0}^{ceil(mu q / x)-1} (mu q - m x) as a cubic in q.
Cubic linear_range_sum(i64 x, i64 mu, const Rat& eps) {
    return {Rat(0), rat(mu * mu, 2 * x), rat(mu, 2), rat(x) * eps * (1 - eps) / 2};
}

// sum_{m=0}^{ceil(mu q / x)-1} (mu q - m x)^2 as a cubic in q.
Cubic square_range_sum(i64 x, i64 mu, const Rat& eps) {
    return {rat(mu * mu * mu, 3 * x), rat(mu * mu, 2), rat(mu * x, 6),
            rat(x * x) * eps * (eps * eps - rat(3, 2) * eps + rat(1, 2)) / 3};
}

// sum d(q-md-1)(q+m) over m = 0..ceil(q/d)-1.
Cubic strip_weight_sum(i64 d, const Rat& e2) {
    Cubic cu;
    cu.k3 = rat(1, 2) + rat(1, 6 * d);
    cu.k2 = rat(d, 2) - 1 - rat(1, 2 * d);
    cu.k1 = rat(d + 1) * (-rat(d) * e2 * e2 / 2 + rat(d) * e2 / 2 - e2) + rat(1, 2) - rat(d, 6);
    cu.k0 = -(rat(d) * e2) * (rat(d) * e2 * e2 / 3 - rat(d) * e2 / 2 + rat(d, 6) + e2 / 2 - rat(1, 2));
    return cu;
}

// sum d(q-md-1) over m = 0..ceil(q/d)-1.
Cubic strip_count_sum(i64 d, const Rat& e2) {
    return {Rat(0), rat(1, 2), rat(d, 2) - 1,
            -(rat(d * d) * e2 * e2 / 2 - rat(d * d) * e2 / 2 + rat(d) * e2)};
}

// sum (q-md-1)(q-mc) over m = 0..ceil(q/d)-1, assembled from the basic sums
// (q^2-q) sum 1 - (qc+qd-c) sum m + cd sum m^2.  A compact display of this
// sum exists but deviates by c e2 (2d e2 - 2d + q)/(2d); see
// closed_form_variants.
Cubic degree_product_sum(i64 c, i64 d, const Rat& e2) {
    const Cubic count{Rat(0), Rat(0), rat(1, d), e2};                       // sum 1
    const Cubic sum_m{Rat(0), rat(1, 2 * d * d), e2 / d - rat(1, 2 * d),
                      (e2 * e2 - e2) / 2};                                  // sum m
    const Cubic sum_m2{rat(1, 3 * d * d * d), e2 / rat(d * d) - rat(1, 2 * d * d),
                       e2 * e2 / d - e2 / d + rat(1, 6 * d),
                       e2 * e2 * e2 / 3 - e2 * e2 / 2 + e2 / 6};            // sum m^2
    Cubic out;
    // (q^2 - q) * count
    out.k3 = count.k1;
    out.k2 = count.k0 - count.k1;
    out.k1 = -count.k0;
    // -(q(c+d) - c) * sum_m
    Cubic t = rat(-(c + d)) * sum_m;
    out.k3 += t.k2; out.k2 += t.k1; out.k1 += t.k0;
    out += rat(c) * sum_m;
    // + cd * sum_m2
    out += rat(c * d) * sum_m2;
    return out;
}

// Exact q-linear split of the two defect-window sums.  Prefix sums over
// [0, X] split into floor((X)/a1) full periods plus the partial window
// [0, X mod a1]; the full-period totals use the actual window values, not
// the unwrapped progression.
struct WindowCubics {
    Cubic part1;  // k1/k0 only
    Cubic part2;
    bool part2_range_valid = true;  // false when ceil((a+1)q/D) > ceil(q/c)
};

WindowCubics window_cubics(i64 a, i64 c, i64 d, i64 q, const PeriodicConstants& pc) {
    const i64 D = a * d + c;
    const i64 a1 = pc.a1;
    const Rat m1x = pc.m1_exact(a);
    WindowCubics w;

    w.part1.k1 = rat(a * d, c * D) * (m1x / a1 - 1);
    w.part1.k0 = (pc.eps1 - pc.eps0 + rat(pc.Delta1 - pc.Delta0)) / a1 * m1x
               + rat(a, 2) * (pc.prefix_delta_sq(pc.Delta0) - pc.prefix_delta_sq(pc.Delta1))
               + (1 - rat(a, 2)) * (pc.prefix_delta(pc.Delta0) - pc.prefix_delta(pc.Delta1))
               + (pc.eps0 - pc.eps1);

    w.part2_range_valid = ceil_div((a + 1) * q, D) <= ceil_div(q, c);
    if (w.part2_range_valid) {
        w.part2.k1 = rat(a * (c - d), a1 * c * D) * m1x;
        w.part2.k0 = (pc.eps0_bar - pc.eps1 + rat(pc.Delta0 - pc.Delta2)) / a1 * m1x
                   + rat(a - 2, 2) * (pc.prefix_delta(pc.Delta0) - pc.prefix_delta(pc.Delta2))
                   - rat(a, 2) * (pc.prefix_delta_sq(pc.Delta0) - pc.prefix_delta_sq(pc.Delta2));
    }
    return w;
}

Cubic base_cubic(i64 a, i64 c, i64 d, i64 q, const PeriodicConstants& pc) {
    const i64 D = a * d + c;
    const Rat cad = rat(c) + rat(a * d, 2);
    const Rat& e0 = pc.eps0;
    const Rat& e1 = pc.eps1;

    Cubic iia;
    iia.k3 = rat(d, 6 * c * D);
    iia.k2 = rat(1, 4 * c) + rat(1, 4 * D);
    iia.k1 = rat(1, 2) - rat(d, 12) - rat(1, c);
    iia.k0 = -(rat(D) * e0 / 2 * ((e0 - 1) / 2 + rat(D, 3 * a) * (e0 * e0 - rat(3, 2) * e0 + rat(1, 2)))
               + rat(c) * e1 / 2 * ((e1 - 1) / 2 - rat(c, 3 * a) * (e1 * e1 - rat(3, 2) * e1 + rat(1, 2)))
               + e1);

    // remaining column sum: (1/a)[sum (q-mc) - sum (q-mD)] + window part1
    Cubic iib = rat(1, a) * (linear_range_sum(c, 1, e1) - linear_range_sum(D, 1, e0));
    iib += window_cubics(a, c, d, q, pc).part1;

    Cubic total = cad * strip_weight_sum(d, pc.eps2);
    total += strip_count_sum(d, pc.eps2);
    total += (rat(d + 1) * cad) * (iia - iib);
    return total;
}

Cubic tail_cubic(i64 a, i64 c, i64 d, i64 q, const PeriodicConstants& pc) {
    const i64 D = a * d + c;
    const Rat mult = rat(d) * (c + rat((d + 1) * a, 2));
    const auto w = window_cubics(a, c, d, q, pc);
    if (!w.part2_range_valid)
        throw internal_inconsistency("tail series requested with inverted range (needs c <= d)");

    Cubic p1 = rat(1, 2 * a) * square_range_sum(D, a + 1, pc.eps0_bar)
             - rat(a + 2, 2 * a) * linear_range_sum(D, a + 1, pc.eps0_bar);
    Cubic p2 = rat(1, 2 * a) * square_range_sum(c, 1, pc.eps1)
             + rat(a - 2, 2 * a) * linear_range_sum(c, 1, pc.eps1);
    Cubic p3 = rat(a, 2) * square_range_sum(d, 1, pc.eps2)
             - rat(a + 2, 2) * linear_range_sum(d, 1, pc.eps2);
    Cubic p4 = degree_product_sum(c, d, pc.eps2);
    Cubic p6{Rat(0), Rat(0), rat(a + 1, D) - rat(1, d), pc.eps0_bar - pc.eps2};

    return mult * (p1 - p2 - p3 - p4 - w.part2 + p6);
}

Cubic section_cubic(i64 a, i64 c, i64 d) {
    const Rat cad = rat(c) + rat(a * d, 2);
    const Rat lin = rat(d) + c + rat(a * d, 2);
    return {rat(d, 3) * cad, -rat(d, 2) * cad + lin / 2, rat(d, 6) * cad - lin / 2 + 1, Rat(0)};
}

}  // namespace

std::pair<Rat, Rat> defect_window_sums(i64 a, i64 c, i64 d, i64 q, const PeriodicConstants& pc) {
    const auto w = window_cubics(a, c, d, q, pc);
    Rat part1 = w.part1.eval(q);
    Rat part2 = w.part2_range_valid ? w.part2.eval(q) : Rat(0);
    return {part1, part2};
}

std::pair<Rat, Rat> defect_window_sums_compact(i64 a, i64 c, i64 d, i64 q, const PeriodicConstants& pc) {
    const i64 D = a * d + c;
    const i64 a1 = pc.a1;
    const Rat& M1 = pc.M1;
    Rat part1 = rat(q) * rat(a * d, c * D) * (M1 / a1 - 1)
              + (pc.eps1 - pc.eps0 + rat(pc.Delta1 - pc.Delta0)) / a1 * M1
              + rat(a, 2) * (pc.prefix_delta_sq(pc.Delta0) - pc.prefix_delta_sq(pc.Delta1))
              + (1 - rat(a, 2)) * (pc.prefix_delta(pc.Delta0) - pc.prefix_delta(pc.Delta1))
              + (pc.eps0 - pc.eps1);
    Rat part2 = rat(q) * rat(a * (c - d), a1 * c * D) * M1
              + (pc.eps0_bar - pc.eps1 + rat(pc.Delta0 - pc.Delta2)) / a1 * M1
              + rat(a - 2, 2) * (pc.prefix_delta(pc.Delta0) - pc.prefix_delta(pc.Delta2))
              - rat(a, 2) * (pc.prefix_delta_sq(pc.Delta0) - pc.prefix_delta_sq(pc.Delta2));
    return {part1, part2};
}

Rat coker_series_base(i64 a, i64 c, i64 d, i64 q, const PeriodicConstants& pc) {
    return base_cubic(a, c, d, q, pc).eval(q);
}

Rat coker_series_tail(i64 a, i64 c, i64 d, i64 q, const PeriodicConstants& pc) {
    return tail_cubic(a, c, d, q, pc).eval(q);
}

HKClosedForm hk_closed(i64 a, i64 c, i64 d, i64 q) {
    SurfaceBundle sb(a, c, d);
    if (q < 2) throw std::invalid_argument("hk_closed: q must be >= 2");
    PeriodicConstants pc = periodic_constants(a, c, d, q);

    Cubic total = section_cubic(a, c, d);
    total += base_cubic(a, c, d, q, pc);
    if (c < d) total += tail_cubic(a, c, d, q, pc);

    HKClosedForm out{sb, q, std::move(pc), total.k3, total.k2, total.k1, total.k0, Int(0)};
    out.value = to_integer(total.eval(q), "assembled HK value");
    if (out.value < 0) throw internal_inconsistency("assembled HK value is negative");
    return out;
}

Rat ehk(i64 a, i64 c, i64 d) {
    SurfaceBundle sb(a, c, d);
    const i64 D = a * d + c;
    Rat v = (rat(c) + rat(a * d, 2))
          * (rat(d, 3) + rat((d + 1) * d, 6 * c * D) + rat(1, 2) + rat(1, 6 * d));
    if (c < d) {
        v += rat(d) * (c + rat((d + 1) * a, 2))
           * (rat((a + 1) * (a + 1) * (a + 1), 6 * a * D) - rat(1, 6 * a * c)
              - rat(a, 6 * d) - rat(1, 2 * d) + rat(c, 6 * d * d));
    }
    return v;
}

std::vector<VariantDeviation> closed_form_variants(i64 a, i64 c, i64 d, i64 q) {
    PeriodicConstants pc = periodic_constants(a, c, d, q);
    std::vector<VariantDeviation> out;

    const auto exact = defect_window_sums(a, c, d, q, pc);
    const auto compact = defect_window_sums_compact(a, c, d, q, pc);
    if (exact.first != compact.first)
        out.push_back({"window part1 (M1 display)", compact.first, exact.first});
    if (c < d && exact.second != compact.second)
        out.push_back({"window part2 (M1 display)", compact.second, exact.second});

    // compact q^2 slot of the base series drops a 1/c
    const i64 D = a * d + c;
    const Rat cad = rat(c) + rat(a * d, 2);
    const Rat exact_k2 = cad * rat(d + 1) * (rat(1, 4 * c) + rat(1, 4 * D) - rat(d, 2 * c * D) - rat(1, 2 * d))
                       + rat(d + 1, 2);
    const Rat compact_k2 = cad * rat(d + 1) * (rat(1, 4 * c) + rat(1, 4 * D) - rat(d, 2 * D) - rat(1, 2 * d))
                         + rat(d + 1, 2);
    if (exact_k2 != compact_k2)
        out.push_back({"q^2 coefficient (compact display)", compact_k2, exact_k2});

    // compact display of sum (q-md-1)(q-mc)
    const Rat& e2 = pc.eps2;
    const Rat cc = rat(c), dd = rat(d), qq = rat(q);
    Rat compact_p4 = (qq * qq * qq * (dd / 2 - cc / 6) + qq * qq * (dd * dd / 2 - dd + cc / 2)
                      + qq * (dd * dd * dd * e2 / 2 * (1 - e2) - cc * dd * dd * e2 / 2 * (1 - e2)
                              + cc * dd * dd / 6 + dd * cc * (e2 - 1) / 2 - dd * dd * e2)
                      + (cc * dd * dd * dd * e2 / 3 * (e2 * e2 - rat(3, 2) * e2 + rat(1, 2))
                         - cc * dd * dd * e2 * (e2 - 1) / 2))
                   / (dd * dd);
    Rat exact_p4 = degree_product_sum(c, d, e2).eval(q);
    if (exact_p4 != compact_p4)
        out.push_back({"degree-product sum (compact display)", compact_p4, exact_p4});

    return out;
}

ProbeReport quasipoly_probe(i64 a, i64 c, i64 d, i64 p, i64 n_max) {
    SurfaceBundle sb(a, c, d);
    if (p < 2) throw std::invalid_argument("quasipoly_probe: p must be >= 2");
    if (n_max < 4) throw std::invalid_argument("quasipoly_probe: n_max must be >= 4");
    ProbeReport report{sb, p, n_max, std::lcm(std::lcm(a, c), std::lcm<i64>(d, a * d + c)),
                       0, 0, {}, {}};

    constexpr i64 q_cap = 1'000'000'000;  // enum tier is O(q); beyond this is not practical
    for (i64 n = 1, q = p; n <= n_max; ++n, q *= p) {
        if (q > q_cap) throw std::invalid_argument("quasipoly_probe: p^n exceeds the supported range");
        HKClosedForm cf = hk_closed(a, c, d, q);
        Int hk = hilbert_kunz(a, c, d, q).value;
        ProbeSample s{n, q, q % report.modulus, hk, cf.coeff_q1, cf.coeff_q0};
        // residual after removing the two stable terms must be exactly linear
        Rat residual = rat(hk, 1) - cf.coeff_q3 * rat(q) * q * q - cf.coeff_q2 * rat(q) * q;
        if (residual != cf.coeff_q1 * q + cf.coeff_q0) {
            std::ostringstream os;
            os << "n=" << n << ": residual " << residual.get_str()
               << " != coeff_q1*q + coeff_q0";
            report.violations.push_back(os.str());
        }
        report.samples.push_back(std::move(s));
    }

    const auto& smp = report.samples;
    for (size_t i = 0; i < smp.size(); ++i) {
        for (size_t j = i + 1; j < smp.size(); ++j) {
            if (smp[i].residue != smp[j].residue) continue;
            ++report.repeat_pairs;
            if (smp[i].coeff_q1 != smp[j].coeff_q1 || smp[i].coeff_q0 != smp[j].coeff_q0) {
                std::ostringstream os;
                os << "n=" << smp[i].n << " and n=" << smp[j].n
                   << " share residue " << smp[i].residue
                   << " but their low coefficients differ";
                report.violations.push_back(os.str());
            }
        }
    }

    // smallest period visible on the back half of the sample
    const i64 lo = std::max<i64>(1, (n_max + 1) / 2);
    for (i64 t = 1; t < n_max && report.detected_period == 0; ++t) {
        bool match = false, all = true;
        for (i64 n = lo; n + t <= n_max; ++n) {
            match = true;
            if (smp[static_cast<size_t>(n - 1)].residue != smp[static_cast<size_t>(n + t - 1)].residue)
                all = false;
        }
        if (match && all) report.detected_period = t;
    }
    return report;
}

std::string probe_to_text(const ProbeReport& r) {
    std::ostringstream os;
    os << "quasi-polynomial probe: a=" << r.params.a << " c=" << r.params.c
       << " d=" << r.params.d << " p=" << r.p << " n_max=" << r.n_max
       << " modulus=lcm(a,c,d,ad+c)=" << r.modulus << "\n";
    os << "n\tq\tq mod L\thk\tcoeff_q1\tcoeff_q0\n";
    for (const auto& s : r.samples) {
        os << s.n << "\t" << s.q << "\t" << s.residue << "\t" << s.hk.get_str()
           << "\t" << s.coeff_q1.get_str() << "\t" << s.coeff_q0.get_str() << "\n";
    }
    os << "repeat pairs: " << r.repeat_pairs
       << ", detected period: " << r.detected_period << "\n";
    if (r.violations.empty()) {
        os << "no violations: low coefficients repeat with the residue\n";
    } else {
        for (const auto& v : r.violations) os << "VIOLATION: " << v << "\n";
    }
    return os.str();
}

}  // namespace hk
