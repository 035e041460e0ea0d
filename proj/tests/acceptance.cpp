// Acceptance suite: every criterion is exact equality or an exact property;
// one PASS/FAIL line is printed per criterion and the process exits nonzero
// if any criterion fails.

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <iostream>
#include <set>
#include <sstream>
#include <vector>

#include "hk/closedform.hpp"
#include "hk/grid.hpp"
#include "hk/oracle.hpp"
#include "reference_scans.hpp"

using namespace hk;

namespace {

int failures = 0;

void report(int number, bool pass, const std::string& text) {
    std::cout << "criterion " << number << ": " << (pass ? "PASS" : "FAIL") << " - " << text
              << std::endl;
    if (!pass) ++failures;
}

// criteria 1 and 2: three-tier agreement over the full grid
void tier_agreement() {
    VerifySpec spec;  // a in 1..3, c,d in 1..4, primes {2,3,5}, q <= 81 / 729
    auto rep = run_verify(spec);
    i64 oracle_bad = 0, closed_bad = 0;
    for (const auto& m : rep.mismatches)
        (m.left_tier == "enum" ? oracle_bad : closed_bad) += 1;
    {
        std::ostringstream os;
        os << "oracle equality: enumeration == lattice-point colength on " << rep.oracle_instances
           << " instances, " << oracle_bad << " mismatches (" << rep.oracle_seconds
           << " s, expected < 60 s with parallelism)";
        report(1, oracle_bad == 0, os.str());
    }
    {
        std::ostringstream os;
        os << "closed-form equality: quasi-polynomial == enumeration on " << rep.closed_instances
           << " instances through q = 729, both branches and the c = d boundary, " << closed_bad
           << " mismatches";
        if (!rep.variant_deviations.empty()) {
            os << "; compact-transcription deviations (informational):";
            for (const auto& [name, count] : rep.variant_deviations)
                os << " [" << name << ": " << count << "]";
        }
        report(2, closed_bad == 0, os.str());
        for (const auto& m : rep.mismatches) {
            std::cout << "    mismatch a=" << m.a << " c=" << m.c << " d=" << m.d << " q=" << m.q
                      << ": " << m.left_tier << "=" << m.left.get_str() << " != " << m.right_tier
                      << "=" << m.right.get_str() << std::endl;
        }
    }
}

// criterion 3: class-sum closed forms vs direct scans at case boundaries
void lemma_suites() {
    struct Combo { i64 a, c, d; };
    std::vector<Combo> combos;
    for (i64 a = 1; a <= 3; ++a)
        for (i64 c = 1; c <= 4; ++c)
            for (i64 d = 1; d <= 4; ++d) combos.push_back({a, c, d});
    std::atomic<i64> checks{0}, bad{0};
    parallel_for(combos.size(), 0, [&](std::size_t idx) {
        auto [a, c, d] = combos[idx];
        for (i64 q : {2, 3, 4, 5, 7, 8, 9, 16, 25, 27}) {
            const i64 D = a * d + c;
            std::set<i64> ms;
            for (i64 base : {q / D, q / d, q / c, ((a + 1) * q) / D})
                for (i64 off = -1; off <= 1; ++off)
                    if (base + off >= 0 && base + off <= 2 * q) ms.insert(base + off);
            for (i64 m : ms) {
                auto scan = testing::scan_classes(a, c, d, m, q);
                checks += 3;
                if (coker_weight_beta_neg1(a, c, d, m, q) != scan.weight_beta_neg1) ++bad;
                if (count_alpha_neg1_beta_ge0(a, c, d, m, q) != scan.count_beta_ge0) ++bad;
                if (count_alpha_neg1_beta_ge1(a, c, d, m, q) != scan.count_beta_ge1) ++bad;
            }
        }
    });
    std::ostringstream os;
    os << "class-sum closed forms == direct scans at every case-boundary-adjacent degree ("
       << checks.load() << " checks, " << bad.load() << " mismatches)";
    report(3, bad.load() == 0, os.str());
}

// criterion 4: the seven power sums, plain and on substituted triples
void power_sum_suite() {
    std::atomic<i64> bad{0};
    i64 checks = 0;
    for (i64 d = 1; d <= 12; ++d)
        for (i64 q = 2; q <= 200; ++q) {
            auto direct = testing::power_sums_direct(d, q);
            auto closed = power_sums(d, q).as_array();
            for (int i = 0; i < 7; ++i) {
                ++checks;
                if (direct[i] != closed[i]) ++bad;
            }
        }
    // substituted triples (c+ad, (a+1)q) over the verification grid
    std::vector<std::pair<i64, i64>> triples;  // (x, Q)
    for (i64 a = 1; a <= 3; ++a)
        for (i64 c = 1; c <= 4; ++c)
            for (i64 d = 1; d <= 4; ++d)
                for (i64 p : {2, 3, 5})
                    for (i64 q = p; q <= 729; q *= p)
                        triples.emplace_back(c + a * d, (a + 1) * q);
    std::atomic<i64> more_checks{0};
    parallel_for(triples.size(), 0, [&](std::size_t i) {
        auto [x, Q] = triples[i];
        auto direct = testing::power_sums_direct(x, Q);
        auto closed = power_sums(x, Q).as_array();
        for (int k = 0; k < 7; ++k) {
            ++more_checks;
            if (direct[k] != closed[k]) ++bad;
        }
    });
    std::ostringstream os;
    os << "power-sum closed forms == direct loops on [1,12]x[2,200] plus "
       << triples.size() << " substituted triples (" << checks + more_checks.load()
       << " checks, " << bad.load() << " mismatches)";
    report(4, bad.load() == 0, os.str());
}

// criterion 5: convergence of HK(q)/q^3 to the multiplicity
void convergence_suite() {
    struct Point { i64 a, c, d, p, n_hi; };
    const std::vector<Point> points{
        {1, 1, 1, 2, 9}, {1, 2, 1, 2, 9}, {2, 3, 1, 2, 9}, {1, 1, 2, 2, 9}, {2, 2, 2, 3, 6},
        {3, 1, 1, 3, 6}, {1, 4, 1, 5, 4}, {2, 4, 3, 5, 4}, {3, 2, 1, 3, 6}, {2, 1, 1, 5, 4},
    };
    i64 bad = 0;
    for (const auto& pt : points) {
        const Rat e = ehk(pt.a, pt.c, pt.d);
        Rat prev_err;
        bool have_prev = false;
        i64 q = pt.p * pt.p;
        for (i64 n = 2; n <= pt.n_hi; ++n, q *= pt.p) {
            const Int hk = hilbert_kunz(pt.a, pt.c, pt.d, q).value;
            Rat err = rat(hk, 1) / (rat(q) * q * q) - e;
            if (err < 0) err = -err;
            auto cf = hk_closed(pt.a, pt.c, pt.d, q);
            Rat bound = abs(cf.coeff_q2) + abs(cf.coeff_q1) + abs(cf.coeff_q0);
            // |HK/q^3 - e| = |k2 q^2 + k1 q + k0|/q^3 < (|k2|+|k1|+|k0|)/p^(n-1)
            if (have_prev && err > prev_err) ++bad;
            if (!(err < bound / rat(q / pt.p))) ++bad;
            prev_err = err;
            have_prev = true;
        }
    }
    std::ostringstream os;
    os << "|HK(p^n)/p^(3n) - e_HK| nonincreasing for n >= 2 and below the low-coefficient "
          "bound / p^(n-1) on 10 grid points (" << bad << " violations)";
    report(5, bad == 0, os.str());
}

// criterion 6: residual coefficients repeat with q mod lcm(a, c, d, ad+c)
void periodicity_suite() {
    struct Probe { i64 a, c, d, expected_period; };
    const std::vector<Probe> probes{
        {1, 1, 1, 1}, {1, 3, 1, 2}, {1, 1, 2, 2}, {3, 1, 1, 2}, {1, 1, 4, 4},
    };
    i64 bad = 0;
    std::ostringstream detail;
    for (const auto& pr : probes) {
        auto rep = quasipoly_probe(pr.a, pr.c, pr.d, 2, 9);
        const bool ok = rep.violations.empty() && rep.repeat_pairs >= 1 &&
                        rep.detected_period == pr.expected_period;
        if (!ok) ++bad;
        detail << " (" << pr.a << "," << pr.c << "," << pr.d << "):period=" << rep.detected_period
               << ",repeats=" << rep.repeat_pairs << ",violations=" << rep.violations.size();
    }
    std::ostringstream os;
    os << "residual q^1/q^0 coefficients repeat exactly with q mod lcm(a,c,d,ad+c) at p=2, "
          "n_max=9 on 5 grid points:" << detail.str();
    report(6, bad == 0, os.str());
}

// criterion 7: lattice count identity for the dilated polygons
void section_count_suite() {
    std::atomic<i64> bad{0};
    std::vector<std::pair<i64, std::pair<i64, i64>>> combos;
    for (i64 a = 1; a <= 3; ++a)
        for (i64 c = 1; c <= 4; ++c)
            for (i64 d = 1; d <= 4; ++d) combos.push_back({a, {c, d}});
    parallel_for(combos.size(), 0, [&](std::size_t i) {
        auto [a, cd] = combos[i];
        auto [c, d] = cd;
        for (i64 m = 0; m <= 100; ++m) {
            Int closed = Int(static_cast<long>(m * d + 1)) * (m * c + 1)
                       + Int(static_cast<long>(a)) * (m * d) * (m * d + 1) / 2;
            if (polytope_count(a, c, d, m) != closed) ++bad;
            if (m <= 15 &&
                Int(static_cast<long>(polytope_points(a, c, d, m).size())) != closed)
                ++bad;
        }
    });
    std::ostringstream os;
    os << "|P_m| == (md+1)(mc+1) + a md(md+1)/2 for m <= 100 over the grid (" << bad.load()
       << " mismatches)";
    report(7, bad.load() == 0, os.str());
}

}  // namespace

int main() {
    // pin the documented default engine regardless of ambient debug env vars
#ifdef _WIN32
    _putenv("HK_DEBUG_SCAN=");
#else
    unsetenv("HK_DEBUG_SCAN");
    unsetenv("HK_ORACLE_DEBUG");
#endif
    const auto t0 = std::chrono::steady_clock::now();
    tier_agreement();
    lemma_suites();
    power_sum_suite();
    convergence_suite();
    periodicity_suite();
    section_count_suite();
    const double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::cout << (failures == 0 ? "ALL CRITERIA PASS" : "FAILURES PRESENT") << " (total "
              << total << " s)" << std::endl;
    return failures == 0 ? 0 : 1;
}
