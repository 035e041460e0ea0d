#include "hk/toric.hpp"

#include <algorithm>
#include <cassert>
#include <map>

namespace hk {

DivisorClass normalize_divisor(i64 b1, i64 b2, i64 b3, i64 b4, i64 a) {
    if (a < 1) throw std::invalid_argument("normalize_divisor: a must be >= 1");
    return {b1 - a * b2 + b3, b2 + b4};
}

Int h0(i64 a, DivisorClass dc) {
    if (dc.beta < 0) return 0;
    Int total = 0;
    for (i64 j = 0; j <= dc.beta; ++j) {
        i64 len = dc.alpha + j * a + 1;
        if (len > 0) total += len;
    }
    return total;
}

std::pair<i64, i64> summand_class(i64 a, i64 c, i64 d, i64 m, i64 q, i64 a1, i64 a2) {
    if (q < 1) throw std::invalid_argument("summand_class: q must be >= 1");
    if (a1 < 0 || a1 >= q || a2 < 0 || a2 >= q)
        throw std::invalid_argument("summand_class: character coordinates must lie in [0, q)");
    i64 alpha = floor_div(m * c - a1, q) + floor_div(a1 - a * a2, q) - a * floor_div(-a2, q);
    i64 beta = floor_div(-a2, q) + floor_div(m * d + a2, q);
    return {alpha, beta};
}

namespace {

std::vector<SummandClass> sorted_classes(const std::map<std::pair<i64, i64>, i64>& acc) {
    std::vector<SummandClass> out;
    out.reserve(acc.size());
    for (const auto& [key, mult] : acc) out.push_back({key.first, key.second, mult});
    return out;  // std::map iterates in (alpha, beta) order already
}

}  // namespace

std::vector<SummandClass> frobenius_decompose(i64 a, i64 c, i64 d, i64 m, i64 q) {
    if (q < 1) throw std::invalid_argument("frobenius_decompose: q must be >= 1");
    if (m < 0) throw std::invalid_argument("frobenius_decompose: m must be >= 0");
    std::map<std::pair<i64, i64>, i64> acc;
    const i64 t = floor_div(m * c, q);
    const i64 r = m * c - t * q;  // in [0, q)
    for (i64 a2 = 0; a2 < q; ++a2) {
        const i64 beta = floor_div(-a2, q) + floor_div(m * d + a2, q);
        const i64 base = (a2 == 0) ? 0 : a;  // -a * floor(-a2/q)
        const i64 s = floor_div(a * a2, q);
        const i64 r2 = a * a2 - s * q;  // in [0, q)
        // alpha(a1) = (a1 <= r ? t : t-1) + (a1 >= r2 ? -s : -s-1) + base
        i64 cuts[4] = {0, r + 1, r2, q};
        std::sort(cuts, cuts + 4);
        for (int k = 0; k + 1 < 4; ++k) {
            i64 lo = cuts[k], hi = cuts[k + 1];
            if (lo >= hi) continue;
            i64 alpha = (lo <= r ? t : t - 1) + (lo >= r2 ? -s : -s - 1) + base;
            acc[{alpha, beta}] += hi - lo;
        }
    }
    auto out = sorted_classes(acc);
#ifndef NDEBUG
    i64 total = 0;
    for (const auto& sc : out) total += sc.multiplicity;
    assert(total == q * q);
#endif
    return out;
}

std::vector<SummandClass> frobenius_decompose_naive(i64 a, i64 c, i64 d, i64 m, i64 q) {
    if (q < 1) throw std::invalid_argument("frobenius_decompose: q must be >= 1");
    if (m < 0) throw std::invalid_argument("frobenius_decompose: m must be >= 0");
    std::map<std::pair<i64, i64>, i64> acc;
    for (i64 a2 = 0; a2 < q; ++a2)
        for (i64 a1 = 0; a1 < q; ++a1)
            acc[summand_class(a, c, d, m, q, a1, a2)] += 1;
    return sorted_classes(acc);
}

}  // namespace hk
