#include "hk/oracle.hpp"

#include <algorithm>
#include <cassert>
#include <cstdlib>

namespace hk {

namespace {

bool is_prime(i64 p) {
    if (p < 2) return false;
    for (i64 f = 2; f * f <= p; ++f)
        if (p % f == 0) return false;
    return true;
}

// Membership grid for integer points in the bounding box of P_{m+q},
// rows y = 0..ymax, columns x = xmin..xmax.
class PointGrid {
public:
    PointGrid(i64 xmin, i64 xmax, i64 ymax)
        : xmin_(xmin), width_(xmax - xmin + 1), cells_(static_cast<size_t>(width_ * (ymax + 1)), 0) {}

    void mark_row_segment(i64 y, i64 x0, i64 x1) {  // inclusive segment
        auto* row = cells_.data() + static_cast<size_t>(y * width_);
        std::fill(row + (x0 - xmin_), row + (x1 - xmin_) + 1, char(1));
    }

    i64 count_unmarked(i64 y, i64 x0, i64 x1) const {
        const auto* row = cells_.data() + static_cast<size_t>(y * width_);
        i64 n = 0;
        for (i64 x = x0 - xmin_; x <= x1 - xmin_; ++x) n += row[x] == 0;
        return n;
    }

private:
    i64 xmin_;
    i64 width_;
    std::vector<char> cells_;
};

// |P_{m+q} \ S_m|: mark every translate q*u + P_m, then count what is left
// of P_{m+q}.
i64 degree_difference(i64 a, i64 c, i64 d, i64 m, i64 q,
                      const std::vector<std::pair<i64, i64>>& p1) {
    const i64 n = m + q;
    PointGrid grid(-n * c, a * n * d, n * d);
    for (const auto& [ux, uy] : p1) {
        for (i64 vy = 0; vy <= m * d; ++vy) {
            const i64 y = q * uy + vy;
            const i64 x0 = q * ux - m * c;
            const i64 x1 = q * ux + a * vy;
            assert(y >= 0 && y <= n * d && x0 >= -n * c && x1 <= a * y);  // q*P_1 + P_m inside P_{m+q}
            grid.mark_row_segment(y, x0, x1);
        }
    }
    i64 leftover = 0;
    for (i64 y = 0; y <= n * d; ++y)
        leftover += grid.count_unmarked(y, -n * c, a * y);
    return leftover;
}

}  // namespace

std::vector<std::pair<i64, i64>> polytope_points(i64 a, i64 c, i64 d, i64 m) {
    if (m < 0) throw std::invalid_argument("polytope_points: m must be >= 0");
    std::vector<std::pair<i64, i64>> pts;
    for (i64 y = 0; y <= m * d; ++y)
        for (i64 x = -m * c; x <= a * y; ++x)
            pts.emplace_back(x, y);
    std::sort(pts.begin(), pts.end(), [](const auto& l, const auto& r) {
        return l.second != r.second ? l.second < r.second : l.first < r.first;
    });
    return pts;
}

Int polytope_count(i64 a, i64 c, i64 d, i64 m) {
    if (m < 0) throw std::invalid_argument("polytope_count: m must be >= 0");
    Int total = 0;
    for (i64 y = 0; y <= m * d; ++y)
        total += a * y + m * c + 1;
    return total;
}

Int hk_colength(i64 a, i64 c, i64 d, i64 q, i64 p) {
    if (a < 1 || c < 1 || d < 1) throw std::invalid_argument("hk_colength: a, c, d must be >= 1");
    if (!is_prime(p)) throw std::invalid_argument("hk_colength: p must be prime");
    if (q < 1) throw std::invalid_argument("hk_colength: q must be >= 1");
    i64 rest = q;
    while (rest % p == 0) rest /= p;
    if (rest != 1) throw std::invalid_argument("hk_colength: q must be a power of p");

    Int total = 0;
    for (i64 m = 0; m < q; ++m) total += polytope_count(a, c, d, m);

    const auto p1 = polytope_points(a, c, d, 1);
    const i64 mstar = ceil_div(q, std::min(c, d));
    const char* dbg = std::getenv("HK_ORACLE_DEBUG");
    const bool deep_scan = dbg && dbg[0] == '1';

    i64 empty_run = 0;
    for (i64 m = 0;; ++m) {
        const i64 diff = degree_difference(a, c, d, m, q, p1);
        total += diff;
        empty_run = diff == 0 ? empty_run + 1 : 0;
        if (deep_scan) {
            if (m >= mstar && diff != 0)
                throw internal_inconsistency("oracle: nonzero difference past the cutoff");
            if (m >= 2 * mstar) break;
        } else if (empty_run >= 2 && m >= mstar) {
            break;
        }
    }
    return total;
}

}  // namespace hk
