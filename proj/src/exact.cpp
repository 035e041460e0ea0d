#include "hk/exact.hpp"

namespace hk {

Rat rat(const Int& num, const Int& den) {
    if (den == 0) throw std::invalid_argument("rat: zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

i64 floor_div(i64 x, i64 y) {
    if (y == 0) throw std::invalid_argument("floor_div: zero divisor");
    if (y < 0) { x = -x; y = -y; }
    i64 q = x / y;
    if ((x % y) != 0 && x < 0) --q;
    return q;
}

i64 ceil_div(i64 x, i64 y) {
    if (y == 0) throw std::invalid_argument("ceil_div: zero divisor");
    return -floor_div(-x, y);
}

bool is_integer(const Rat& r) { return r.get_den() == 1; }

Int to_integer(const Rat& r, const char* what) {
    if (!is_integer(r))
        throw internal_inconsistency(std::string(what) + " is not an integer: " + r.get_str());
    return r.get_num();
}

Rat ceil_defect(i64 x, i64 y) {
    if (y <= 0) throw std::invalid_argument("ceil_defect: modulus must be positive");
    // ceil(x/y) - x/y = ((-x) mod y) / y
    i64 r = x % y;
    i64 defect = (r == 0) ? 0 : (r > 0 ? y - r : -r);
    return rat(defect, y);
}

}  // namespace hk
