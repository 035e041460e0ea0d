// Exact integer/rational primitives used everywhere else in the library.
//
// All arithmetic in this project is exact: arbitrary-precision integers
// (GMP mpz) and canonical-form rationals (GMP mpq).  There is no floating
// point anywhere, and no tolerance parameter exists in any comparison.

#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hk {

using Int = mpz_class;
using Rat = mpq_class;
using i64 = std::int64_t;

// Thrown when an internally assembled exact expression fails an integrality
// or cross-check guarantee; the message names the first failing subterm.
class internal_inconsistency : public std::runtime_error {
public:
    explicit internal_inconsistency(const std::string& what)
        : std::runtime_error(what) {}
};

// Canonical rational num/den (den > 0, gcd = 1).
Rat rat(const Int& num, const Int& den);

inline Rat rat(i64 num, i64 den = 1) { return rat(Int(static_cast<long>(num)), Int(static_cast<long>(den))); }

// Floor division toward -infinity, also for negative numerators.
i64 floor_div(i64 x, i64 y);
i64 ceil_div(i64 x, i64 y);

bool is_integer(const Rat& r);

// Exact conversion Rat -> Int; throws internal_inconsistency if not integral.
Int to_integer(const Rat& r, const char* what);

// ceil(x/y) - x/y, a rational in [0,1).  Zero iff y | x.
// Throws std::invalid_argument for y <= 0.
Rat ceil_defect(i64 x, i64 y);

}  // namespace hk
