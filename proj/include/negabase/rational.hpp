#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include "negabase/error.hpp"

namespace negabase {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rat& q) { return boost::multiprecision::numerator(q); }
inline Int rat_den(const Rat& q) { return boost::multiprecision::denominator(q); }

// Floor toward -infinity (cpp_int division truncates toward zero).
inline Int floor_rat(const Rat& q) {
    Int n = rat_num(q), d = rat_den(q);
    Int t = n / d;
    if (n % d != 0 && n < 0) --t;
    return t;
}

inline Int ceil_rat(const Rat& q) { return -floor_rat(-q); }

inline int sign_of(const Rat& q) { return q.sign(); }
inline int sign_of(const Int& n) { return n.sign(); }

inline Rat abs_rat(const Rat& q) { return q < 0 ? Rat(-q) : q; }

// Rational enclosure of sqrt(q) with ub - lb <= eps, q >= 0.
struct SqrtBounds {
    Rat lb, ub;
};

inline SqrtBounds sqrt_bounds(const Rat& q, const Rat& eps) {
    if (q < 0) fail(ErrorCode::OutOfDomain, "sqrt_bounds: negative argument");
    if (q == 0) return {Rat(0), Rat(0)};
    Int k = ceil_rat(Rat(2) / eps);
    if (k < 1) k = 1;
    Int r = boost::multiprecision::sqrt(Int(floor_rat(q * k * k)));
    // r <= k*sqrt(q) and (r+1)^2 > floor(q k^2) >= q k^2 - 1 forces (r+2)^2 > q k^2,
    // so [r/k, (r+2)/k] encloses sqrt(q) with width 2/k <= eps.
    return {Rat(r) / Rat(k), Rat(r + 2) / Rat(k)};
}

}  // namespace negabase
