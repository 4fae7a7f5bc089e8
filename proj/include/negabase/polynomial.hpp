#pragma once

#include <string>
#include <vector>

#include "negabase/rational.hpp"

namespace negabase {

// Coefficient vectors are constant-first: p[i] is the coefficient of X^i.
using IntPoly = std::vector<Int>;
using RatPoly = std::vector<Rat>;

int poly_degree(const RatPoly& p);  // -1 for the zero polynomial
void strip_poly(RatPoly& p);
RatPoly to_rat_poly(const IntPoly& p);

Rat eval_poly(const RatPoly& p, const Rat& x);
RatPoly poly_add(const RatPoly& a, const RatPoly& b);
RatPoly poly_sub(const RatPoly& a, const RatPoly& b);
RatPoly poly_mul(const RatPoly& a, const RatPoly& b);
RatPoly poly_scale(const RatPoly& a, const Rat& c);
RatPoly poly_derivative(const RatPoly& p);
void poly_make_monic(RatPoly& p);

// Euclidean division by a nonzero divisor: a = q*b + r, deg r < deg b.
void poly_divmod(const RatPoly& a, const RatPoly& b, RatPoly& q, RatPoly& r);
RatPoly poly_rem(const RatPoly& a, const RatPoly& b);
RatPoly poly_gcd(RatPoly a, RatPoly b);  // monic unless both inputs are zero

// Extended Euclid: g = gcd(a, b) monic, with u*a + v*b = g.
struct XgcdResult {
    RatPoly g, u, v;
};
XgcdResult poly_xgcd(const RatPoly& a, const RatPoly& b);

struct SturmChain {
    std::vector<RatPoly> seq;
};
SturmChain sturm_chain(const RatPoly& p);
int sturm_variations(const SturmChain& c, const Rat& x);
// Number of distinct real roots in (a, b]; requires a squarefree chain head.
int count_roots(const SturmChain& c, const Rat& a, const Rat& b);

// For monic p: every complex root z satisfies |z| < root_bound(p).
Rat root_bound(const IntPoly& p);

IntPoly parse_poly(const std::string& text);  // "c0,c1,...,cd"
std::string format_poly(const IntPoly& p);

}  // namespace negabase
