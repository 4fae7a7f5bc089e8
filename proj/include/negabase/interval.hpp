#pragma once

#include "negabase/polynomial.hpp"

namespace negabase {

struct RatInterval {
    Rat lo, hi;
    bool contains(const Rat& x) const { return lo <= x && x <= hi; }
    bool contains_zero() const { return lo <= 0 && 0 <= hi; }
    Rat width() const { return hi - lo; }
    Rat mid() const { return (lo + hi) / 2; }
};

RatInterval iv_point(const Rat& x);
RatInterval iv_add(const RatInterval& a, const RatInterval& b);
RatInterval iv_sub(const RatInterval& a, const RatInterval& b);
RatInterval iv_neg(const RatInterval& a);
RatInterval iv_mul(const RatInterval& a, const RatInterval& b);
RatInterval iv_square(const RatInterval& a);
RatInterval iv_abs(const RatInterval& a);
bool iv_intersect(const RatInterval& a, const RatInterval& b, RatInterval& out);

RatInterval eval_poly_interval(const RatPoly& p, const RatInterval& x);

struct ComplexBox {
    RatInterval re, im;
    bool contains_zero() const {
        return re.contains_zero() && im.contains_zero();
    }
    Rat diameter() const { return re.width() + im.width(); }
};

ComplexBox cbox_point(const Rat& re, const Rat& im);
ComplexBox cbox_add(const ComplexBox& a, const ComplexBox& b);
ComplexBox cbox_sub(const ComplexBox& a, const ComplexBox& b);
ComplexBox cbox_mul(const ComplexBox& a, const ComplexBox& b);
// Reciprocal of b; false when |b|^2 cannot be bounded away from zero.
bool cbox_inv(const ComplexBox& b, ComplexBox& out);
bool cbox_intersect(const ComplexBox& a, const ComplexBox& b, ComplexBox& out);
RatInterval cbox_abs_square(const ComplexBox& z);
// Enclosure of |z| within additive slack eps on each side.
SqrtBounds cbox_abs_bounds(const ComplexBox& z, const Rat& eps);

// Horner evaluation of a real-coefficient polynomial over a box.
ComplexBox eval_poly_box(const RatPoly& p, const ComplexBox& z);
// Same with complex (boxed) coefficients, constant-first.
ComplexBox eval_cpoly_box(const std::vector<ComplexBox>& p, const ComplexBox& z);

}  // namespace negabase
