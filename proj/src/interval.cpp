#include "negabase/interval.hpp"

#include <algorithm>

namespace negabase {

RatInterval iv_point(const Rat& x) { return {x, x}; }

RatInterval iv_add(const RatInterval& a, const RatInterval& b) {
    return {a.lo + b.lo, a.hi + b.hi};
}

RatInterval iv_sub(const RatInterval& a, const RatInterval& b) {
    return {a.lo - b.hi, a.hi - b.lo};
}

RatInterval iv_neg(const RatInterval& a) { return {-a.hi, -a.lo}; }

RatInterval iv_mul(const RatInterval& a, const RatInterval& b) {
    Rat c1 = a.lo * b.lo, c2 = a.lo * b.hi, c3 = a.hi * b.lo, c4 = a.hi * b.hi;
    return {std::min(std::min(c1, c2), std::min(c3, c4)),
            std::max(std::max(c1, c2), std::max(c3, c4))};
}

RatInterval iv_square(const RatInterval& a) {
    Rat l2 = a.lo * a.lo, h2 = a.hi * a.hi;
    Rat hi = std::max(l2, h2);
    if (a.contains_zero()) return {Rat(0), hi};
    return {std::min(l2, h2), hi};
}

RatInterval iv_abs(const RatInterval& a) {
    if (a.lo >= 0) return a;
    if (a.hi <= 0) return iv_neg(a);
    return {Rat(0), std::max(Rat(-a.lo), a.hi)};
}

bool iv_intersect(const RatInterval& a, const RatInterval& b, RatInterval& out) {
    Rat lo = std::max(a.lo, b.lo), hi = std::min(a.hi, b.hi);
    if (lo > hi) return false;
    out = {lo, hi};
    return true;
}

RatInterval eval_poly_interval(const RatPoly& p, const RatInterval& x) {
    RatInterval acc = iv_point(Rat(0));
    for (int i = (int)p.size() - 1; i >= 0; --i)
        acc = iv_add(iv_mul(acc, x), iv_point(p[i]));
    return acc;
}

ComplexBox cbox_point(const Rat& re, const Rat& im) {
    return {iv_point(re), iv_point(im)};
}

ComplexBox cbox_add(const ComplexBox& a, const ComplexBox& b) {
    return {iv_add(a.re, b.re), iv_add(a.im, b.im)};
}

ComplexBox cbox_sub(const ComplexBox& a, const ComplexBox& b) {
    return {iv_sub(a.re, b.re), iv_sub(a.im, b.im)};
}

ComplexBox cbox_mul(const ComplexBox& a, const ComplexBox& b) {
    return {iv_sub(iv_mul(a.re, b.re), iv_mul(a.im, b.im)),
            iv_add(iv_mul(a.re, b.im), iv_mul(a.im, b.re))};
}

bool cbox_inv(const ComplexBox& b, ComplexBox& out) {
    RatInterval n2 = cbox_abs_square(b);
    if (n2.lo <= 0) return false;
    RatInterval rec = {Rat(1) / n2.hi, Rat(1) / n2.lo};
    out = {iv_mul(b.re, rec), iv_mul(iv_neg(b.im), rec)};
    return true;
}

bool cbox_intersect(const ComplexBox& a, const ComplexBox& b, ComplexBox& out) {
    return iv_intersect(a.re, b.re, out.re) && iv_intersect(a.im, b.im, out.im);
}

RatInterval cbox_abs_square(const ComplexBox& z) {
    return iv_add(iv_square(z.re), iv_square(z.im));
}

SqrtBounds cbox_abs_bounds(const ComplexBox& z, const Rat& eps) {
    RatInterval n2 = cbox_abs_square(z);
    SqrtBounds lo = sqrt_bounds(n2.lo, eps);
    SqrtBounds hi = sqrt_bounds(n2.hi, eps);
    return {lo.lb, hi.ub};
}

ComplexBox eval_poly_box(const RatPoly& p, const ComplexBox& z) {
    ComplexBox acc = cbox_point(Rat(0), Rat(0));
    for (int i = (int)p.size() - 1; i >= 0; --i)
        acc = cbox_add(cbox_mul(acc, z), cbox_point(p[i], Rat(0)));
    return acc;
}

ComplexBox eval_cpoly_box(const std::vector<ComplexBox>& p, const ComplexBox& z) {
    ComplexBox acc = cbox_point(Rat(0), Rat(0));
    for (int i = (int)p.size() - 1; i >= 0; --i)
        acc = cbox_add(cbox_mul(acc, z), p[i]);
    return acc;
}

}  // namespace negabase
