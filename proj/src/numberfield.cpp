#include "negabase/numberfield.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace negabase {

namespace {
constexpr int kRefineCap = 4096;
constexpr int kIsolateLevelCap = 64;
}  // namespace

RatPoly NumberField::coords_poly(const FieldElement& a) const {
    RatPoly q = a.coords;
    strip_poly(q);
    return q;
}

static FieldElement pad_to(RatPoly r, int deg) {
    r.resize(deg, Rat(0));
    return {std::move(r)};
}

NumberField NumberField::make(const IntPoly& min_poly) {
    if (min_poly.size() < 2)
        fail(ErrorCode::InvalidPolynomial, "base polynomial must have degree >= 1");
    if (min_poly.back() != 1)
        fail(ErrorCode::InvalidPolynomial, "base polynomial must be monic");

    NumberField f;
    f.min_poly_ = min_poly;
    f.deg_ = (int)min_poly.size() - 1;
    f.min_rat_ = to_rat_poly(min_poly);

    RatPoly der = poly_derivative(f.min_rat_);
    if (poly_degree(poly_gcd(f.min_rat_, der)) > 0)
        fail(ErrorCode::NotSquarefree, "base polynomial has a repeated root");

    if (f.deg_ == 1) {
        Rat root = Rat(-min_poly[0]);
        if (root <= 1)
            fail(ErrorCode::NoRootAboveOne, "no root greater than one");
        f.rational_beta_ = true;
        f.beta_rat_ = root;
        f.beta_iv_ = iv_point(root);
        return f;
    }

    // A monic integer polynomial only has integer rational roots, all dividing
    // the constant term.  Any hit means the polynomial is not a minimal
    // polynomial of an algebraic number of this degree.
    if (min_poly[0] == 0)
        fail(ErrorCode::ReducibleDetected, "zero is a root");
    Int a0 = min_poly[0] < 0 ? Int(-min_poly[0]) : min_poly[0];
    for (Int t = 1; t * t <= a0; ++t) {
        if (a0 % t != 0) continue;
        for (const Int& m : {t, Int(a0 / t)}) {
            if (eval_poly(f.min_rat_, Rat(m)) == 0 ||
                eval_poly(f.min_rat_, Rat(-m)) == 0)
                fail(ErrorCode::ReducibleDetected,
                     "base polynomial has an integer root");
        }
    }

    f.isolate_roots();
    return f;
}

void NumberField::isolate_roots() {
    SturmChain chain = sturm_chain(min_rat_);
    Rat B = root_bound(min_poly_);

    int above = count_roots(chain, Rat(1), B);
    if (above == 0) fail(ErrorCode::NoRootAboveOne, "no root greater than one");
    if (above > 1)
        fail(ErrorCode::MultipleRootsAboveOne,
             "more than one real root greater than one");

    struct Seg {
        Rat lo, hi;
        int cnt;
    };
    std::vector<std::pair<Rat, Rat>> isolated;
    std::vector<Seg> work{{-B, B, count_roots(chain, -B, B)}};
    while (!work.empty()) {
        Seg s = work.back();
        work.pop_back();
        if (s.cnt == 0) continue;
        if (s.cnt == 1) {
            isolated.emplace_back(s.lo, s.hi);
            continue;
        }
        Rat m = (s.lo + s.hi) / 2;
        int left = count_roots(chain, s.lo, m);
        work.push_back({s.lo, m, left});
        work.push_back({m, s.hi, s.cnt - left});
    }

    bool beta_found = false;
    for (const auto& [a, b] : isolated) {
        bool is_beta = false;
        if (b > 1) {
            Rat cut = std::max(a, Rat(1));
            is_beta = count_roots(chain, cut, b) == 1;
        }
        // No rational roots at this point, so the sign at any rational
        // endpoint is nonzero and each root sits in the open interval.
        int slo = sign_of(eval_poly(min_rat_, a));
        if (is_beta) {
            beta_iv_ = {a, b};
            beta_sign_lo_ = slo;
            beta_found = true;
        } else {
            Conj c;
            c.box = {{a, b}, iv_point(Rat(0))};
            c.real = true;
            c.sign_lo = slo;
            conj_.push_back(c);
        }
    }
    if (!beta_found)
        fail(ErrorCode::NoRootAboveOne, "no root greater than one");

    int npairs = (deg_ - (int)isolated.size()) / 2;
    if (npairs == 0) return;

    // Root separation lower bound (Mahler): distinct roots of a squarefree
    // integer polynomial are at least sep apart, with
    //   sep > sqrt(3) * d^{-(d+2)/2} * (sum a_i^2)^{-(d-1)/2}.
    Int S = 0;
    for (const Int& a : min_poly_) S += a * a;
    Int denom = boost::multiprecision::pow(Int(deg_), (unsigned)((deg_ + 3) / 2)) *
                boost::multiprecision::pow(S, (unsigned)(deg_ / 2));
    Rat sep = Rat(1) / Rat(denom);
    Rat mu = sep / 2;

    // Every nonreal root in the upper half plane lies in this region: the
    // imaginary part of a nonreal root is at least half the distance to its
    // own conjugate.
    Rat R = B + 1;
    std::vector<ComplexBox> boxes{{{-R, R}, {mu, R}}};
    for (int level = 0;; ++level) {
        if (level > kIsolateLevelCap)
            fail(ErrorCode::CapExceeded, "complex root isolation stalled");
        std::vector<ComplexBox> keep;
        for (const auto& b : boxes)
            if (eval_poly_box(min_rat_, b).contains_zero()) keep.push_back(b);

        // Cluster touching boxes and accept once the clusters are in
        // bijection with the conjugate pairs: equal count plus per-cluster
        // diameter below sep (so no cluster can hold two roots).
        std::vector<int> parent(keep.size());
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](int x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        for (size_t i = 0; i < keep.size(); ++i)
            for (size_t j = i + 1; j < keep.size(); ++j) {
                bool touch = keep[i].re.lo <= keep[j].re.hi &&
                             keep[j].re.lo <= keep[i].re.hi &&
                             keep[i].im.lo <= keep[j].im.hi &&
                             keep[j].im.lo <= keep[i].im.hi;
                if (touch) parent[find((int)i)] = find((int)j);
            }
        std::map<int, ComplexBox> clusters;
        for (size_t i = 0; i < keep.size(); ++i) {
            int r = find((int)i);
            auto it = clusters.find(r);
            if (it == clusters.end()) {
                clusters[r] = keep[i];
            } else {
                ComplexBox& c = it->second;
                c.re.lo = std::min(c.re.lo, keep[i].re.lo);
                c.re.hi = std::max(c.re.hi, keep[i].re.hi);
                c.im.lo = std::min(c.im.lo, keep[i].im.lo);
                c.im.hi = std::max(c.im.hi, keep[i].im.hi);
            }
        }
        if ((int)clusters.size() == npairs) {
            bool ok = true;
            for (const auto& [r, c] : clusters)
                if (!(c.diameter() < sep)) ok = false;
            if (ok) {
                for (const auto& [r, c] : clusters) {
                    Conj cj;
                    cj.box = c;
                    cj.real = false;
                    conj_.push_back(cj);
                }
                return;
            }
        }
        boxes.clear();
        for (const auto& b : keep) {
            Rat mre = b.re.mid(), mim = b.im.mid();
            boxes.push_back({{b.re.lo, mre}, {b.im.lo, mim}});
            boxes.push_back({{mre, b.re.hi}, {b.im.lo, mim}});
            boxes.push_back({{b.re.lo, mre}, {mim, b.im.hi}});
            boxes.push_back({{mre, b.re.hi}, {mim, b.im.hi}});
        }
    }
}

void NumberField::refine_real(RatInterval& iv, int& sign_lo) const {
    Rat m = iv.mid();
    int sm = sign_of(eval_poly(min_rat_, m));
    if (sm == sign_lo)
        iv.lo = m;
    else
        iv.hi = m;
}

void NumberField::refine_beta() const {
    if (rational_beta_) return;
    refine_real(beta_iv_, beta_sign_lo_);
}

bool NumberField::newton_step(ComplexBox& box) const {
    // Divide the minimal polynomial by (X - m) at the box center: any root z
    // in the box satisfies z = m - p(m)/Q(z), so the box can be intersected
    // with m - p(m) * inv(Q(box)).
    Rat mre = box.re.mid(), mim = box.im.mid();
    std::vector<ComplexBox> q(deg_);
    Rat are = min_rat_[deg_], aim = 0;
    for (int k = deg_ - 1; k >= 0; --k) {
        q[k] = cbox_point(are, aim);
        Rat nre = min_rat_[k] + mre * are - mim * aim;
        Rat nim = mim * are + mre * aim;
        are = nre;
        aim = nim;
    }
    ComplexBox Q = eval_cpoly_box(q, box);
    ComplexBox Qinv;
    if (!cbox_inv(Q, Qinv)) return false;
    ComplexBox N =
        cbox_sub(cbox_point(mre, mim), cbox_mul(cbox_point(are, aim), Qinv));
    ComplexBox next;
    if (!cbox_intersect(box, N, next)) return false;
    if (next.diameter() < box.diameter()) {
        box = next;
        return true;
    }
    return false;
}

bool NumberField::quadrisect_step(ComplexBox& box) const {
    Rat mre = box.re.mid(), mim = box.im.mid();
    RatInterval res[2] = {{box.re.lo, mre}, {mre, box.re.hi}};
    RatInterval ims[2] = {{box.im.lo, mim}, {mim, box.im.hi}};
    bool any = false;
    ComplexBox acc;
    for (const auto& r : res)
        for (const auto& i : ims) {
            ComplexBox sub{r, i};
            if (!eval_poly_box(min_rat_, sub).contains_zero()) continue;
            if (!any) {
                acc = sub;
                any = true;
            } else {
                acc.re.lo = std::min(acc.re.lo, sub.re.lo);
                acc.re.hi = std::max(acc.re.hi, sub.re.hi);
                acc.im.lo = std::min(acc.im.lo, sub.im.lo);
                acc.im.hi = std::max(acc.im.hi, sub.im.hi);
            }
        }
    if (!any) return false;
    bool progressed = acc.diameter() < box.diameter();
    box = acc;
    return progressed;
}

void NumberField::refine_conjugate(int i) const {
    Conj& c = conj_[i];
    if (c.real) {
        refine_real(c.box.re, c.sign_lo);
        return;
    }
    if (newton_step(c.box)) return;
    quadrisect_step(c.box);
}

bool NumberField::beta_is_root_of(const RatPoly& g) const {
    SturmChain c = sturm_chain(g);
    return count_roots(c, beta_iv_.lo, beta_iv_.hi) > 0;
}

FieldElement NumberField::zero() const { return pad_to({}, deg_); }

FieldElement NumberField::one() const { return pad_to({Rat(1)}, deg_); }

FieldElement NumberField::beta() const {
    if (deg_ == 1) return pad_to({beta_rat_}, 1);
    return pad_to({Rat(0), Rat(1)}, deg_);
}

FieldElement NumberField::from_rational(const Rat& q) const {
    return pad_to({q}, deg_);
}

FieldElement NumberField::add(const FieldElement& a, const FieldElement& b) const {
    FieldElement out = a;
    for (int i = 0; i < deg_; ++i) out.coords[i] += b.coords[i];
    return out;
}

FieldElement NumberField::sub(const FieldElement& a, const FieldElement& b) const {
    FieldElement out = a;
    for (int i = 0; i < deg_; ++i) out.coords[i] -= b.coords[i];
    return out;
}

FieldElement NumberField::neg(const FieldElement& a) const {
    FieldElement out = a;
    for (auto& c : out.coords) c = -c;
    return out;
}

FieldElement NumberField::mul(const FieldElement& a, const FieldElement& b) const {
    RatPoly prod = poly_mul(coords_poly(a), coords_poly(b));
    if (poly_degree(prod) >= deg_) prod = poly_rem(prod, min_rat_);
    return pad_to(std::move(prod), deg_);
}

FieldElement NumberField::mul_rat(const FieldElement& a, const Rat& c) const {
    FieldElement out = a;
    for (auto& x : out.coords) x *= c;
    return out;
}

FieldElement NumberField::inv(const FieldElement& a) const {
    RatPoly q = coords_poly(a);
    if (poly_degree(q) < 0) fail(ErrorCode::DivisionByZero, "inverse of zero");
    XgcdResult x = poly_xgcd(q, min_rat_);
    if (poly_degree(x.g) == 0) {
        RatPoly u = x.u;
        if (poly_degree(u) >= deg_) u = poly_rem(u, min_rat_);
        return pad_to(std::move(u), deg_);
    }
    if (!rational_beta_ && beta_is_root_of(x.g))
        fail(ErrorCode::DivisionByZero, "inverse of zero");
    fail(ErrorCode::NotInvertible, "element is a zero divisor");
}

FieldElement NumberField::div(const FieldElement& a, const FieldElement& b) const {
    return mul(a, inv(b));
}

bool NumberField::is_zero(const FieldElement& a) const {
    RatPoly q = coords_poly(a);
    int dq = poly_degree(q);
    if (dq < 0) return true;
    if (dq == 0 || rational_beta_) return false;
    RatPoly g = poly_gcd(min_rat_, q);
    return poly_degree(g) >= 1 && beta_is_root_of(g);
}

bool NumberField::equal(const FieldElement& a, const FieldElement& b) const {
    return is_zero(sub(a, b));
}

int NumberField::sign(const FieldElement& a) const {
    RatPoly q = coords_poly(a);
    int dq = poly_degree(q);
    if (dq < 0) return 0;
    if (dq == 0) return sign_of(q[0]);
    if (rational_beta_) return sign_of(eval_poly(q, beta_rat_));
    RatPoly g = poly_gcd(min_rat_, q);
    if (poly_degree(g) >= 1 && beta_is_root_of(g)) return 0;
    for (int it = 0; it < kRefineCap; ++it) {
        RatInterval v = eval_poly_interval(q, beta_iv_);
        if (!v.contains_zero()) return v.lo > 0 ? 1 : -1;
        refine_beta();
    }
    fail(ErrorCode::CapExceeded, "sign refinement did not converge");
}

int NumberField::compare(const FieldElement& a, const FieldElement& b) const {
    return sign(sub(a, b));
}

Int NumberField::floor(const FieldElement& a) const {
    RatPoly q = coords_poly(a);
    if (poly_degree(q) <= 0) return q.empty() ? Int(0) : floor_rat(q[0]);
    if (rational_beta_) return floor_rat(eval_poly(q, beta_rat_));
    for (int it = 0; it < kRefineCap; ++it) {
        RatInterval v = eval_poly_interval(q, beta_iv_);
        Int flo = floor_rat(v.lo), fhi = floor_rat(v.hi);
        if (flo == fhi) return flo;
        refine_beta();
    }
    fail(ErrorCode::CapExceeded, "floor refinement did not converge");
}

bool NumberField::is_rational(const FieldElement& a) const {
    for (int i = 1; i < deg_; ++i)
        if (a.coords[i] != 0) return false;
    return true;
}

Rat NumberField::as_rational(const FieldElement& a) const {
    if (!is_rational(a))
        fail(ErrorCode::OutOfDomain, "element is not rational");
    return a.coords[0];
}

RatInterval NumberField::beta_enclosure(const Rat& max_width) const {
    if (rational_beta_) return iv_point(beta_rat_);
    int it = 0;
    while (beta_iv_.width() > max_width) {
        if (++it > kRefineCap)
            fail(ErrorCode::CapExceeded, "enclosure refinement did not converge");
        refine_beta();
    }
    return beta_iv_;
}

SqrtBounds NumberField::conjugate_modulus(int i, const Rat& eps) const {
    for (int it = 0; it < kRefineCap; ++it) {
        SqrtBounds b = cbox_abs_bounds(conj_[i].box, eps / 4);
        if (b.ub - b.lb <= eps) return b;
        refine_conjugate(i);
    }
    fail(ErrorCode::CapExceeded, "conjugate refinement did not converge");
}

SqrtBounds NumberField::element_conjugate_modulus(const FieldElement& a, int i,
                                                  const Rat& eps) const {
    RatPoly q = coords_poly(a);
    for (int it = 0; it < kRefineCap; ++it) {
        ComplexBox v = eval_poly_box(q, conj_[i].box);
        SqrtBounds b = cbox_abs_bounds(v, eps / 4);
        if (b.ub - b.lb <= eps) return b;
        refine_conjugate(i);
    }
    fail(ErrorCode::CapExceeded, "conjugate refinement did not converge");
}

bool NumberField::is_pisot() const {
    if (rational_beta_) return true;

    // A conjugate on the unit circle is a common root of the polynomial and
    // its reversal.  That gcd has roots closed under z -> 1/z, hence even
    // degree 2m and palindromic coefficients; writing g(z)/z^m = q(z + 1/z)
    // turns unit-circle roots into real roots of q inside (-2, 2).
    RatPoly rev(min_rat_.rbegin(), min_rat_.rend());
    strip_poly(rev);
    RatPoly g = poly_gcd(min_rat_, rev);
    int dg = poly_degree(g);
    if (dg >= 1) {
        int m = dg / 2;
        RatPoly qpoly{g[m]};
        RatPoly w{Rat(0), Rat(1)};
        RatPoly vprev{Rat(2)};
        RatPoly vcur = w;
        for (int k = 1; k <= m; ++k) {
            qpoly = poly_add(qpoly, poly_scale(vcur, g[m + k]));
            RatPoly vnext = poly_sub(poly_mul(w, vcur), vprev);
            vprev = std::move(vcur);
            vcur = std::move(vnext);
        }
        SturmChain c = sturm_chain(qpoly);
        if (count_roots(c, Rat(-2), Rat(2)) > 0) return false;
    }

    for (int i = 0; i < (int)conj_.size(); ++i) {
        if (conj_[i].real) {
            for (int it = 0;; ++it) {
                const RatInterval& iv = conj_[i].box.re;
                if (iv.lo >= -1 && iv.hi <= 1) break;
                if (iv.lo >= 1 || iv.hi <= -1) return false;
                if (it >= kRefineCap)
                    fail(ErrorCode::CapExceeded, "conjugate modulus undecided");
                refine_conjugate(i);
            }
        } else {
            Rat eps(1, 4);
            for (int it = 0;; ++it) {
                SqrtBounds b = cbox_abs_bounds(conj_[i].box, eps);
                if (b.ub < 1) break;
                if (b.lb > 1) return false;
                if (it >= kRefineCap)
                    fail(ErrorCode::CapExceeded, "conjugate modulus undecided");
                refine_conjugate(i);
                eps /= 2;
            }
        }
    }
    return true;
}

std::string NumberField::to_string(const FieldElement& a) const {
    std::ostringstream os;
    os << '(';
    for (int i = 0; i < deg_; ++i) {
        if (i) os << ", ";
        os << a.coords[i];
    }
    os << ')';
    return os.str();
}

}  // namespace negabase
