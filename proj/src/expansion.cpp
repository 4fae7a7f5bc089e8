#include "negabase/expansion.hpp"

#include <map>

namespace negabase {

FieldElement neg_left_endpoint(const NumberField& f) {
    FieldElement b = f.beta();
    return f.neg(f.div(b, f.add(b, f.one())));
}

FieldElement neg_right_endpoint(const NumberField& f) {
    return f.div(f.one(), f.add(f.beta(), f.one()));
}

bool neg_in_domain(const NumberField& f, const FieldElement& x) {
    return f.compare(x, neg_left_endpoint(f)) >= 0 &&
           f.compare(x, neg_right_endpoint(f)) < 0;
}

StepResult neg_step(const NumberField& f, const FieldElement& x) {
    FieldElement y = f.neg(f.mul(f.beta(), x));
    FieldElement shift = f.neg(neg_left_endpoint(f));  // beta/(beta+1)
    Int digit = f.floor(f.add(y, shift));
    FieldElement next = f.sub(y, f.from_int(digit));
    return {digit.convert_to<int>(), next};
}

FiniteWord neg_digits(const NumberField& f, FieldElement x, int n) {
    if (!neg_in_domain(f, x))
        fail(ErrorCode::OutOfInterval, "point outside the expansion interval");
    FiniteWord out;
    out.reserve(n);
    for (int i = 0; i < n; ++i) {
        StepResult s = neg_step(f, x);
        out.push_back(s.digit);
        x = std::move(s.next);
    }
    return out;
}

EpWord neg_orbit(const NumberField& f, FieldElement x, int cap) {
    if (!neg_in_domain(f, x))
        fail(ErrorCode::OutOfInterval, "point outside the expansion interval");
    std::map<FieldElement, int> seen;
    FiniteWord digits;
    for (int i = 0; i < cap; ++i) {
        auto [it, fresh] = seen.emplace(x, i);
        if (!fresh) {
            EpWord w;
            w.pre.assign(digits.begin(), digits.begin() + it->second);
            w.per.assign(digits.begin() + it->second, digits.end());
            return canonicalize(w);
        }
        StepResult s = neg_step(f, x);
        digits.push_back(s.digit);
        x = std::move(s.next);
    }
    fail(ErrorCode::CapExceeded, "orbit did not close within the step cap");
}

EpWord neg_endpoint_word(const NumberField& f, int cap) {
    return neg_orbit(f, neg_left_endpoint(f), cap);
}

EpWord neg_reference_word(const NumberField& f, int cap) {
    EpWord d = neg_endpoint_word(f, cap);
    if (d.pre.empty() && d.per.size() % 2 == 1) {
        // odd purely periodic endpoint expansion: the reference word shifts
        // the period by a leading zero and lowers its last digit
        FiniteWord per;
        per.push_back(0);
        per.insert(per.end(), d.per.begin(), d.per.end());
        if (per.back() < 1)
            fail(ErrorCode::OutOfDomain, "degenerate endpoint expansion");
        per.back() -= 1;
        return canonicalize({{}, per});
    }
    EpWord out;
    out.pre.push_back(0);
    out.pre.insert(out.pre.end(), d.pre.begin(), d.pre.end());
    out.per = d.per;
    return canonicalize(out);
}

bool neg_admissible(const EpWord& d, const EpWord& dstar, const EpWord& w) {
    size_t tails = ep_tail_count(w);
    EpWord t = w;
    for (size_t n = 0; n < tails; ++n) {
        if (alt_compare(d, t) > 0) return false;
        if (alt_compare(t, dstar) >= 0) return false;
        t = ep_shift(t);
    }
    return true;
}

bool neg_shift_contains(const EpWord& d, const EpWord& dstar, const EpWord& w) {
    size_t tails = ep_tail_count(w);
    EpWord t = w;
    for (size_t n = 0; n < tails; ++n) {
        if (alt_compare(d, t) > 0) return false;
        if (alt_compare(t, dstar) > 0) return false;
        t = ep_shift(t);
    }
    return true;
}

namespace {

// Scans the finite word s against the stream r.  Returns -1 when s is a
// prefix of r; otherwise the 0-based index of the first difference.
long stream_difference(const FiniteWord& s, const EpWord& r) {
    for (size_t i = 0; i < s.size(); ++i)
        if (s[i] != ep_digit(r, i)) return (long)i;
    return -1;
}

}  // namespace

bool neg_factor(const EpWord& d, const EpWord& dstar, const FiniteWord& w) {
    for (size_t j = 0; j < w.size(); ++j) {
        FiniteWord suffix(w.begin() + j, w.end());
        long i = stream_difference(suffix, d);
        if (i >= 0) {
            int sg = (i % 2 == 0) ? -1 : 1;  // (-1)^{i+1}
            if (sg * (suffix[i] - ep_digit(d, i)) < 0) return false;
        }
        i = stream_difference(suffix, dstar);
        if (i >= 0) {
            int sg = (i % 2 == 0) ? -1 : 1;
            if (sg * (suffix[i] - ep_digit(dstar, i)) > 0) return false;
        }
    }
    return true;
}

bool neg_admissible(const NumberField& f, const EpWord& w, int cap) {
    return neg_admissible(neg_endpoint_word(f, cap), neg_reference_word(f, cap),
                          w);
}

bool neg_factor(const NumberField& f, const FiniteWord& w, int cap) {
    return neg_factor(neg_endpoint_word(f, cap), neg_reference_word(f, cap), w);
}

StepResult pos_step(const NumberField& f, const FieldElement& x) {
    FieldElement y = f.mul(f.beta(), x);
    Int digit = f.floor(y);
    return {digit.convert_to<int>(), f.sub(y, f.from_int(digit))};
}

FiniteWord pos_digits(const NumberField& f, FieldElement x, int n) {
    if (f.sign(x) < 0 || f.compare(x, f.one()) >= 0)
        fail(ErrorCode::OutOfInterval, "point outside [0, 1)");
    FiniteWord out;
    out.reserve(n);
    for (int i = 0; i < n; ++i) {
        StepResult s = pos_step(f, x);
        out.push_back(s.digit);
        x = std::move(s.next);
    }
    return out;
}

EpWord pos_orbit(const NumberField& f, FieldElement x, int cap) {
    if (f.sign(x) < 0 || f.compare(x, f.one()) >= 0)
        fail(ErrorCode::OutOfInterval, "point outside [0, 1)");
    std::map<FieldElement, int> seen;
    FiniteWord digits;
    for (int i = 0; i < cap; ++i) {
        auto [it, fresh] = seen.emplace(x, i);
        if (!fresh) {
            EpWord w;
            w.pre.assign(digits.begin(), digits.begin() + it->second);
            w.per.assign(digits.begin() + it->second, digits.end());
            return canonicalize(w);
        }
        StepResult s = pos_step(f, x);
        digits.push_back(s.digit);
        x = std::move(s.next);
    }
    fail(ErrorCode::CapExceeded, "orbit did not close within the step cap");
}

EpWord pos_word_of_one(const NumberField& f, int cap) {
    std::map<FieldElement, int> seen;
    FiniteWord digits;
    FieldElement t = f.one();
    for (int i = 0; i < cap; ++i) {
        auto [it, fresh] = seen.emplace(t, i);
        if (!fresh) {
            EpWord w;
            w.pre.assign(digits.begin(), digits.begin() + it->second);
            w.per.assign(digits.begin() + it->second, digits.end());
            return canonicalize(w);
        }
        StepResult s = pos_step(f, t);
        digits.push_back(s.digit);
        t = std::move(s.next);
    }
    fail(ErrorCode::CapExceeded, "orbit did not close within the step cap");
}

EpWord pos_reference_word(const NumberField& f, int cap) {
    EpWord one = pos_word_of_one(f, cap);
    if (one.per == FiniteWord{0}) {
        FiniteWord per = one.pre;
        if (per.empty() || per.back() < 1)
            fail(ErrorCode::OutOfDomain, "degenerate expansion of one");
        per.back() -= 1;
        return canonicalize({{}, per});
    }
    return one;
}

bool pos_admissible(const EpWord& dstar, const EpWord& w) {
    size_t tails = ep_tail_count(w);
    EpWord t = w;
    for (size_t n = 0; n < tails; ++n) {
        if (lex_compare(t, dstar) > 0) return false;
        t = ep_shift(t);
    }
    return true;
}

bool pos_factor(const EpWord& dstar, const FiniteWord& w) {
    for (size_t j = 0; j < w.size(); ++j) {
        FiniteWord suffix(w.begin() + j, w.end());
        long i = stream_difference(suffix, dstar);
        if (i >= 0 && suffix[i] > ep_digit(dstar, i)) return false;
    }
    return true;
}

FieldElement eval_finite(const NumberField& f, const FiniteWord& w, BaseSign bs) {
    FieldElement base = f.beta();
    if (bs == BaseSign::Negative) base = f.neg(base);
    FieldElement inv = f.inv(base);
    FieldElement acc = f.zero();
    for (int i = (int)w.size() - 1; i >= 0; --i)
        acc = f.mul(f.add(acc, f.from_int(Int(w[i]))), inv);
    return acc;
}

FieldElement eval_ep(const NumberField& f, const EpWord& w, BaseSign bs) {
    if (w.per.empty())
        fail(ErrorCode::EmptyPeriod, "value of an infinite word needs a period");
    FieldElement base = f.beta();
    if (bs == BaseSign::Negative) base = f.neg(base);
    FieldElement head = eval_finite(f, w.pre, bs);
    FieldElement ptail = eval_finite(f, w.per, bs);
    FieldElement gp = f.one();
    for (size_t i = 0; i < w.per.size(); ++i) gp = f.mul(gp, base);
    // sum over one period times gamma^p / (gamma^p - 1)
    FieldElement tail = f.div(f.mul(ptail, gp), f.sub(gp, f.one()));
    FieldElement ginv = f.inv(base);
    FieldElement scale = f.one();
    for (size_t i = 0; i < w.pre.size(); ++i) scale = f.mul(scale, ginv);
    return f.add(head, f.mul(scale, tail));
}

FiniteWord int_negabase(Int n, int b) {
    if (b < 2) fail(ErrorCode::OutOfDomain, "integer base must be at least 2");
    if (n == 0) return {0};
    FiniteWord rev;
    while (n != 0) {
        Int r = n % b;
        if (r < 0) r += b;
        rev.push_back(r.convert_to<int>());
        n = (r - n) / b;
    }
    return {rev.rbegin(), rev.rend()};
}

FiniteWord int_base_digits(Int n, int b) {
    if (b < 2) fail(ErrorCode::OutOfDomain, "integer base must be at least 2");
    if (n < 0) fail(ErrorCode::OutOfDomain, "need a nonnegative integer");
    if (n == 0) return {0};
    FiniteWord rev;
    while (n != 0) {
        rev.push_back((n % b).convert_to<int>());
        n /= b;
    }
    return {rev.rbegin(), rev.rend()};
}

Int int_word_value(const FiniteWord& w, const Int& base) {
    Int v = 0;
    for (int d : w) v = v * base + d;
    return v;
}

}  // namespace negabase
