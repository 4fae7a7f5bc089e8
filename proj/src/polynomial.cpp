#include "negabase/polynomial.hpp"

#include <cctype>
#include <sstream>

namespace negabase {

int poly_degree(const RatPoly& p) {
    for (int i = (int)p.size() - 1; i >= 0; --i)
        if (p[i] != 0) return i;
    return -1;
}

void strip_poly(RatPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

RatPoly to_rat_poly(const IntPoly& p) {
    RatPoly out(p.size());
    for (size_t i = 0; i < p.size(); ++i) out[i] = Rat(p[i]);
    strip_poly(out);
    return out;
}

Rat eval_poly(const RatPoly& p, const Rat& x) {
    Rat acc = 0;
    for (int i = (int)p.size() - 1; i >= 0; --i) acc = acc * x + p[i];
    return acc;
}

RatPoly poly_add(const RatPoly& a, const RatPoly& b) {
    RatPoly out(std::max(a.size(), b.size()), Rat(0));
    for (size_t i = 0; i < a.size(); ++i) out[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) out[i] += b[i];
    strip_poly(out);
    return out;
}

RatPoly poly_sub(const RatPoly& a, const RatPoly& b) {
    RatPoly out(std::max(a.size(), b.size()), Rat(0));
    for (size_t i = 0; i < a.size(); ++i) out[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
    strip_poly(out);
    return out;
}

RatPoly poly_mul(const RatPoly& a, const RatPoly& b) {
    if (poly_degree(a) < 0 || poly_degree(b) < 0) return {};
    RatPoly out(a.size() + b.size() - 1, Rat(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    strip_poly(out);
    return out;
}

RatPoly poly_scale(const RatPoly& a, const Rat& c) {
    RatPoly out(a);
    for (auto& x : out) x *= c;
    strip_poly(out);
    return out;
}

RatPoly poly_derivative(const RatPoly& p) {
    if (p.size() <= 1) return {};
    RatPoly out(p.size() - 1);
    for (size_t i = 1; i < p.size(); ++i) out[i - 1] = p[i] * Rat((unsigned)i);
    strip_poly(out);
    return out;
}

void poly_make_monic(RatPoly& p) {
    strip_poly(p);
    if (p.empty()) return;
    Rat lead = p.back();
    if (lead == 1) return;
    for (auto& x : p) x /= lead;
}

void poly_divmod(const RatPoly& a, const RatPoly& b, RatPoly& q, RatPoly& r) {
    int db = poly_degree(b);
    if (db < 0) fail(ErrorCode::DivisionByZero, "polynomial division by zero");
    r = a;
    strip_poly(r);
    q.assign(r.size() > (size_t)db ? r.size() - db : 0, Rat(0));
    while (poly_degree(r) >= db) {
        int dr = poly_degree(r);
        Rat c = r[dr] / b[db];
        q[dr - db] = c;
        for (int i = 0; i <= db; ++i) r[dr - db + i] -= c * b[i];
        strip_poly(r);
    }
    strip_poly(q);
}

RatPoly poly_rem(const RatPoly& a, const RatPoly& b) {
    RatPoly q, r;
    poly_divmod(a, b, q, r);
    return r;
}

RatPoly poly_gcd(RatPoly a, RatPoly b) {
    strip_poly(a);
    strip_poly(b);
    while (!b.empty()) {
        RatPoly r = poly_rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    poly_make_monic(a);
    return a;
}

XgcdResult poly_xgcd(const RatPoly& a, const RatPoly& b) {
    RatPoly r0 = a, r1 = b;
    strip_poly(r0);
    strip_poly(r1);
    RatPoly u0 = {Rat(1)}, u1 = {};
    RatPoly v0 = {}, v1 = {Rat(1)};
    while (!r1.empty()) {
        RatPoly q, r;
        poly_divmod(r0, r1, q, r);
        RatPoly u2 = poly_sub(u0, poly_mul(q, u1));
        RatPoly v2 = poly_sub(v0, poly_mul(q, v1));
        r0 = std::move(r1);
        r1 = std::move(r);
        u0 = std::move(u1);
        u1 = std::move(u2);
        v0 = std::move(v1);
        v1 = std::move(v2);
    }
    if (!r0.empty()) {
        Rat lead = r0.back();
        r0 = poly_scale(r0, Rat(1) / lead);
        u0 = poly_scale(u0, Rat(1) / lead);
        v0 = poly_scale(v0, Rat(1) / lead);
    }
    return {r0, u0, v0};
}

SturmChain sturm_chain(const RatPoly& p) {
    SturmChain c;
    RatPoly s0 = p;
    strip_poly(s0);
    if (s0.empty()) return c;
    c.seq.push_back(s0);
    RatPoly s1 = poly_derivative(s0);
    while (!s1.empty()) {
        c.seq.push_back(s1);
        RatPoly r = poly_rem(c.seq[c.seq.size() - 2], s1);
        for (auto& x : r) x = -x;
        strip_poly(r);
        s1 = std::move(r);
    }
    return c;
}

int sturm_variations(const SturmChain& c, const Rat& x) {
    int var = 0, prev = 0;
    for (const auto& s : c.seq) {
        int sg = sign_of(eval_poly(s, x));
        if (sg == 0) continue;
        if (prev != 0 && sg != prev) ++var;
        prev = sg;
    }
    return var;
}

int count_roots(const SturmChain& c, const Rat& a, const Rat& b) {
    if (c.seq.empty()) return 0;
    return sturm_variations(c, a) - sturm_variations(c, b);
}

Rat root_bound(const IntPoly& p) {
    Int mx = 0;
    for (size_t i = 0; i + 1 < p.size(); ++i) {
        Int v = p[i] < 0 ? Int(-p[i]) : p[i];
        if (v > mx) mx = v;
    }
    return Rat(mx + 1);
}

IntPoly parse_poly(const std::string& text) {
    IntPoly out;
    std::string token;
    std::stringstream ss(text);
    while (std::getline(ss, token, ',')) {
        size_t b = token.find_first_not_of(" \t");
        size_t e = token.find_last_not_of(" \t");
        if (b == std::string::npos)
            fail(ErrorCode::ParseError, "empty coefficient in '" + text + "'");
        token = token.substr(b, e - b + 1);
        size_t pos = 0;
        if (token[pos] == '+' || token[pos] == '-') ++pos;
        if (pos == token.size())
            fail(ErrorCode::ParseError, "bad coefficient '" + token + "'");
        for (size_t i = pos; i < token.size(); ++i)
            if (!std::isdigit((unsigned char)token[i]))
                fail(ErrorCode::ParseError, "bad coefficient '" + token + "'");
        out.push_back(Int(token));
    }
    if (out.empty()) fail(ErrorCode::ParseError, "empty polynomial");
    return out;
}

std::string format_poly(const IntPoly& p) {
    std::string out;
    for (size_t i = 0; i < p.size(); ++i) {
        if (i) out += ',';
        out += p[i].str();
    }
    return out;
}

}  // namespace negabase
