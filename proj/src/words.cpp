#include "negabase/words.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace negabase {

namespace {

void require_period(const EpWord& w) {
    if (w.per.empty())
        fail(ErrorCode::EmptyPeriod, "infinite word needs a nonempty period");
}

// First index (0-based) where the streams differ, or -1 if they agree on a
// long enough prefix to be equal forever.
long first_difference(const EpWord& u, const EpWord& v) {
    require_period(u);
    require_period(v);
    size_t bound = std::max(u.pre.size(), v.pre.size()) +
                   std::lcm(u.per.size(), v.per.size());
    for (size_t i = 0; i < bound; ++i)
        if (ep_digit(u, i) != ep_digit(v, i)) return (long)i;
    return -1;
}

}  // namespace

int ep_digit(const EpWord& w, size_t i) {
    if (i < w.pre.size()) return w.pre[i];
    require_period(w);
    return w.per[(i - w.pre.size()) % w.per.size()];
}

EpWord ep_shift(const EpWord& w, size_t n) {
    EpWord out = w;
    for (size_t k = 0; k < n; ++k) {
        if (!out.pre.empty()) {
            out.pre.erase(out.pre.begin());
        } else {
            require_period(out);
            std::rotate(out.per.begin(), out.per.begin() + 1, out.per.end());
        }
    }
    return out;
}

size_t ep_tail_count(const EpWord& w) { return w.pre.size() + w.per.size(); }

EpWord canonicalize(EpWord w) {
    if (w.per.empty()) return w;
    size_t p = w.per.size();
    for (size_t d = 1; d < p; ++d) {
        if (p % d != 0) continue;
        bool ok = true;
        for (size_t i = d; i < p && ok; ++i) ok = w.per[i] == w.per[i % d];
        if (ok) {
            w.per.resize(d);
            p = d;
            break;
        }
    }
    while (!w.pre.empty() && w.pre.back() == w.per.back()) {
        std::rotate(w.per.begin(), w.per.end() - 1, w.per.end());
        w.pre.pop_back();
    }
    return w;
}

bool ep_equal(const EpWord& a, const EpWord& b) {
    return first_difference(a, b) < 0;
}

int alt_compare(const FiniteWord& u, const FiniteWord& v) {
    if (u.size() != v.size())
        fail(ErrorCode::LengthMismatch, "alternate order needs equal lengths");
    for (size_t i = 0; i < u.size(); ++i) {
        if (u[i] == v[i]) continue;
        int sg = (i % 2 == 0) ? -1 : 1;  // (-1)^k with k = i + 1
        return sg * (u[i] - v[i]) < 0 ? -1 : 1;
    }
    return 0;
}

bool alt_less(const FiniteWord& u, const FiniteWord& v) {
    return alt_compare(u, v) < 0;
}

int alt_compare(const EpWord& u, const EpWord& v) {
    long i = first_difference(u, v);
    if (i < 0) return 0;
    int sg = (i % 2 == 0) ? -1 : 1;
    return sg * (ep_digit(u, i) - ep_digit(v, i)) < 0 ? -1 : 1;
}

bool alt_less(const EpWord& u, const EpWord& v) {
    return alt_compare(u, v) < 0;
}

int lex_compare(const EpWord& u, const EpWord& v) {
    long i = first_difference(u, v);
    if (i < 0) return 0;
    return ep_digit(u, i) < ep_digit(v, i) ? -1 : 1;
}

bool lex_less(const EpWord& u, const EpWord& v) {
    return lex_compare(u, v) < 0;
}

bool short_alt_less(const FiniteWord& u, const FiniteWord& v, int min_digit) {
    size_t l = u.size(), m = v.size();
    if (l == m) {
        // Equal even length compares alternately as is; equal odd length is
        // compared after prepending the minimal letter, which shifts every
        // position's parity.
        for (size_t i = 0; i < m; ++i) {
            if (u[i] == v[i]) continue;
            size_t k = i + 1 + (m % 2);
            int sg = (k % 2 == 1) ? -1 : 1;
            return sg * (u[i] - v[i]) < 0;
        }
        return false;
    }
    if (l % 2 == m % 2) return (l % 2 == 1) ? l < m : l > m;
    if (l < m) {
        FiniteWord pu(m - l, min_digit);
        pu.insert(pu.end(), u.begin(), u.end());
        return short_alt_less(pu, v, min_digit);
    }
    FiniteWord pv(l - m, min_digit);
    pv.insert(pv.end(), v.begin(), v.end());
    return short_alt_less(u, pv, min_digit);
}

FiniteWord parse_finite_word(const std::string& s) {
    FiniteWord out;
    if (s.find(',') != std::string::npos) {
        size_t pos = 0;
        while (pos <= s.size()) {
            size_t next = s.find(',', pos);
            std::string tok = s.substr(
                pos, next == std::string::npos ? std::string::npos : next - pos);
            size_t b = tok.find_first_not_of(" \t");
            size_t e = tok.find_last_not_of(" \t");
            if (b == std::string::npos)
                fail(ErrorCode::ParseError, "empty digit in word '" + s + "'");
            tok = tok.substr(b, e - b + 1);
            try {
                size_t used = 0;
                int d = std::stoi(tok, &used);
                if (used != tok.size()) throw std::invalid_argument(tok);
                out.push_back(d);
            } catch (const std::exception&) {
                fail(ErrorCode::ParseError, "bad digit '" + tok + "'");
            }
            if (next == std::string::npos) break;
            pos = next + 1;
        }
        return out;
    }
    bool negate = false;
    for (char c : s) {
        if (c == '~') {
            if (negate) fail(ErrorCode::ParseError, "doubled '~' in word");
            negate = true;
        } else if (std::isdigit((unsigned char)c)) {
            int d = c - '0';
            out.push_back(negate ? -d : d);
            negate = false;
        } else {
            fail(ErrorCode::ParseError,
                 std::string("bad character '") + c + "' in word");
        }
    }
    if (negate) fail(ErrorCode::ParseError, "trailing '~' in word");
    return out;
}

std::string format_finite_word(const FiniteWord& w) {
    bool compact = true;
    for (int d : w)
        if (d < -9 || d > 9) compact = false;
    std::string out;
    for (size_t i = 0; i < w.size(); ++i) {
        if (compact) {
            if (w[i] < 0) out += '~';
            out += (char)('0' + (w[i] < 0 ? -w[i] : w[i]));
        } else {
            if (i) out += ',';
            out += std::to_string(w[i]);
        }
    }
    return out;
}

EpWord parse_ep_word(const std::string& s) {
    size_t open = s.find('(');
    size_t close = s.rfind(')');
    if (open == std::string::npos || close != s.size() - 1 || close < open)
        fail(ErrorCode::ParseError, "expected pre(per) form in '" + s + "'");
    EpWord w;
    w.pre = parse_finite_word(s.substr(0, open));
    w.per = parse_finite_word(s.substr(open + 1, close - open - 1));
    if (w.per.empty())
        fail(ErrorCode::EmptyPeriod, "empty period in '" + s + "'");
    return w;
}

std::string format_ep_word(const EpWord& w) {
    return format_finite_word(w.pre) + "(" + format_finite_word(w.per) + ")";
}

}  // namespace negabase
