#pragma once

#include <string>
#include <vector>

#include "negabase/error.hpp"

namespace negabase {

using FiniteWord = std::vector<int>;

// Eventually periodic infinite word pre . per^omega.  The period must be
// nonempty whenever the word is used as an infinite digit stream.
struct EpWord {
    FiniteWord pre, per;

    bool operator==(const EpWord& o) const {
        return pre == o.pre && per == o.per;
    }
};

int ep_digit(const EpWord& w, size_t i);  // 0-indexed
EpWord ep_shift(const EpWord& w, size_t n = 1);
// Number of tail positions that cover all distinct shifts.
size_t ep_tail_count(const EpWord& w);
// Primitive period plus absorbing periodic tail digits out of the preperiod.
EpWord canonicalize(EpWord w);
bool ep_equal(const EpWord& a, const EpWord& b);  // as infinite sequences

// Alternate order: at the first difference k (1-indexed), u is smaller when
// (-1)^k (u_k - v_k) < 0.
int alt_compare(const FiniteWord& u, const FiniteWord& v);  // same length only
bool alt_less(const FiniteWord& u, const FiniteWord& v);
int alt_compare(const EpWord& u, const EpWord& v);
bool alt_less(const EpWord& u, const EpWord& v);

int lex_compare(const EpWord& u, const EpWord& v);
bool lex_less(const EpWord& u, const EpWord& v);

// Short-alternate order on finite words over an alphabet whose minimum is
// min_digit; matches numeric order of integer representations.
bool short_alt_less(const FiniteWord& u, const FiniteWord& v, int min_digit = 0);

// Compact form (one character per digit, '~' negates the next digit) when all
// digits fit in [-9, 9], comma-separated otherwise.
FiniteWord parse_finite_word(const std::string& s);
std::string format_finite_word(const FiniteWord& w);
// "pre(per)"; the preperiod may be empty.
EpWord parse_ep_word(const std::string& s);
std::string format_ep_word(const EpWord& w);

}  // namespace negabase
