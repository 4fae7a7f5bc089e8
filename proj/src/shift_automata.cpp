#include "negabase/shift_automata.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace negabase {

Automaton suffix_automaton(const EpWord& s_in, SuffixMode mode, int alpha_min,
                           int alpha_max, int state_cap) {
    EpWord s = canonicalize(s_in);
    if (s.per.empty())
        fail(ErrorCode::EmptyPeriod, "suffix automaton needs an infinite word");
    int m = (int)s.pre.size();
    int p = (int)s.per.size();
    for (size_t i = 0; i < ep_tail_count(s); ++i) {
        int d = ep_digit(s, i);
        if (d < alpha_min || d > alpha_max)
            fail(ErrorCode::OutOfDomain, "word digit outside the alphabet");
    }
    // Match lengths are tracked modulo P inside the periodic part; the
    // alternate order needs the position parity preserved, so an odd period
    // is doubled.
    int P = (mode == SuffixMode::LexMax) ? p : (p % 2 == 0 ? p : 2 * p);
    auto class_of = [&](int l) { return l < m + P ? l : m + (l - m) % P; };
    auto digit_at = [&](int l) {
        return l < m ? s.pre[l] : s.per[(l - m) % p];
    };
    // decision at 1-indexed position l+1: -1 dead edge, 0 keep matching,
    // +1 constraint satisfied forever
    auto decide = [&](int l, int a) {
        int diff = a - digit_at(l);
        if (diff == 0) return 0;
        switch (mode) {
            case SuffixMode::AltMin: {
                int sg = (l % 2 == 0) ? -1 : 1;  // (-1)^{l+1}
                return sg * diff < 0 ? -1 : 1;
            }
            case SuffixMode::AltMax: {
                int sg = (l % 2 == 0) ? -1 : 1;
                return sg * diff > 0 ? -1 : 1;
            }
            case SuffixMode::LexMax:
                return diff > 0 ? -1 : 1;
        }
        return -1;
    };

    Automaton out;
    out.alpha_min = alpha_min;
    out.alpha_max = alpha_max;
    std::map<std::vector<int>, int> index;
    std::deque<std::vector<int>> queue;
    auto intern = [&](std::vector<int> st) {
        auto [it, fresh] = index.emplace(std::move(st), out.num_states);
        if (fresh) {
            if (out.num_states >= state_cap)
                fail(ErrorCode::CapExceeded, "suffix automaton state cap hit");
            ++out.num_states;
            out.trans.emplace_back();
            out.final_.push_back(true);
            queue.push_back(it->first);
        }
        return it->second;
    };
    out.initial = intern({0});
    while (!queue.empty()) {
        std::vector<int> st = queue.front();
        queue.pop_front();
        int q = index.at(st);
        for (int a = alpha_min; a <= alpha_max; ++a) {
            std::set<int> next{0};
            bool dead = false;
            for (int l : st) {
                int d = decide(l, a);
                if (d < 0) {
                    dead = true;
                    break;
                }
                if (d == 0) next.insert(class_of(l + 1));
            }
            if (dead) continue;
            out.trans[q][a] = intern(std::vector<int>(next.begin(), next.end()));
        }
    }
    return out;
}

Automaton neg_shift_automaton(const NumberField& f, int cap) {
    EpWord d = neg_endpoint_word(f, cap);
    EpWord dstar = neg_reference_word(f, cap);
    int top = f.floor(f.beta()).convert_to<int>();
    Automaton low = suffix_automaton(d, SuffixMode::AltMin, 0, top);
    Automaton high = suffix_automaton(dstar, SuffixMode::AltMax, 0, top);
    return trim(product(low, high));
}

Automaton pos_shift_automaton(const NumberField& f, int cap) {
    EpWord dstar = pos_reference_word(f, cap);
    int top = f.floor(f.beta()).convert_to<int>();
    return trim(suffix_automaton(dstar, SuffixMode::LexMax, 0, top));
}

namespace {

// All strict one-letter deviations from the first `count` positions of the
// stream r that decide the comparison in the forbidden direction.
// direction -1 collects words that fall alternately below r, +1 above.
std::vector<FiniteWord> deviation_words(const EpWord& r, int count, int top,
                                        int direction) {
    std::vector<FiniteWord> out;
    for (int n = 1; n <= count; ++n) {
        FiniteWord w;
        for (int i = 0; i + 1 < n; ++i) w.push_back(ep_digit(r, i));
        for (int b = 0; b <= top; ++b) {
            int diff = b - ep_digit(r, n - 1);
            if (diff == 0) continue;
            int sg = (n % 2 == 0) ? 1 : -1;  // (-1)^n
            if (sg * diff * direction <= 0) continue;
            FiniteWord x = w;
            x.push_back(b);
            out.push_back(std::move(x));
        }
    }
    return out;
}

}  // namespace

Classification classify_neg_shift(const NumberField& f, int cap) {
    EpWord d;
    try {
        d = neg_endpoint_word(f, cap);
    } catch (const Error& e) {
        if (e.code() == ErrorCode::CapExceeded) {
            return {ShiftClass::NotSoficOrUndetected, {}};
        }
        throw;
    }
    if (!d.pre.empty()) return {ShiftClass::SoficNotFiniteType, {}};

    int p = (int)d.per.size();
    int top = f.floor(f.beta()).convert_to<int>();
    std::vector<FiniteWord> candidates;
    if (p % 2 == 0) {
        candidates = deviation_words(d, p, top, -1);
    } else {
        // Odd period: deviations below d over a doubled period, plus
        // deviations above the reference word over its own period.
        candidates = deviation_words(d, 2 * p, top, -1);
        EpWord dstar = neg_reference_word(f, cap);
        std::vector<FiniteWord> up =
            deviation_words(dstar, (int)dstar.per.size(), top, +1);
        candidates.insert(candidates.end(), up.begin(), up.end());
    }

    // Keep exactly the minimal forbidden factors: the word itself is not a
    // factor of the shift but every proper factor is.
    Automaton aut = neg_shift_automaton(f, cap);
    std::vector<FiniteWord> minimal;
    for (const FiniteWord& x : candidates) {
        if (accepts_anywhere(aut, x)) continue;
        bool proper_ok = true;
        for (size_t i = 0; i < x.size() && proper_ok; ++i)
            for (size_t len = 1; i + len <= x.size() && proper_ok; ++len) {
                if (len == x.size()) continue;
                FiniteWord sub(x.begin() + i, x.begin() + i + len);
                if (!accepts_anywhere(aut, sub)) proper_ok = false;
            }
        if (proper_ok) minimal.push_back(x);
    }
    std::sort(minimal.begin(), minimal.end(),
              [](const FiniteWord& a, const FiniteWord& b) {
                  if (a.size() != b.size()) return a.size() < b.size();
                  return a < b;
              });
    minimal.erase(std::unique(minimal.begin(), minimal.end()), minimal.end());
    return {ShiftClass::FiniteType, std::move(minimal)};
}

}  // namespace negabase
