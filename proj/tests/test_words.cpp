#include "negabase/words.hpp"

#include "doctest.h"

using namespace negabase;

TEST_CASE("finite word parse and format") {
    CHECK(parse_finite_word("110") == FiniteWord{1, 1, 0});
    CHECK(parse_finite_word("~15") == FiniteWord{-1, 5});
    CHECK(parse_finite_word("10,11,0") == FiniteWord{10, 11, 0});
    CHECK(format_finite_word({1, 1, 0}) == "110");
    CHECK(format_finite_word({-1, 5}) == "~15");
    CHECK(format_finite_word({10, 11, 0}) == "10,11,0");
    CHECK_THROWS_AS(parse_finite_word("1x0"), Error);
}

TEST_CASE("ep word parse and format") {
    EpWord w = parse_ep_word("1(0)");
    CHECK(w.pre == FiniteWord{1});
    CHECK(w.per == FiniteWord{0});
    CHECK(format_ep_word(w) == "1(0)");
    EpWord p = parse_ep_word("(21)");
    CHECK(p.pre.empty());
    CHECK(p.per == FiniteWord{2, 1});
    CHECK_THROWS_AS(parse_ep_word("1(0"), Error);
    CHECK_THROWS_AS(parse_ep_word("10"), Error);
}

TEST_CASE("indexing and shifting") {
    EpWord w{{1, 2}, {3, 4}};
    CHECK(ep_digit(w, 0) == 1);
    CHECK(ep_digit(w, 1) == 2);
    CHECK(ep_digit(w, 2) == 3);
    CHECK(ep_digit(w, 5) == 4);
    EpWord s = ep_shift(w, 3);
    CHECK(ep_digit(s, 0) == 4);
    CHECK(ep_digit(s, 1) == 3);
}

TEST_CASE("canonicalize finds the primitive period and absorbs the tail") {
    EpWord w = canonicalize({{1, 0}, {0}});
    CHECK(w.pre == FiniteWord{1});
    CHECK(w.per == FiniteWord{0});
    EpWord p = canonicalize({{}, {0, 1, 0, 1}});
    CHECK(p.pre.empty());
    CHECK(p.per == FiniteWord{0, 1});
    // absorbing rotates the period
    EpWord r = canonicalize({{2, 1}, {2, 1}});
    CHECK(r.pre.empty());
    CHECK(r.per == FiniteWord{2, 1});
    CHECK(ep_equal(EpWord{{1}, {0, 1}}, EpWord{{1, 0}, {1, 0}}));
    CHECK_FALSE(ep_equal(EpWord{{1}, {0}}, EpWord{{0}, {1}}));
}

TEST_CASE("alternate order on finite words") {
    // position 1: smaller digit is larger in the alternate order? No:
    // (-1)^1 (u_1 - v_1) < 0 means u_1 > v_1 makes u smaller.
    CHECK(alt_compare(FiniteWord{1}, FiniteWord{0}) < 0);
    CHECK(alt_compare(FiniteWord{0}, FiniteWord{1}) > 0);
    // position 2 compares plainly
    CHECK(alt_compare(FiniteWord{0, 0}, FiniteWord{0, 1}) < 0);
    CHECK(alt_compare(FiniteWord{1, 1}, FiniteWord{1, 1}) == 0);
    CHECK(alt_less(FiniteWord{2, 0}, FiniteWord{1, 0}));
}

TEST_CASE("alternate order on infinite words") {
    EpWord d{{1}, {0}};      // 1000...
    EpWord dstar{{0, 1}, {0}};  // 0100...
    CHECK(alt_less(d, dstar));
    CHECK(alt_compare(d, d) == 0);
    // (21)^w vs 2(21)^w: digit 1 ties 2=2, digit 2 compares 1 < 2 plainly
    CHECK(alt_less(EpWord{{}, {2, 1}}, EpWord{{2}, {2, 1}}));
}

TEST_CASE("lexicographic order on infinite words") {
    CHECK(lex_less(EpWord{{}, {0, 1}}, EpWord{{}, {1, 0}}));
    CHECK(lex_compare(EpWord{{1}, {0}}, EpWord{{1}, {0, 0}}) == 0);
}

TEST_CASE("short alternate order matches numeric order") {
    // values in base -2: 110 -> 2, 11 -> -1, 0 -> 0, 1 -> 1, 100 -> 4
    CHECK(short_alt_less(FiniteWord{1, 1}, FiniteWord{0}));
    CHECK(short_alt_less(FiniteWord{0}, FiniteWord{1}));
    CHECK(short_alt_less(FiniteWord{1}, FiniteWord{1, 1, 0}));
    CHECK(short_alt_less(FiniteWord{1, 1, 0}, FiniteWord{1, 0, 0}));
    CHECK_FALSE(short_alt_less(FiniteWord{1}, FiniteWord{1}));
}
