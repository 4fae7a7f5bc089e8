#include "negabase/expansion.hpp"

#include <random>

#include "doctest.h"

using namespace negabase;

namespace {
NumberField golden() { return NumberField::make({-1, -1, 1}); }
NumberField golden_sq() { return NumberField::make({1, -3, 1}); }
NumberField int_field(int b) { return NumberField::make({Int(-b), Int(1)}); }
}  // namespace

TEST_CASE("integer negabase golden values") {
    CHECK(format_finite_word(int_negabase(3, 2)) == "111");
    CHECK(format_finite_word(int_negabase(4, 2)) == "100");
    CHECK(format_finite_word(int_negabase(6, 2)) == "11010");
    CHECK(format_finite_word(int_negabase(0, 2)) == "0");
    CHECK(format_finite_word(int_negabase(-1, 2)) == "11");
    CHECK(format_finite_word(int_negabase(-1, 3)) == "12");
}

TEST_CASE("integer negabase round-trips") {
    for (int b : {2, 3, 10}) {
        for (int n = -120; n <= 120; ++n) {
            FiniteWord w = int_negabase(n, b);
            CHECK(int_word_value(w, Int(-b)) == n);
            if (n != 0) CHECK(w[0] != 0);
        }
    }
}

TEST_CASE("standard base digits") {
    CHECK(int_base_digits(6, 2) == FiniteWord{1, 1, 0});
    CHECK(int_base_digits(0, 7) == FiniteWord{0});
    CHECK(int_base_digits(255, 16) == FiniteWord{15, 15});
    CHECK_THROWS_AS(int_base_digits(-1, 2), Error);
}

TEST_CASE("base -2 orbit of 1/6") {
    NumberField f = int_field(2);
    EpWord w = neg_orbit(f, f.from_rational(Rat(1, 6)));
    CHECK(format_ep_word(w) == "0(1)");
    FieldElement back = eval_ep(f, w, BaseSign::Negative);
    CHECK(f.as_rational(back) == Rat(1, 6));
}

TEST_CASE("fundamental interval endpoints") {
    NumberField f = golden();
    FieldElement l = neg_left_endpoint(f);
    FieldElement r = neg_right_endpoint(f);
    CHECK(f.sign(l) < 0);
    CHECK(f.sign(r) > 0);
    // l = -beta/(beta+1), r = 1/(beta+1), so l + r = (1 - beta)/(1 + beta)
    CHECK(f.equal(f.add(l, r),
                  f.div(f.sub(f.one(), f.beta()), f.add(f.one(), f.beta()))));
    CHECK(neg_in_domain(f, f.zero()));
    CHECK(neg_in_domain(f, l));
    CHECK_FALSE(neg_in_domain(f, r));
}

TEST_CASE("golden mean endpoint words") {
    NumberField f = golden();
    EpWord d = neg_endpoint_word(f);
    CHECK(d.pre == FiniteWord{1});
    CHECK(d.per == FiniteWord{0});
    EpWord dstar = neg_reference_word(f);
    CHECK(ep_equal(dstar, EpWord{{0, 1}, {0}}));
}

TEST_CASE("golden mean squared endpoint words") {
    NumberField f = golden_sq();
    EpWord d = neg_endpoint_word(f);
    CHECK(d.pre.empty());
    CHECK(d.per == FiniteWord{2, 1});
    // purely periodic with even period: the reference word is 0 d
    EpWord dstar = neg_reference_word(f);
    CHECK(ep_equal(dstar, EpWord{{0}, {2, 1}}));
}

TEST_CASE("base -2 endpoint words use the odd period correction") {
    NumberField f = int_field(2);
    EpWord d = neg_endpoint_word(f);
    CHECK(ep_equal(d, EpWord{{}, {2}}));
    // d = (2)^w is purely periodic with odd period, so d* = (01)^w
    EpWord dstar = neg_reference_word(f);
    CHECK(ep_equal(dstar, EpWord{{}, {0, 1}}));
}

TEST_CASE("admissibility in the golden mean shift") {
    NumberField f = golden();
    EpWord d = neg_endpoint_word(f);
    EpWord dstar = neg_reference_word(f);
    CHECK(neg_admissible(d, dstar, EpWord{{}, {0}}));
    CHECK(neg_admissible(d, dstar, EpWord{{}, {1}}));
    CHECK(neg_admissible(d, dstar, EpWord{{}, {1, 0, 0}}));
    CHECK_FALSE(neg_admissible(d, dstar, EpWord{{}, {0, 1}}));  // tail = d*
    // a tail starting 101 drops below d = 1000... at the third digit
    CHECK_FALSE(neg_admissible(d, dstar, EpWord{{}, {1, 0, 1, 0}}));
    // the shift is the even shift: runs of zeros between ones have even length
    CHECK(neg_factor(f, FiniteWord{1, 1}));
    CHECK(neg_factor(f, FiniteWord{1, 0, 0, 1}));
    CHECK(neg_factor(f, FiniteWord{0, 0}));
    CHECK_FALSE(neg_factor(f, FiniteWord{1, 0, 1}));
}

TEST_CASE("orbit expansions of rationals are eventually periodic") {
    NumberField f = golden();
    EpWord d = neg_endpoint_word(f);
    EpWord dstar = neg_reference_word(f);
    std::mt19937 gen(7);
    std::uniform_int_distribution<int> den(2, 40);
    int done = 0;
    while (done < 25) {
        int q = den(gen);
        std::uniform_int_distribution<int> num(-q, q);
        FieldElement x = f.from_rational(Rat(num(gen), q));
        if (!neg_in_domain(f, x)) continue;
        ++done;
        EpWord w = neg_orbit(f, x);
        CHECK(neg_admissible(d, dstar, w));
        CHECK(f.equal(eval_ep(f, w, BaseSign::Negative), x));
    }
}

TEST_CASE("positive expansions") {
    NumberField f = golden();
    EpWord one = pos_word_of_one(f);
    CHECK(ep_equal(one, EpWord{{1, 1}, {0}}));
    EpWord ref = pos_reference_word(f);
    CHECK(ep_equal(ref, EpWord{{}, {1, 0}}));
    CHECK(pos_admissible(ref, EpWord{{}, {1, 0, 0}}));
    CHECK_FALSE(pos_admissible(ref, EpWord{{1}, {1}}));
    CHECK(pos_factor(ref, FiniteWord{1, 0, 1}));
    CHECK_FALSE(pos_factor(ref, FiniteWord{1, 1}));

    NumberField g = int_field(2);
    EpWord third = pos_orbit(g, g.from_rational(Rat(1, 3)));
    CHECK(format_ep_word(third) == "(01)");
    CHECK(g.as_rational(eval_ep(g, third, BaseSign::Positive)) == Rat(1, 3));
}

TEST_CASE("digit prefixes agree with orbits") {
    NumberField f = golden_sq();
    FieldElement x = f.from_rational(Rat(-3, 7));
    REQUIRE(neg_in_domain(f, x));
    EpWord w = neg_orbit(f, x);
    FiniteWord prefix = neg_digits(f, x, 12);
    for (int i = 0; i < 12; ++i) CHECK(prefix[i] == ep_digit(w, i));
}

TEST_CASE("eval on empty period is refused") {
    NumberField f = golden();
    CHECK_THROWS_AS(eval_ep(f, EpWord{{1}, {}}, BaseSign::Negative), Error);
}
