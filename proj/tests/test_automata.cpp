#include "negabase/shift_automata.hpp"

#include <cmath>

#include "doctest.h"

using namespace negabase;

namespace {

NumberField golden() { return NumberField::make({-1, -1, 1}); }
NumberField golden_sq() { return NumberField::make({1, -3, 1}); }
NumberField int_field(int b) { return NumberField::make({Int(-b), Int(1)}); }

Automaton make_automaton(int n, int amin, int amax,
                         std::vector<std::map<int, int>> trans) {
    Automaton a;
    a.num_states = n;
    a.alpha_min = amin;
    a.alpha_max = amax;
    a.trans = std::move(trans);
    a.final_.assign(n, true);
    return a;
}

}  // namespace

TEST_CASE("golden mean shift is the even shift") {
    Automaton a = minimize(neg_shift_automaton(golden()));
    CHECK(a.num_states == 2);
    // even shift: zero runs between ones have even length
    Automaton even = make_automaton(2, 0, 1, {{{0, 1}, {1, 0}}, {{0, 0}}});
    CHECK(factor_language_equal(a, even, 10));
    CHECK(accepts_anywhere(a, {1, 1}));
    CHECK(accepts_anywhere(a, {1, 0, 0, 1}));
    CHECK_FALSE(accepts_anywhere(a, {1, 0, 1}));
}

TEST_CASE("golden mean squared shift automaton") {
    Automaton a = minimize(neg_shift_automaton(golden_sq()));
    CHECK(a.num_states == 2);
    Automaton expect =
        make_automaton(2, 0, 2, {{{0, 0}, {1, 0}, {2, 1}}, {{1, 0}, {2, 1}}});
    CHECK(factor_language_equal(a, expect, 10));
    CHECK_FALSE(accepts_anywhere(a, {2, 0}));
    CHECK(accepts_anywhere(a, {2, 1, 2}));
}

TEST_CASE("base -2 shift automaton") {
    Automaton a = minimize(neg_shift_automaton(int_field(2)));
    CHECK(a.num_states == 3);
    Automaton expect = make_automaton(
        3, 0, 2, {{{0, 1}, {1, 0}, {2, 2}}, {{0, 1}, {1, 0}}, {{2, 2}}});
    CHECK(factor_language_equal(a, expect, 10));
    CHECK(accepts_anywhere(a, {2, 2, 2}));
    CHECK_FALSE(accepts_anywhere(a, {0, 2}));
    CHECK_FALSE(accepts_anywhere(a, {2, 0}));
    CHECK_FALSE(accepts_anywhere(a, {2, 1}));
}

TEST_CASE("classification") {
    Classification g = classify_neg_shift(golden());
    CHECK(g.kind == ShiftClass::SoficNotFiniteType);

    Classification g2 = classify_neg_shift(golden_sq());
    REQUIRE(g2.kind == ShiftClass::FiniteType);
    REQUIRE(g2.forbidden.size() == 1);
    CHECK(g2.forbidden[0] == FiniteWord{2, 0});

    Classification b2 = classify_neg_shift(int_field(2));
    REQUIRE(b2.kind == ShiftClass::FiniteType);
    std::vector<FiniteWord> expect = {{0, 2}, {2, 0}, {2, 1}};
    CHECK(b2.forbidden == expect);
}

TEST_CASE("entropy equals log beta") {
    CHECK(std::abs(entropy(neg_shift_automaton(golden())) -
                   std::log((1 + std::sqrt(5.0)) / 2)) < 1e-9);
    CHECK(std::abs(entropy(neg_shift_automaton(golden_sq())) -
                   2 * std::log((1 + std::sqrt(5.0)) / 2)) < 1e-9);
    CHECK(std::abs(entropy(neg_shift_automaton(int_field(2))) - std::log(2.0)) <
          1e-9);
    CHECK(std::abs(entropy(neg_shift_automaton(int_field(3))) - std::log(3.0)) <
          1e-9);
}

TEST_CASE("positive shift automaton") {
    Automaton a = minimize(pos_shift_automaton(golden()));
    CHECK(a.num_states == 2);
    CHECK(accepts_anywhere(a, {1, 0, 1}));
    CHECK_FALSE(accepts_anywhere(a, {1, 1}));
    CHECK(std::abs(entropy(a) - std::log((1 + std::sqrt(5.0)) / 2)) < 1e-9);
}

TEST_CASE("suffix automaton runs against the endpoint words") {
    NumberField f = golden();
    EpWord d = neg_endpoint_word(f);
    EpWord dstar = neg_reference_word(f);
    Automaton lo = suffix_automaton(d, SuffixMode::AltMin, 0, 1);
    Automaton hi = suffix_automaton(dstar, SuffixMode::AltMax, 0, 1);
    Automaton prod = minimize(trim(product(lo, hi)));
    CHECK(factor_language_equal(prod, minimize(neg_shift_automaton(f)), 10));
}

TEST_CASE("automaton operations behave") {
    Automaton even = make_automaton(2, 0, 1, {{{0, 1}, {1, 0}}, {{0, 0}}});
    CHECK(accepts(even, {1, 0, 0}));
    CHECK(accepts_from(even, 1, {0, 1}));
    CHECK_FALSE(accepts_from(even, 1, {1}));
    Automaton m = minimize(even);
    CHECK(m.num_states == 2);
    CHECK(factor_language_equal(m, even, 12));
    // spectral radius of the even shift graph is the golden ratio
    CHECK(std::abs(spectral_radius(even) - (1 + std::sqrt(5.0)) / 2) < 1e-9);
}

TEST_CASE("serialization round-trips") {
    Automaton a = minimize(neg_shift_automaton(golden_sq()));
    Automaton b = parse_automaton(serialize(a));
    CHECK(b.num_states == a.num_states);
    CHECK(b.alpha_min == a.alpha_min);
    CHECK(b.alpha_max == a.alpha_max);
    CHECK(b.trans == a.trans);
    CHECK(serialize(b) == serialize(a));
    std::string dot = to_dot(a);
    CHECK(dot.find("digraph") != std::string::npos);
    CHECK(dot.find("->") != std::string::npos);
}
