#include "negabase/transducers.hpp"

#include <random>

#include "doctest.h"

using namespace negabase;

namespace {
NumberField golden() { return NumberField::make({-1, -1, 1}); }
NumberField golden_sq() { return NumberField::make({1, -3, 1}); }
NumberField int_field(int b) { return NumberField::make({Int(-b), Int(1)}); }

FieldElement eval_finite_neg(const NumberField& f, const FiniteWord& w) {
    return eval_finite(f, w, BaseSign::Negative);
}
}  // namespace

TEST_CASE("carry machine matches int_negabase") {
    for (int b : {2, 3, 10}) {
        Transducer t = build_int_converter(b);
        CHECK(t.num_states == 2);
        for (int n = 0; n <= 150; ++n) {
            FiniteWord w = run_int_converter(t, int_base_digits(n, b));
            CHECK(w == int_negabase(n, b));
        }
    }
}

TEST_CASE("online delays") {
    CHECK(online_delay(golden()) == 4);
    CHECK(online_delay(golden_sq()) == 4);
    CHECK(online_delay(int_field(2)) == 2);
    CHECK(online_delay(int_field(3)) == 2);
}

TEST_CASE("online conversion approximates the value geometrically") {
    NumberField f = golden();
    int delta = online_delay(f);
    // x = 1/5 lies in [0, 1/(beta+1)); feed its greedy beta-expansion
    FieldElement x = f.from_rational(Rat(1, 5));
    EpWord in = pos_orbit(f, x);
    int n = 24;
    FiniteWord out = online_convert(f, in, n);
    REQUIRE((int)out.size() == n);
    FieldElement approx = eval_finite_neg(f, out);
    FieldElement err = f.sub(x, approx);
    if (f.sign(err) < 0) err = f.neg(err);
    // |x - value(y)| <= (beta/(beta+1) + floor(beta)/beta^delta) beta^-n
    FieldElement beta = f.beta();
    FieldElement pw = f.one();
    for (int i = 0; i < delta; ++i) pw = f.mul(pw, beta);
    FieldElement bound = f.add(f.div(beta, f.add(beta, f.one())),
                               f.div(f.from_int(f.floor(beta)), pw));
    for (int i = 0; i < n; ++i) bound = f.div(bound, beta);
    CHECK(f.compare(err, bound) <= 0);
}

TEST_CASE("online conversion rejects out-of-domain input") {
    NumberField f = golden();
    // (1)^w in base beta has value 1/(beta-1) > 1/(beta+1)
    CHECK_THROWS_AS(online_convert(f, EpWord{{}, {1}}, 10), Error);
    CHECK_THROWS_AS(online_convert(f, EpWord{{}, {7}}, 10), Error);
}

TEST_CASE("online transducer realizes the algorithm") {
    NumberField fields[] = {golden(), int_field(2)};
    int expect_states[] = {21, 11};
    for (int k = 0; k < 2; ++k) {
        const NumberField& f = fields[k];
        Transducer t = build_online_transducer(f);
        CHECK(t.kind == TransducerKind::OnLine);
        CHECK(t.delay == online_delay(f));
        CHECK(t.num_states == expect_states[k]);
        CHECK(t.num_transient > 0);
        CHECK(t.num_transient < t.num_states);
        std::mt19937 gen(11);
        std::uniform_int_distribution<int> den(5, 60);
        FieldElement r = f.inv(f.add(f.beta(), f.one()));
        int done = 0;
        while (done < 20) {
            int q = den(gen);
            std::uniform_int_distribution<int> num(0, q - 1);
            FieldElement x = f.from_rational(Rat(num(gen), q));
            if (f.compare(x, r) >= 0) continue;
            ++done;
            EpWord in = pos_orbit(f, x);
            CHECK(run_online_transducer(t, in, 16) == online_convert(f, in, 16));
        }
    }
}

TEST_CASE("quadratic converter preserves value") {
    for (int a : {1, 2}) {
        IntPoly p = {-1, Int(-a), 1};  // beta^2 = a beta + 1
        NumberField f = NumberField::make(p);
        Transducer t = build_quadratic_converter(a);
        CHECK(t.num_states == 2);
        // x0 . x1 x2 ... with digits <= a, never a followed by a nonzero
        EpWord in{{1, 0}, {0, 1}};
        EpWord out = run_quadratic_converter(t, in);
        FieldElement lhs = f.mul(f.beta(), eval_ep(f, in, BaseSign::Positive));
        FieldElement rhs =
            f.mul(f.neg(f.beta()), eval_ep(f, out, BaseSign::Negative));
        CHECK(f.equal(lhs, rhs));
        // the forbidden in-block factor "a e" with e >= 1 is rejected
        CHECK_THROWS_AS(run_quadratic_converter(t, EpWord{{a, 1}, {0, 0}}),
                        Error);
    }
}

TEST_CASE("redundancy machine on the golden mean") {
    NumberField f = golden();
    Transducer t = build_redundancy_transducer(f, 1);
    CHECK(t.num_states == 31);
    // beta^2 = beta + 1 gives 1/beta = (beta+1)/beta^3, so the words 100 and
    // 0,-1,1 carry the same value -1/beta
    FiniteWord u = {1, 0, 0};
    FiniteWord v = {0, -1, 1};
    REQUIRE(f.equal(eval_finite_neg(f, u), eval_finite_neg(f, v)));
    CHECK(redundancy_accepts(t, u, v));
    CHECK(redundancy_accepts(t, v, u));
    CHECK(redundancy_accepts(t, u, u));
    // a difference that can no longer cancel walks out of the state set
    CHECK_FALSE(redundancy_accepts(t, {1, 0, 0, 0}, {0, 0, 0, 1}));
    CHECK_THROWS_AS(redundancy_accepts(t, {1, 0}, {1}), Error);
    CHECK_THROWS_AS(build_redundancy_transducer(f, 0), Error);
}

TEST_CASE("redundancy search fails honestly off the Pisot range") {
    NumberField f = NumberField::make({-2, 0, 1});  // sqrt(2)
    CHECK_FALSE(f.is_pisot());
    CHECK_THROWS_AS(build_redundancy_transducer(f, 1, 10000), Error);
}

TEST_CASE("normalization") {
    NumberField f2 = int_field(2);
    EpWord id = normalize(f2, EpWord{{0}, {0, 1}});
    CHECK(format_ep_word(id) == "1(10)");
    CHECK(ep_equal(normalize_via_transducer(f2, EpWord{{0}, {0, 1}}, 2), id));

    NumberField f = golden();
    std::mt19937 gen(23);
    std::uniform_int_distribution<int> digit(-1, 1);
    int done = 0;
    while (done < 15) {
        EpWord w;
        for (int i = 0; i < 4; ++i) w.pre.push_back(digit(gen));
        for (int i = 0; i < 3; ++i) w.per.push_back(digit(gen));
        FieldElement v = eval_ep(f, w, BaseSign::Negative);
        if (!neg_in_domain(f, v)) continue;
        ++done;
        EpWord exact = normalize(f, w);
        EpWord machine = normalize_via_transducer(f, w, 1);
        CHECK(ep_equal(exact, machine));
        CHECK(neg_admissible(f, exact));
        CHECK(f.equal(eval_ep(f, exact, BaseSign::Negative), v));
    }
    // (-1)^w has value exactly 1/(beta+1), the open right endpoint
    CHECK_THROWS_AS(normalize(f, EpWord{{}, {-1}}), Error);
}

TEST_CASE("negative to positive conversion") {
    NumberField f2 = int_field(2);
    EpWord w{{0}, {1}};  // value 1/6 in base -2
    EpWord p = convert_neg_to_pos(f2, w);
    CHECK(format_ep_word(p) == "0(01)");
    CHECK(ep_equal(convert_neg_to_pos_via_transducer(f2, w), p));

    NumberField f = golden();
    std::mt19937 gen(31);
    std::uniform_int_distribution<int> den(3, 50);
    int done = 0;
    while (done < 15) {
        int q = den(gen);
        std::uniform_int_distribution<int> num(0, q - 1);
        FieldElement x = f.from_rational(Rat(num(gen), q));
        if (!neg_in_domain(f, x)) continue;
        ++done;
        EpWord neg = neg_orbit(f, x);
        EpWord exact = convert_neg_to_pos(f, neg);
        CHECK(f.equal(eval_ep(f, exact, BaseSign::Positive), x));
        CHECK(ep_equal(convert_neg_to_pos_via_transducer(f, neg), exact));
    }
    // negative values have no positive-base expansion
    EpWord m = neg_orbit(f, f.from_rational(Rat(-1, 5)));
    CHECK_THROWS_AS(convert_neg_to_pos(f, m), Error);
}

TEST_CASE("transducer serialization round-trips") {
    Transducer t = build_int_converter(3);
    Transducer u = parse_transducer(serialize(t));
    CHECK(u.num_states == t.num_states);
    CHECK(serialize(u) == serialize(t));
    std::string dot = to_dot(t);
    CHECK(dot.find("digraph") != std::string::npos);
    CHECK(dot.find("|") != std::string::npos);

    Transducer r = build_redundancy_transducer(golden(), 1);
    CHECK(serialize(parse_transducer(serialize(r))) == serialize(r));
}
