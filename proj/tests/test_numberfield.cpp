#include "negabase/numberfield.hpp"

#include "doctest.h"
#include "negabase/error.hpp"

using namespace negabase;

namespace {
NumberField golden() { return NumberField::make({-1, -1, 1}); }
}  // namespace

TEST_CASE("golden mean basics") {
    NumberField f = golden();
    CHECK(f.degree() == 2);
    FieldElement b = f.beta();
    CHECK(f.equal(f.mul(b, b), f.add(b, f.one())));
    CHECK(f.floor(b) == 1);
    CHECK(f.floor(f.mul(b, b)) == 2);
    CHECK(f.sign(f.sub(b, f.one())) > 0);
    CHECK_FALSE(f.is_rational(b));
    CHECK(f.is_pisot());
}

TEST_CASE("field arithmetic is exact") {
    NumberField f = golden();
    FieldElement b = f.beta();
    FieldElement ib = f.inv(b);
    CHECK(f.equal(f.mul(b, ib), f.one()));
    // 1/beta = beta - 1 in this field
    CHECK(f.equal(ib, f.sub(b, f.one())));
    FieldElement q = f.from_rational(Rat(-7, 3));
    CHECK(f.is_rational(q));
    CHECK(f.as_rational(q) == Rat(-7, 3));
    CHECK(f.equal(f.div(q, q), f.one()));
    CHECK(f.is_zero(f.sub(q, q)));
    CHECK(f.equal(f.mul_rat(b, Rat(2)), f.add(b, b)));
}

TEST_CASE("order predicates decide exactly") {
    NumberField f = golden();
    FieldElement b = f.beta();
    // beta vs 1.618... = 809/500 (below) and 1618/1000 is below too; use
    // 1619/1000 > beta > 809/500
    CHECK(f.compare(b, f.from_rational(Rat(809, 500))) > 0);
    CHECK(f.compare(b, f.from_rational(Rat(1619, 1000))) < 0);
    CHECK(f.compare(b, b) == 0);
}

TEST_CASE("beta enclosure narrows on request") {
    NumberField f = golden();
    RatInterval iv = f.beta_enclosure(Rat(1, 1000000000));
    CHECK(iv.width() <= Rat(1, 1000000000));
    CHECK(iv.lo > Rat(1618, 1001));
    CHECK(iv.hi < Rat(1619, 1000));
}

TEST_CASE("degree one field is plain rational arithmetic") {
    NumberField f = NumberField::make({-2, 1});
    CHECK(f.degree() == 1);
    CHECK(f.as_rational(f.beta()) == 2);
    CHECK(f.is_pisot());
    CHECK(f.num_conjugates() == 0);
}

TEST_CASE("conjugate moduli") {
    NumberField f = golden();
    REQUIRE(f.num_conjugates() == 1);
    CHECK(f.conjugate_is_real(0));
    // conjugate of beta is -1/beta, modulus about 0.618
    SqrtBounds m = f.conjugate_modulus(0, Rat(1, 1000000));
    CHECK(m.lb > Rat(61, 100));
    CHECK(m.ub < Rat(62, 100));
    SqrtBounds one = f.element_conjugate_modulus(f.one(), 0, Rat(1, 1000000));
    CHECK(one.lb <= Rat(1));
    CHECK(one.ub >= Rat(1));

    NumberField g = NumberField::make({-2, 0, 1});  // sqrt(2)
    CHECK_FALSE(g.is_pisot());
}

TEST_CASE("polynomial validation") {
    CHECK_THROWS_AS(NumberField::make({1, 1}), Error);       // root -1
    CHECK_THROWS_AS(NumberField::make({-1, 1}), Error);      // root 1, not > 1
    CHECK_THROWS_AS(NumberField::make({}), Error);
    CHECK_THROWS_AS(NumberField::make({-4, 0, 1}), Error);   // (X-2)(X+2) reducible
    CHECK_THROWS_AS(NumberField::make({4, -4, 1}), Error);   // (X-2)^2 not squarefree
    try {
        NumberField::make({6, -5, 1});  // (X-2)(X-3): two roots above one
        CHECK(false);
    } catch (const Error& e) {
        CHECK((e.code() == ErrorCode::MultipleRootsAboveOne ||
               e.code() == ErrorCode::ReducibleDetected));
    }
}

TEST_CASE("division by zero is refused") {
    NumberField f = golden();
    CHECK_THROWS_AS(f.inv(f.zero()), Error);
    CHECK_THROWS_AS(f.div(f.one(), f.zero()), Error);
}

TEST_CASE("to_string is stable") {
    NumberField f = golden();
    CHECK(f.to_string(f.one()) == f.to_string(f.one()));
}
