#pragma once

#include "negabase/numberfield.hpp"
#include "negabase/words.hpp"

namespace negabase {

inline constexpr int kDefaultOrbitCap = 100000;

enum class BaseSign { Negative, Positive };

struct StepResult {
    int digit;
    FieldElement next;
};

// Fundamental interval [ -beta/(beta+1), 1/(beta+1) ) of the base -beta system.
FieldElement neg_left_endpoint(const NumberField& f);
FieldElement neg_right_endpoint(const NumberField& f);
bool neg_in_domain(const NumberField& f, const FieldElement& x);

// One application of x -> -beta*x - floor(-beta*x + beta/(beta+1)); the digit
// is the floor term.
StepResult neg_step(const NumberField& f, const FieldElement& x);
FiniteWord neg_digits(const NumberField& f, FieldElement x, int n);
// Exact expansion as an eventually periodic word; throws CapExceeded when the
// orbit does not close within cap steps.
EpWord neg_orbit(const NumberField& f, FieldElement x, int cap = kDefaultOrbitCap);
// Expansion d of the left endpoint, and the reference word d* governing the
// right endpoint (0 d, except for an odd purely periodic d where the last
// period digit drops by one).
EpWord neg_endpoint_word(const NumberField& f, int cap = kDefaultOrbitCap);
EpWord neg_reference_word(const NumberField& f, int cap = kDefaultOrbitCap);

// A word is the expansion of some point iff every tail t satisfies
// d <= t < d* in the alternate order; the shift closure relaxes both sides
// to <=.
bool neg_admissible(const EpWord& d, const EpWord& dstar, const EpWord& w);
bool neg_shift_contains(const EpWord& d, const EpWord& dstar, const EpWord& w);
// Finite factor test: no suffix may decide a violation against d or d*
// within its length.
bool neg_factor(const EpWord& d, const EpWord& dstar, const FiniteWord& w);
bool neg_admissible(const NumberField& f, const EpWord& w,
                    int cap = kDefaultOrbitCap);
bool neg_factor(const NumberField& f, const FiniteWord& w,
                int cap = kDefaultOrbitCap);

// Greedy positive-base system on [0, 1).
StepResult pos_step(const NumberField& f, const FieldElement& x);
FiniteWord pos_digits(const NumberField& f, FieldElement x, int n);
EpWord pos_orbit(const NumberField& f, FieldElement x, int cap = kDefaultOrbitCap);
// Digits of 1 (finite expansions end in the period (0)), and the
// quasi-greedy reference word.
EpWord pos_word_of_one(const NumberField& f, int cap = kDefaultOrbitCap);
EpWord pos_reference_word(const NumberField& f, int cap = kDefaultOrbitCap);
bool pos_admissible(const EpWord& dstar, const EpWord& w);
bool pos_factor(const EpWord& dstar, const FiniteWord& w);

// Value of .w_1 w_2 ... in base +-beta.
FieldElement eval_finite(const NumberField& f, const FiniteWord& w, BaseSign bs);
FieldElement eval_ep(const NumberField& f, const EpWord& w, BaseSign bs);

// Integer representations in base -b, most significant digit first.
FiniteWord int_negabase(Int n, int b);
// Standard base b digits of n >= 0, most significant digit first.
FiniteWord int_base_digits(Int n, int b);
Int int_word_value(const FiniteWord& w, const Int& base);

}  // namespace negabase
