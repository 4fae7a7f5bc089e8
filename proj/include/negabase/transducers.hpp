#pragma once

#include <cstddef>

#include "negabase/expansion.hpp"
#include "negabase/shift_automata.hpp"
#include "negabase/transducer.hpp"

namespace negabase {

inline constexpr std::size_t kDefaultStateCap = 1000000;

// Two-state right-sequential machine converting base b representations to
// base -b, two-digit blocks least significant first, with a carry exit
// output of 1.
Transducer build_int_converter(int b);
// Convenience runner: base b digits of n (most significant first) to the
// base -b digits of n.
FiniteWord run_int_converter(const Transducer& t, const FiniteWord& w);

// Smallest delta >= 1 with floor(beta)/beta^(delta-1) + floor(beta)/beta^delta
// <= 1 - frac(beta), decided exactly.
int online_delay(const NumberField& f);

// On-line conversion of a base beta digit stream (value in [0, 1/(beta+1)))
// into base -beta digits; reads delta digits ahead, then emits one output
// digit per input digit.  Exact; the remainder is checked against its proven
// bounds at every step.
FiniteWord online_convert(const NumberField& f, const EpWord& x, int n);

// Finite on-line machine realizing online_convert, built by breadth-first
// exploration of the exact remainders (stored scaled by beta^delta).
// Finite for Pisot bases; otherwise the cap stops the search.
Transducer build_online_transducer(const NumberField& f,
                                   std::size_t state_cap = kDefaultStateCap);

// Two-state left-sequential converter from base beta to base -beta when
// beta^2 = a*beta + 1, two-digit blocks most significant first, integer
// digit included.  Inputs containing the forbidden factor "a e" (e >= 1)
// inside a block are rejected.
Transducer build_quadratic_converter(int a);
EpWord run_quadratic_converter(const Transducer& t, const EpWord& x);

// Redundancy machine over the alphabet {-c..c}: states are the exact
// s in Z[beta] with |s| <= 2c/(beta-1), edges a|b move s to -beta*s + (a-b).
// It recognizes the pairs of equal-value digit streams.
Transducer build_redundancy_transducer(const NumberField& f, int c,
                                       std::size_t state_cap = kDefaultStateCap);
// Positive-base twin (s -> beta*s + (a-b)).
Transducer build_pos_redundancy_transducer(
    const NumberField& f, int c, std::size_t state_cap = kDefaultStateCap);
// Digitwise prefix run of a pair; true when every prefix stays inside the
// machine (all states are final).
bool redundancy_accepts(const Transducer& t, const FiniteWord& u,
                        const FiniteWord& v);

// Redundancy machine with outputs restricted to admissible words (product
// with the shift automaton on the output side; degree one restricts instead
// to the classical digit set {0..b-1}).
Transducer build_normalization_transducer(
    const NumberField& f, int c, std::size_t state_cap = kDefaultStateCap);

// Admissible expansion of the value of w: exact evaluation followed by
// re-expansion.  Degree one uses the classical base -b system on digits
// {0..b-1}; higher degrees expand by the orbit of the value.
EpWord normalize(const NumberField& f, const EpWord& w,
                 int cap = kDefaultOrbitCap);
// Same result, produced by running the normalization machine: the unique
// infinite output path is followed greedily, always taking the largest
// output digit that still admits an infinite continuation.
EpWord normalize_via_transducer(const NumberField& f, const EpWord& w, int c,
                                std::size_t state_cap = kDefaultStateCap);

// Conversion from base -beta to base beta for values x >= 0 in the domain:
// negate the odd-indexed digits, then normalize in base beta.  The result is
// the greedy base beta expansion of the value.
EpWord convert_neg_to_pos(const NumberField& f, const EpWord& w,
                          int cap = kDefaultOrbitCap);
EpWord convert_neg_to_pos_via_transducer(
    const NumberField& f, const EpWord& w,
    std::size_t state_cap = kDefaultStateCap);

}  // namespace negabase
