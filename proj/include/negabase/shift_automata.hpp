#pragma once

#include "negabase/automaton.hpp"
#include "negabase/expansion.hpp"
#include "negabase/numberfield.hpp"

namespace negabase {

// Acceptance disciplines for the suffix-constraint automaton of a stream s:
//   AltMin: every tail of an accepted word stays >= s in the alternate order
//   AltMax: every tail stays <= s in the alternate order
//   LexMax: every tail stays <= s lexicographically
enum class SuffixMode { AltMin, AltMax, LexMax };

// Deterministic automaton tracking, per state, the set of suffix lengths
// (collapsed to congruence classes compatible with digit position and, for
// the alternate modes, with parity) that still match a prefix of s exactly.
// An input letter deciding a comparison the wrong way for any tracked suffix
// removes the transition.
Automaton suffix_automaton(const EpWord& s, SuffixMode mode, int alpha_min,
                           int alpha_max, int state_cap = 1 << 20);

// Presentation of the base -beta shift: product of the asmin automaton of the
// left endpoint expansion d and the asmax automaton of the reference word d*.
Automaton neg_shift_automaton(const NumberField& f, int cap = kDefaultOrbitCap);
// Presentation of the base beta shift from its quasi-greedy reference word.
Automaton pos_shift_automaton(const NumberField& f, int cap = kDefaultOrbitCap);

enum class ShiftClass { FiniteType, SoficNotFiniteType, NotSoficOrUndetected };

struct Classification {
    ShiftClass kind = ShiftClass::NotSoficOrUndetected;
    // Minimal forbidden factors, present only for FiniteType.
    std::vector<FiniteWord> forbidden;
};

Classification classify_neg_shift(const NumberField& f,
                                  int cap = kDefaultOrbitCap);

}  // namespace negabase
