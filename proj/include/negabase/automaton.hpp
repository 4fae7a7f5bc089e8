#pragma once

#include <map>
#include <string>
#include <vector>

#include "negabase/words.hpp"

namespace negabase {

// Deterministic partial automaton over a contiguous digit alphabet
// [alpha_min, alpha_max].  Shift presentations read factors from any state,
// so `initial` only matters for rooted runs and serialization.
struct Automaton {
    int num_states = 0;
    int alpha_min = 0;
    int alpha_max = -1;
    int initial = 0;
    std::vector<std::map<int, int>> trans;  // state -> digit -> state
    std::vector<bool> final_;
};

bool accepts_from(const Automaton& a, int state, const FiniteWord& w);
bool accepts(const Automaton& a, const FiniteWord& w);  // rooted, needs final
bool accepts_anywhere(const Automaton& a, const FiniteWord& w);

Automaton product(const Automaton& x, const Automaton& y);
// Remove states without outgoing edges, iteratively.
Automaton trim(const Automaton& a);
// Presentation minimization for factor semantics: Moore class merging, then
// pruning of states that only feed themselves and whose language is covered
// by the remaining states.
Automaton minimize(const Automaton& a);

double spectral_radius(const Automaton& a);
double entropy(const Automaton& a);  // log of spectral radius

// Factor-semantics language comparison on all words up to maxlen.
bool factor_language_equal(const Automaton& x, const Automaton& y, int maxlen);

std::string serialize(const Automaton& a);
Automaton parse_automaton(const std::string& text);
std::string to_dot(const Automaton& a);

}  // namespace negabase
