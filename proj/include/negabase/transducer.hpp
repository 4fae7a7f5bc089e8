#pragma once

#include <string>
#include <vector>

#include "negabase/numberfield.hpp"
#include "negabase/words.hpp"

namespace negabase {

enum class TransducerKind { General, RightSequential, LeftSequential, OnLine };

struct TransducerEdge {
    FiniteWord in, out;
    int to;
};

// Finite transducer with word labels.  Machines built by this library have a
// single initial state; sequential machines are deterministic on their input
// blocks in the reading direction.  `final_out` holds the word appended when
// a run ends in the state (right-sequential exit outputs).  `payload`, when
// nonempty, carries one exact field element per state (redundancy and
// on-line machines).
struct Transducer {
    TransducerKind kind = TransducerKind::General;
    int num_states = 0;
    int initial = 0;
    int delay = 0;          // OnLine only
    int num_transient = 0;  // OnLine: states [0, num_transient) emit nothing
    std::vector<std::vector<TransducerEdge>> edges;
    std::vector<bool> final_;
    std::vector<FiniteWord> final_out;
    std::vector<FieldElement> payload;
};

// Runs a right-sequential block machine.  The input is most significant digit
// first; blocks are consumed least significant first, the in/out labels of an
// edge list the block most significant digit first.  The exit output of the
// halting state extends the result on the significant side.  Leading zeros of
// the result are stripped (a lone zero stays).
FiniteWord run_right_sequential(const Transducer& t, const FiniteWord& w,
                                int block = 2);

// Runs a left-sequential block machine on an infinite word, most significant
// digit first, detecting the output lasso when (state, input phase) repeats.
EpWord run_left_sequential(const Transducer& t, const EpWord& w, int block = 2);

// Runs an on-line machine (one input digit per edge, zero or one output
// digits) until n output digits have been emitted.
FiniteWord run_online_transducer(const Transducer& t, const EpWord& w, int n);

std::string serialize(const Transducer& t);
Transducer parse_transducer(const std::string& text);
std::string to_dot(const Transducer& t);

}  // namespace negabase
