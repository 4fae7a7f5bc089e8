#include "negabase/transducer.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace negabase {

namespace {

const TransducerEdge* find_edge(const Transducer& t, int state,
                                const FiniteWord& in) {
    for (const TransducerEdge& e : t.edges[state])
        if (e.in == in) return &e;
    return nullptr;
}

}  // namespace

FiniteWord run_right_sequential(const Transducer& t, const FiniteWord& w,
                                int block) {
    FiniteWord rev(w.rbegin(), w.rend());  // least significant digit first
    while (rev.size() % block) rev.push_back(0);

    int state = t.initial;
    FiniteWord out;  // least significant digit first
    for (size_t k = 0; k < rev.size(); k += block) {
        FiniteWord in(block);
        for (int i = 0; i < block; ++i) in[i] = rev[k + block - 1 - i];
        const TransducerEdge* e = find_edge(t, state, in);
        if (!e)
            fail(ErrorCode::InvalidBlock,
                 "no transition for block " + format_finite_word(in));
        for (auto it = e->out.rbegin(); it != e->out.rend(); ++it)
            out.push_back(*it);
        state = e->to;
    }
    const FiniteWord& exit = t.final_out[state];
    for (auto it = exit.rbegin(); it != exit.rend(); ++it) out.push_back(*it);

    std::reverse(out.begin(), out.end());
    size_t lead = 0;
    while (lead + 1 < out.size() && out[lead] == 0) ++lead;
    return FiniteWord(out.begin() + lead, out.end());
}

EpWord run_left_sequential(const Transducer& t, const EpWord& w, int block) {
    if (w.per.empty()) fail(ErrorCode::EmptyPeriod, "need an infinite input");
    // Align the preperiod and the period on block boundaries.
    EpWord x = w;
    while (x.pre.size() % block) {
        x.pre.push_back(x.per[0]);
        std::rotate(x.per.begin(), x.per.begin() + 1, x.per.end());
    }
    while (x.per.size() % block) {
        FiniteWord d = x.per;
        x.per.insert(x.per.end(), d.begin(), d.end());
    }
    size_t pre_blocks = x.pre.size() / block;
    size_t per_blocks = x.per.size() / block;

    int state = t.initial;
    FiniteWord out;
    auto step = [&](const int* digits) {
        FiniteWord in(digits, digits + block);
        const TransducerEdge* e = find_edge(t, state, in);
        if (!e)
            fail(ErrorCode::InvalidBlock,
                 "no transition for block " + format_finite_word(in));
        out.insert(out.end(), e->out.begin(), e->out.end());
        state = e->to;
    };

    for (size_t k = 0; k < pre_blocks; ++k) step(&x.pre[k * block]);
    std::map<std::pair<int, size_t>, size_t> seen;  // (state, phase) -> out size
    size_t phase = 0;
    while (true) {
        auto key = std::make_pair(state, phase);
        auto it = seen.find(key);
        if (it != seen.end()) {
            EpWord y;
            y.pre.assign(out.begin(), out.begin() + it->second);
            y.per.assign(out.begin() + it->second, out.end());
            return canonicalize(y);
        }
        seen.emplace(key, out.size());
        step(&x.per[phase * block]);
        phase = (phase + 1) % per_blocks;
    }
}

FiniteWord run_online_transducer(const Transducer& t, const EpWord& w, int n) {
    if (w.per.empty()) fail(ErrorCode::EmptyPeriod, "need an infinite input");
    int state = t.initial;
    FiniteWord out;
    for (size_t i = 0; (int)out.size() < n; ++i) {
        FiniteWord in{ep_digit(w, i)};
        const TransducerEdge* e = find_edge(t, state, in);
        if (!e)
            fail(ErrorCode::OutOfDomain,
                 "input leaves the conversion domain at digit " +
                     std::to_string(i + 1));
        out.insert(out.end(), e->out.begin(), e->out.end());
        state = e->to;
    }
    return out;
}

namespace {

std::string word_or_dash(const FiniteWord& w) {
    return w.empty() ? "-" : format_finite_word(w);
}

FiniteWord parse_word_or_dash(const std::string& s) {
    return s == "-" ? FiniteWord{} : parse_finite_word(s);
}

const char* kind_name(TransducerKind k) {
    switch (k) {
        case TransducerKind::General: return "general";
        case TransducerKind::RightSequential: return "right-sequential";
        case TransducerKind::LeftSequential: return "left-sequential";
        case TransducerKind::OnLine: return "online";
    }
    return "general";
}

}  // namespace

std::string serialize(const Transducer& t) {
    std::ostringstream os;
    os << "negabase-transducer v1\n";
    os << "kind " << kind_name(t.kind);
    if (t.kind == TransducerKind::OnLine)
        os << " delay " << t.delay << " transient " << t.num_transient;
    os << "\n";
    os << "states " << t.num_states << " initial " << t.initial << "\n";
    os << "finals";
    for (int q = 0; q < t.num_states; ++q)
        if (t.final_[q]) os << ' ' << q;
    os << "\n";
    for (int q = 0; q < t.num_states; ++q)
        if (!t.final_out[q].empty())
            os << "exit " << q << ' ' << format_finite_word(t.final_out[q])
               << "\n";
    for (int q = 0; q < t.num_states; ++q)
        for (const TransducerEdge& e : t.edges[q])
            os << "edge " << q << ' ' << word_or_dash(e.in) << ' '
               << word_or_dash(e.out) << ' ' << e.to << "\n";
    os << "end\n";
    return os.str();
}

Transducer parse_transducer(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    auto next = [&]() {
        if (!std::getline(is, line))
            fail(ErrorCode::ParseError, "truncated transducer document");
        return line;
    };
    if (next() != "negabase-transducer v1")
        fail(ErrorCode::ParseError, "bad transducer header");

    Transducer t;
    std::istringstream ls(next());
    std::string tok, kind;
    ls >> tok >> kind;
    if (tok != "kind") fail(ErrorCode::ParseError, "expected kind line");
    if (kind == "general") t.kind = TransducerKind::General;
    else if (kind == "right-sequential") t.kind = TransducerKind::RightSequential;
    else if (kind == "left-sequential") t.kind = TransducerKind::LeftSequential;
    else if (kind == "online") t.kind = TransducerKind::OnLine;
    else fail(ErrorCode::ParseError, "unknown transducer kind " + kind);
    while (ls >> tok) {
        if (tok == "delay") ls >> t.delay;
        else if (tok == "transient") ls >> t.num_transient;
        else fail(ErrorCode::ParseError, "unknown kind attribute " + tok);
    }

    ls = std::istringstream(next());
    ls >> tok >> t.num_states;
    if (tok != "states" || t.num_states < 0)
        fail(ErrorCode::ParseError, "expected states line");
    ls >> tok >> t.initial;
    if (tok != "initial" || t.initial < 0 || t.initial >= t.num_states)
        fail(ErrorCode::ParseError, "bad initial state");
    t.edges.resize(t.num_states);
    t.final_.assign(t.num_states, false);
    t.final_out.resize(t.num_states);

    ls = std::istringstream(next());
    ls >> tok;
    if (tok != "finals") fail(ErrorCode::ParseError, "expected finals line");
    int q;
    while (ls >> q) {
        if (q < 0 || q >= t.num_states)
            fail(ErrorCode::ParseError, "final state out of range");
        t.final_[q] = true;
    }

    while (true) {
        std::string l = next();
        if (l == "end") break;
        ls = std::istringstream(l);
        ls >> tok;
        if (tok == "exit") {
            std::string w;
            ls >> q >> w;
            if (!ls || q < 0 || q >= t.num_states)
                fail(ErrorCode::ParseError, "bad exit line");
            t.final_out[q] = parse_finite_word(w);
        } else if (tok == "edge") {
            std::string in, out;
            int to;
            ls >> q >> in >> out >> to;
            if (!ls || q < 0 || q >= t.num_states || to < 0 ||
                to >= t.num_states)
                fail(ErrorCode::ParseError, "bad edge line");
            t.edges[q].push_back({parse_word_or_dash(in),
                                  parse_word_or_dash(out), to});
        } else {
            fail(ErrorCode::ParseError, "unexpected line: " + l);
        }
    }
    return t;
}

std::string to_dot(const Transducer& t) {
    std::ostringstream os;
    os << "digraph transducer {\n  rankdir=LR;\n";
    os << "  start [shape=point];\n";
    for (int q = 0; q < t.num_states; ++q) {
        os << "  q" << q << " [shape="
           << (t.final_[q] ? "doublecircle" : "circle") << ", label=\"" << q;
        if (!t.final_out[q].empty())
            os << " / " << format_finite_word(t.final_out[q]);
        os << "\"];\n";
    }
    os << "  start -> q" << t.initial << ";\n";
    auto lbl = [](const FiniteWord& w) {
        return w.empty() ? std::string("eps") : format_finite_word(w);
    };
    for (int q = 0; q < t.num_states; ++q) {
        // Group parallel edges into one arrow per target.
        std::map<int, std::string> grouped;
        for (const TransducerEdge& e : t.edges[q]) {
            std::string& s = grouped[e.to];
            if (!s.empty()) s += ", ";
            s += lbl(e.in) + "|" + lbl(e.out);
        }
        for (auto& [to, label] : grouped)
            os << "  q" << q << " -> q" << to << " [label=\"" << label
               << "\"];\n";
    }
    os << "}\n";
    return os.str();
}

}  // namespace negabase
