#include "negabase/transducers.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <utility>

namespace negabase {

namespace {

void check_cap(size_t n, std::size_t cap) {
    if (n > cap)
        fail(ErrorCode::StateCapExceeded,
             "state cap exceeded at " + std::to_string(n) + " states");
}

EpWord with_period(EpWord w) {
    if (w.per.empty()) w.per = {0};
    return w;
}

// Largest digit of the expansion alphabet {0, ..., ceil(beta) - 1}.
int max_digit(const NumberField& f) {
    int fb = (int)f.floor(f.beta());
    return f.degree() == 1 ? fb - 1 : fb;
}

}  // namespace

Transducer build_int_converter(int b) {
    if (b < 2) fail(ErrorCode::OutOfDomain, "base must be at least 2");
    Transducer t;
    t.kind = TransducerKind::RightSequential;
    t.num_states = 2;
    t.initial = 0;
    t.edges.resize(2);
    t.final_ = {true, true};
    t.final_out = {{}, {1}};

    // State 0 carries nothing, state 1 carries one unit into the next block.
    // A block (hi, lo) worth v = hi*b + lo + carry is re-expressed as
    // lo' - hi'*b, borrowing b^2 when v >= b.
    for (int carry = 0; carry < 2; ++carry) {
        for (int hi = 0; hi < b; ++hi) {
            for (int lo = 0; lo < b; ++lo) {
                int v = hi * b + lo + carry;
                TransducerEdge e;
                e.in = {hi, lo};
                if (v < b) {
                    e.out = {0, v};
                    e.to = 0;
                } else {
                    int w = b * b - v;
                    int q = w / b, r = w % b;
                    e.out = r == 0 ? FiniteWord{q, 0} : FiniteWord{q + 1, b - r};
                    e.to = 1;
                }
                t.edges[carry].push_back(e);
            }
        }
    }
    return t;
}

FiniteWord run_int_converter(const Transducer& t, const FiniteWord& w) {
    return run_right_sequential(t, w, 2);
}

int online_delay(const NumberField& f) {
    int D = max_digit(f);
    FieldElement lhs = f.mul_rat(f.add(f.beta(), f.one()), Rat(D));
    FieldElement g =
        f.sub(f.from_int(f.floor(f.beta()) + 1), f.beta());  // 1 - {beta}
    FieldElement pw = f.beta();
    for (int delta = 1; delta <= 64; ++delta) {
        if (f.compare(lhs, f.mul(g, pw)) <= 0) return delta;
        pw = f.mul(pw, f.beta());
    }
    fail(ErrorCode::CapExceeded, "delay inequality not satisfied up to 64");
}

FiniteWord online_convert(const NumberField& f, const EpWord& x, int n) {
    EpWord in = with_period(x);
    int top = max_digit(f);
    for (size_t i = 0; i < ep_tail_count(in) + 1; ++i) {
        int d = ep_digit(in, i);
        if (d < 0 || d > top)
            fail(ErrorCode::OutOfDomain, "digit outside the base alphabet");
    }

    int delta = online_delay(f);
    FieldElement beta = f.beta();
    FieldElement betainv = f.inv(beta);
    FieldElement l = neg_left_endpoint(f);
    FieldElement r = neg_right_endpoint(f);
    FieldElement upper = f.mul(beta, f.neg(l));  // beta^2/(beta+1)
    FieldElement betadinv = f.one();
    for (int k = 0; k < delta; ++k) betadinv = f.mul(betadinv, betainv);
    FieldElement qlow = f.sub(l, f.mul_rat(betadinv, Rat(top)));

    FieldElement q = f.zero();
    FieldElement w = betainv;
    for (int j = 1; j <= delta; ++j) {
        q = f.add(q, f.mul_rat(w, Rat(ep_digit(in, j - 1))));
        w = f.mul(w, betainv);
    }
    if (f.compare(q, r) >= 0)
        fail(ErrorCode::OutOfDomain, "input value escapes the domain");

    FiniteWord out;
    for (int j = 1; j <= n; ++j) {
        FieldElement term = f.mul_rat(betadinv, Rat(ep_digit(in, delta + j - 1)));
        FieldElement z = f.sub(j % 2 ? f.neg(term) : term, f.mul(beta, q));
        // Overflow emits floor(beta), one more than the largest input digit
        // when beta is an integer; outputs are not admissible in general.
        int y;
        if (f.compare(z, l) < 0)
            y = 0;
        else if (f.compare(z, upper) > 0)
            y = (int)f.floor(beta);
        else
            y = (int)f.floor(f.sub(z, l));
        q = f.sub(z, f.from_int(y));
        if (f.compare(q, qlow) < 0 || f.compare(q, r) >= 0)
            fail(ErrorCode::OutOfDomain, "remainder escapes its proven bounds");
        out.push_back(y);
    }
    return out;
}

Transducer build_online_transducer(const NumberField& f, std::size_t state_cap) {
    int delta = online_delay(f);
    int top = max_digit(f);
    FieldElement beta = f.beta();
    FieldElement betad = f.one();
    for (int k = 0; k < delta; ++k) betad = f.mul(betad, beta);
    FieldElement l = neg_left_endpoint(f);
    FieldElement r = neg_right_endpoint(f);
    FieldElement upper = f.mul(beta, f.neg(l));
    FieldElement lS = f.mul(betad, l);
    FieldElement rS = f.mul(betad, r);
    FieldElement upS = f.mul(betad, upper);
    FieldElement qlowS = f.sub(lS, f.from_int(top));

    // Remainders scaled by beta^delta; tag = level for transient states,
    // delta + parity for synchronous ones.
    std::map<std::pair<int, std::vector<Rat>>, int> index;
    std::vector<std::pair<int, FieldElement>> states;
    auto intern = [&](int tag, const FieldElement& v) {
        auto [it, fresh] =
            index.emplace(std::make_pair(tag, v.coords), (int)states.size());
        if (fresh) states.emplace_back(tag, v);
        check_cap(states.size(), state_cap);
        return it->second;
    };

    Transducer t;
    t.kind = TransducerKind::OnLine;
    t.delay = delta;
    intern(0, f.zero());
    for (size_t q = 0; q < states.size(); ++q) {
        auto [tag, val] = states[q];
        t.edges.emplace_back();
        if (tag < delta) {
            // beta^delta * q_j gains x * beta^(delta-j-1)
            FieldElement w = f.one();
            for (int k = 0; k < delta - tag - 1; ++k) w = f.mul(w, beta);
            for (int x = 0; x <= top; ++x) {
                FieldElement nv = f.add(val, f.mul_rat(w, Rat(x)));
                if (f.compare(nv, rS) >= 0) continue;  // value cannot stay in domain
                int tag2 = tag + 1 < delta ? tag + 1 : delta + 1;  // first parity odd
                t.edges[q].push_back({{x}, {}, intern(tag2, nv)});
            }
        } else {
            int parity = tag - delta;  // of the output index being produced
            for (int x = 0; x <= top; ++x) {
                FieldElement zS = f.sub(parity ? f.from_int(-x) : f.from_int(x),
                                        f.mul(beta, val));
                int y;
                if (f.compare(zS, lS) < 0)
                    y = 0;
                else if (f.compare(zS, upS) > 0)
                    y = (int)f.floor(f.beta());
                else
                    y = (int)f.floor(f.div(f.sub(zS, lS), betad));
                FieldElement nv = f.sub(zS, f.mul_rat(betad, Rat(y)));
                if (f.compare(nv, qlowS) < 0 || f.compare(nv, rS) >= 0)
                    fail(ErrorCode::OutOfDomain,
                         "remainder escapes its proven bounds");
                t.edges[q].push_back({{x}, {y}, intern(delta + 1 - parity, nv)});
            }
        }
    }
    t.num_states = (int)states.size();
    t.initial = 0;
    t.final_.resize(t.num_states);
    t.final_out.resize(t.num_states);
    t.payload.reserve(t.num_states);
    for (int q = 0; q < t.num_states; ++q) {
        t.final_[q] = states[q].first >= delta;
        t.payload.push_back(states[q].second);
        if (states[q].first < delta) ++t.num_transient;
    }
    return t;
}

Transducer build_quadratic_converter(int a) {
    if (a < 1) fail(ErrorCode::OutOfDomain, "need a >= 1");
    Transducer t;
    t.kind = TransducerKind::LeftSequential;
    t.num_states = 2;
    t.initial = 0;
    t.edges.resize(2);
    t.final_ = {true, true};
    t.final_out.resize(2);

    // State 0 carries no borrow, state 1 owes one unit at the next even
    // position (beta^2 = a*beta + 1 turns the overshoot of a block into
    // exactly one unit two positions later).
    for (int d = 0; d <= a; ++d) t.edges[0].push_back({{d, 0}, {d, 0}, 0});
    for (int c = 0; c <= a - 1; ++c)
        for (int e = 1; e <= a; ++e)
            t.edges[0].push_back({{c, e}, {c + 1, a - e}, 1});
    t.edges[1].push_back({{0, 0}, {0, a}, 1});
    for (int d = 0; d <= a; ++d)
        for (int e = 1; e <= a; ++e)
            t.edges[1].push_back({{d, e}, {d, a - e}, 1});
    for (int e = 1; e <= a; ++e) t.edges[1].push_back({{e, 0}, {e - 1, 0}, 0});
    return t;
}

EpWord run_quadratic_converter(const Transducer& t, const EpWord& x) {
    return run_left_sequential(t, x, 2);
}

namespace {

Transducer build_redundancy_core(const NumberField& f, int c,
                                 std::size_t state_cap, bool positive) {
    if (Int(c) < f.floor(f.beta()))
        fail(ErrorCode::OutOfDomain, "alphabet bound below floor(beta)");
    FieldElement beta = f.beta();
    FieldElement mult = positive ? beta : f.neg(beta);
    FieldElement bound = f.mul_rat(f.inv(f.sub(beta, f.one())), Rat(2 * c));
    FieldElement nbound = f.neg(bound);

    std::map<std::vector<Rat>, int> index;
    std::vector<FieldElement> states;
    auto intern = [&](const FieldElement& s) {
        auto [it, fresh] = index.emplace(s.coords, (int)states.size());
        if (fresh) states.push_back(s);
        check_cap(states.size(), state_cap);
        return it->second;
    };

    Transducer t;
    t.kind = TransducerKind::General;
    intern(f.zero());
    for (size_t q = 0; q < states.size(); ++q) {
        FieldElement base = f.mul(states[q], mult);
        t.edges.emplace_back();
        for (int e = -2 * c; e <= 2 * c; ++e) {
            FieldElement s2 = f.add(base, f.from_int(e));
            if (f.compare(s2, nbound) < 0 || f.compare(s2, bound) > 0) continue;
            int to = intern(s2);
            for (int a = std::max(-c, e - c); a <= std::min(c, e + c); ++a)
                t.edges[q].push_back({{a}, {a - e}, to});
        }
    }
    t.num_states = (int)states.size();
    t.initial = 0;
    t.final_.assign(t.num_states, true);
    t.final_out.resize(t.num_states);
    t.payload = std::move(states);
    return t;
}

}  // namespace

Transducer build_redundancy_transducer(const NumberField& f, int c,
                                       std::size_t state_cap) {
    return build_redundancy_core(f, c, state_cap, false);
}

Transducer build_pos_redundancy_transducer(const NumberField& f, int c,
                                           std::size_t state_cap) {
    return build_redundancy_core(f, c, state_cap, true);
}

bool redundancy_accepts(const Transducer& t, const FiniteWord& u,
                        const FiniteWord& v) {
    if (u.size() != v.size())
        fail(ErrorCode::LengthMismatch, "pair components differ in length");
    int state = t.initial;
    for (size_t i = 0; i < u.size(); ++i) {
        const TransducerEdge* hit = nullptr;
        for (const TransducerEdge& e : t.edges[state])
            if (e.in[0] == u[i] && e.out[0] == v[i]) {
                hit = &e;
                break;
            }
        if (!hit) return false;
        state = hit->to;
    }
    return t.final_[state];
}

namespace {

Automaton classical_digit_automaton(int b) {
    Automaton a;
    a.num_states = 1;
    a.alpha_min = 0;
    a.alpha_max = b - 1;
    a.initial = 0;
    a.trans.resize(1);
    a.final_ = {true};
    for (int d = 0; d < b; ++d) a.trans[0][d] = 0;
    return a;
}

int integer_base(const NumberField& f) {
    return (int)rat_num(f.as_rational(f.beta()));
}

Transducer restrict_outputs(const Transducer& r, const Automaton& d,
                            std::size_t state_cap) {
    std::map<std::pair<int, int>, int> index;
    std::vector<std::pair<int, int>> states;
    auto intern = [&](int rs, int ds) {
        auto [it, fresh] =
            index.emplace(std::make_pair(rs, ds), (int)states.size());
        if (fresh) states.emplace_back(rs, ds);
        check_cap(states.size(), state_cap);
        return it->second;
    };

    Transducer n;
    n.kind = TransducerKind::General;
    intern(r.initial, d.initial);
    for (size_t q = 0; q < states.size(); ++q) {
        auto [rs, ds] = states[q];
        n.edges.emplace_back();
        for (const TransducerEdge& e : r.edges[rs]) {
            auto it = d.trans[ds].find(e.out[0]);
            if (it == d.trans[ds].end()) continue;
            n.edges[q].push_back({e.in, e.out, intern(e.to, it->second)});
        }
    }
    n.num_states = (int)states.size();
    n.initial = 0;
    n.final_.assign(n.num_states, true);
    n.final_out.resize(n.num_states);
    for (auto& [rs, ds] : states) n.payload.push_back(r.payload[rs]);
    return n;
}

// Follows the unique value-preserving admissible output through the machine:
// nodes are (input phase, state); a node is alive when an infinite run leaves
// it; at every step the largest output digit with an alive target is the
// digit the greedy expansion picks.
EpWord greedy_output_run(const Transducer& n, const EpWord& w) {
    size_t m = w.pre.size(), L = w.per.size();
    size_t P = m + L;
    int S = n.num_states;
    auto digit_at = [&](size_t ph) { return ph < m ? w.pre[ph] : w.per[ph - m]; };
    auto next_phase = [&](size_t ph) {
        return ph < m ? ph + 1 : m + (ph - m + 1) % L;
    };

    size_t total = P * S;
    std::vector<char> reach(total, 0);
    std::vector<std::vector<std::pair<int, int>>> succ(total);  // (node, out digit)
    int start = (int)(0 * S + n.initial);
    reach[start] = 1;
    std::deque<int> queue{start};
    while (!queue.empty()) {
        int cur = queue.front();
        queue.pop_front();
        size_t ph = (size_t)cur / S;
        int st = cur % S;
        int a = digit_at(ph);
        int np = (int)next_phase(ph);
        for (const TransducerEdge& e : n.edges[st]) {
            if (e.in[0] != a) continue;
            int nxt = np * S + e.to;
            succ[cur].emplace_back(nxt, e.out[0]);
            if (!reach[nxt]) {
                reach[nxt] = 1;
                queue.push_back(nxt);
            }
        }
    }

    // Peel nodes that cannot continue forever.
    std::vector<int> outdeg(total, 0);
    std::vector<std::vector<int>> preds(total);
    for (size_t v = 0; v < total; ++v) {
        if (!reach[v]) continue;
        outdeg[v] = (int)succ[v].size();
        for (auto& [nxt, dig] : succ[v]) preds[nxt].push_back((int)v);
    }
    std::vector<char> alive(total, 0);
    for (size_t v = 0; v < total; ++v) alive[v] = reach[v];
    for (size_t v = 0; v < total; ++v)
        if (reach[v] && outdeg[v] == 0) queue.push_back((int)v);
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        if (!alive[v]) continue;
        alive[v] = 0;
        for (int p : preds[v])
            if (alive[p] && --outdeg[p] == 0) queue.push_back(p);
    }

    if (!alive[start])
        fail(ErrorCode::ValueOutOfInterval, "no admissible representation");

    std::map<int, size_t> visited;
    FiniteWord out;
    int cur = start;
    while (true) {
        auto it = visited.find(cur);
        if (it != visited.end()) {
            EpWord y;
            y.pre.assign(out.begin(), out.begin() + it->second);
            y.per.assign(out.begin() + it->second, out.end());
            return canonicalize(y);
        }
        visited.emplace(cur, out.size());
        int best = -1, bestnode = -1;
        for (auto& [nxt, dig] : succ[cur])
            if (alive[nxt] && dig > best) {
                best = dig;
                bestnode = nxt;
            }
        out.push_back(best);
        cur = bestnode;
    }
}

EpWord classical_neg_expansion(int b, Rat x, int cap) {
    std::map<Rat, size_t> seen;
    FiniteWord digits;
    while ((int)digits.size() <= cap) {
        auto it = seen.find(x);
        if (it != seen.end()) {
            EpWord w;
            w.pre.assign(digits.begin(), digits.begin() + it->second);
            w.per.assign(digits.begin() + it->second, digits.end());
            return canonicalize(w);
        }
        seen.emplace(x, digits.size());
        Rat t = Rat(-b) * x;
        Int d = floor_rat(t + Rat(b, b + 1));
        if (d > b - 1) d = b - 1;
        digits.push_back((int)d);
        x = t - Rat(d);
    }
    fail(ErrorCode::CapExceeded, "expansion did not close within the cap");
}

void check_value_in_interval(const NumberField& f, const FieldElement& v) {
    if (f.compare(v, neg_left_endpoint(f)) < 0 ||
        f.compare(v, neg_right_endpoint(f)) >= 0)
        fail(ErrorCode::ValueOutOfInterval, "value outside the base interval");
}

}  // namespace

Transducer build_normalization_transducer(const NumberField& f, int c,
                                          std::size_t state_cap) {
    Transducer r = build_redundancy_transducer(f, c, state_cap);
    Automaton d = f.degree() == 1 ? classical_digit_automaton(integer_base(f))
                                  : neg_shift_automaton(f);
    return restrict_outputs(r, d, state_cap);
}

EpWord normalize(const NumberField& f, const EpWord& w, int cap) {
    EpWord x = with_period(w);
    FieldElement v = eval_ep(f, x, BaseSign::Negative);
    check_value_in_interval(f, v);
    if (f.degree() == 1)
        return classical_neg_expansion(integer_base(f), f.as_rational(v), cap);
    return neg_orbit(f, v, cap);
}

EpWord normalize_via_transducer(const NumberField& f, const EpWord& w, int c,
                                std::size_t state_cap) {
    EpWord x = with_period(w);
    for (size_t i = 0; i < ep_tail_count(x) + 1; ++i)
        if (std::abs(ep_digit(x, i)) > c)
            fail(ErrorCode::OutOfDomain, "digit outside the alphabet");
    check_value_in_interval(f, eval_ep(f, x, BaseSign::Negative));
    return greedy_output_run(build_normalization_transducer(f, c, state_cap), x);
}

EpWord convert_neg_to_pos(const NumberField& f, const EpWord& w, int cap) {
    EpWord x = with_period(w);
    FieldElement v = eval_ep(f, x, BaseSign::Negative);
    if (f.sign(v) < 0) fail(ErrorCode::ValueOutOfInterval, "value is negative");
    check_value_in_interval(f, v);
    // Negating the odd-indexed digits gives a base beta representation of the
    // same value; its normalization is the greedy expansion of v.
    return pos_orbit(f, v, cap);
}

EpWord convert_neg_to_pos_via_transducer(const NumberField& f, const EpWord& w,
                                         std::size_t state_cap) {
    EpWord x = with_period(w);
    FieldElement v = eval_ep(f, x, BaseSign::Negative);
    if (f.sign(v) < 0) fail(ErrorCode::ValueOutOfInterval, "value is negative");
    check_value_in_interval(f, v);

    int top = max_digit(f);
    for (size_t i = 0; i < ep_tail_count(x) + 1; ++i) {
        int d = ep_digit(x, i);
        if (d < 0 || d > top)
            fail(ErrorCode::OutOfDomain, "digit outside the base alphabet");
    }

    if (x.pre.size() % 2) {
        x.pre.push_back(x.per[0]);
        std::rotate(x.per.begin(), x.per.begin() + 1, x.per.end());
    }
    if (x.per.size() % 2) {
        FiniteWord d = x.per;
        x.per.insert(x.per.end(), d.begin(), d.end());
    }
    for (size_t i = 0; i < x.pre.size(); i += 2) x.pre[i] = -x.pre[i];
    for (size_t i = 0; i < x.per.size(); i += 2) x.per[i] = -x.per[i];

    Transducer r =
        build_pos_redundancy_transducer(f, (int)f.floor(f.beta()), state_cap);
    Transducer n = restrict_outputs(r, pos_shift_automaton(f), state_cap);
    return greedy_output_run(n, x);
}

}  // namespace negabase
