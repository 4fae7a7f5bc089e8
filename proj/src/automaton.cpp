#include "negabase/automaton.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <set>
#include <sstream>

namespace negabase {

bool accepts_from(const Automaton& a, int state, const FiniteWord& w) {
    int q = state;
    for (int d : w) {
        auto it = a.trans[q].find(d);
        if (it == a.trans[q].end()) return false;
        q = it->second;
    }
    return true;
}

bool accepts(const Automaton& a, const FiniteWord& w) {
    int q = a.initial;
    for (int d : w) {
        auto it = a.trans[q].find(d);
        if (it == a.trans[q].end()) return false;
        q = it->second;
    }
    return a.final_[q];
}

bool accepts_anywhere(const Automaton& a, const FiniteWord& w) {
    for (int q = 0; q < a.num_states; ++q)
        if (accepts_from(a, q, w)) return true;
    return false;
}

Automaton product(const Automaton& x, const Automaton& y) {
    Automaton out;
    out.alpha_min = std::max(x.alpha_min, y.alpha_min);
    out.alpha_max = std::min(x.alpha_max, y.alpha_max);
    std::map<std::pair<int, int>, int> index;
    std::deque<std::pair<int, int>> queue;
    auto intern = [&](int qx, int qy) {
        auto [it, fresh] = index.emplace(std::make_pair(qx, qy), out.num_states);
        if (fresh) {
            ++out.num_states;
            out.trans.emplace_back();
            out.final_.push_back(x.final_[qx] && y.final_[qy]);
            queue.emplace_back(qx, qy);
        }
        return it->second;
    };
    out.initial = intern(x.initial, y.initial);
    while (!queue.empty()) {
        auto [qx, qy] = queue.front();
        queue.pop_front();
        int q = index.at({qx, qy});
        for (const auto& [d, tx] : x.trans[qx]) {
            auto it = y.trans[qy].find(d);
            if (it == y.trans[qy].end()) continue;
            out.trans[q][d] = intern(tx, it->second);
        }
    }
    return out;
}

namespace {

Automaton relabel(const Automaton& a, const std::vector<bool>& keep) {
    // BFS relabeling from the initial state (when kept) and then from the
    // remaining states in index order, for a deterministic result.
    std::vector<int> order;
    std::vector<int> newindex(a.num_states, -1);
    auto visit = [&](int root) {
        if (newindex[root] >= 0) return;
        std::deque<int> q{root};
        newindex[root] = (int)order.size();
        order.push_back(root);
        while (!q.empty()) {
            int s = q.front();
            q.pop_front();
            for (const auto& [d, t] : a.trans[s]) {
                if (!keep[t] || newindex[t] >= 0) continue;
                newindex[t] = (int)order.size();
                order.push_back(t);
                q.push_back(t);
            }
        }
    };
    if (keep[a.initial]) visit(a.initial);
    for (int s = 0; s < a.num_states; ++s)
        if (keep[s]) visit(s);

    Automaton out;
    out.alpha_min = a.alpha_min;
    out.alpha_max = a.alpha_max;
    out.num_states = (int)order.size();
    out.trans.resize(order.size());
    out.final_.resize(order.size());
    for (size_t i = 0; i < order.size(); ++i) {
        out.final_[i] = a.final_[order[i]];
        for (const auto& [d, t] : a.trans[order[i]])
            if (keep[t]) out.trans[i][d] = newindex[t];
    }
    out.initial = keep[a.initial] ? newindex[a.initial] : 0;
    return out;
}

}  // namespace

Automaton trim(const Automaton& a) {
    std::vector<bool> alive(a.num_states, true);
    bool changed = true;
    while (changed) {
        changed = false;
        for (int q = 0; q < a.num_states; ++q) {
            if (!alive[q]) continue;
            bool any = false;
            for (const auto& [d, t] : a.trans[q])
                if (alive[t]) any = true;
            if (!any) {
                alive[q] = false;
                changed = true;
            }
        }
    }
    return relabel(a, alive);
}

namespace {

// Coinductive coverage test: every word readable from q is readable from some
// state of S.  Cycles in the exploration are resolved optimistically, which
// computes the greatest fixpoint.
struct CoverCheck {
    const Automaton& a;
    std::map<std::pair<int, std::vector<int>>, bool> memo;
    std::set<std::pair<int, std::vector<int>>> active;

    bool covered(int q, std::vector<int> S) {
        std::sort(S.begin(), S.end());
        S.erase(std::unique(S.begin(), S.end()), S.end());
        if (std::binary_search(S.begin(), S.end(), q)) return true;
        auto key = std::make_pair(q, S);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        if (active.count(key)) return true;
        active.insert(key);
        bool ok = true;
        for (const auto& [d, r] : a.trans[q]) {
            std::vector<int> next;
            for (int s : S) {
                auto jt = a.trans[s].find(d);
                if (jt != a.trans[s].end()) next.push_back(jt->second);
            }
            if (next.empty() || !covered(r, std::move(next))) {
                ok = false;
                break;
            }
        }
        active.erase(key);
        memo[key] = ok;
        return ok;
    }
};

}  // namespace

Automaton minimize(const Automaton& a0) {
    Automaton a = trim(a0);
    if (a.num_states == 0) return a;

    // Moore partition refinement; missing edges are part of the signature.
    std::vector<int> cls(a.num_states, 0);
    for (int q = 0; q < a.num_states; ++q) cls[q] = a.final_[q] ? 0 : 1;
    while (true) {
        std::map<std::vector<int>, int> sig_index;
        std::vector<int> next(a.num_states);
        for (int q = 0; q < a.num_states; ++q) {
            std::vector<int> sig{cls[q]};
            for (const auto& [d, t] : a.trans[q]) {
                sig.push_back(d);
                sig.push_back(cls[t]);
            }
            auto [it, fresh] = sig_index.emplace(sig, (int)sig_index.size());
            next[q] = it->second;
        }
        if (next == cls) break;
        cls = next;
    }
    int ncls = 1 + *std::max_element(cls.begin(), cls.end());
    Automaton m;
    m.alpha_min = a.alpha_min;
    m.alpha_max = a.alpha_max;
    m.num_states = ncls;
    m.trans.resize(ncls);
    m.final_.assign(ncls, false);
    for (int q = 0; q < a.num_states; ++q) {
        if (a.final_[q]) m.final_[cls[q]] = true;
        for (const auto& [d, t] : a.trans[q]) m.trans[cls[q]][d] = cls[t];
    }
    m.initial = cls[a.initial];

    // Prune states that no other state feeds and whose factor language the
    // rest of the presentation already reads.
    std::vector<bool> keep(m.num_states, true);
    bool removed = true;
    while (removed) {
        removed = false;
        for (int q = 0; q < m.num_states && !removed; ++q) {
            if (!keep[q]) continue;
            int kept = 0;
            for (int s = 0; s < m.num_states; ++s) kept += keep[s] ? 1 : 0;
            if (kept <= 1) break;
            bool fed = false;
            for (int s = 0; s < m.num_states && !fed; ++s) {
                if (!keep[s] || s == q) continue;
                for (const auto& [d, t] : m.trans[s])
                    if (t == q) fed = true;
            }
            if (fed) continue;
            std::vector<int> others;
            for (int s = 0; s < m.num_states; ++s)
                if (keep[s] && s != q) others.push_back(s);
            // Coverage must hold in the pruned view, so hide q's row first.
            Automaton view = m;
            for (int s = 0; s < m.num_states; ++s) {
                if (!keep[s]) view.trans[s].clear();
                std::map<int, int> filtered;
                for (const auto& [d, t] : view.trans[s])
                    if (keep[t] || t == q) filtered[d] = t;
                view.trans[s] = filtered;
            }
            CoverCheck check{view, {}, {}};
            if (check.covered(q, others)) {
                keep[q] = false;
                removed = true;
            }
        }
    }
    return relabel(m, keep);
}

double spectral_radius(const Automaton& a) {
    if (a.num_states == 0)
        fail(ErrorCode::EmptyAutomaton, "spectral radius of empty automaton");
    int n = a.num_states;
    std::vector<std::vector<double>> mat(n, std::vector<double>(n, 0.0));
    for (int q = 0; q < n; ++q) {
        mat[q][q] += 1.0;  // shift by identity to damp periodicity
        for (const auto& [d, t] : a.trans[q]) mat[q][t] += 1.0;
    }
    std::vector<double> v(n, 1.0), w(n, 0.0);
    double prev = 0.0;
    for (long it = 0; it < 1000000; ++it) {
        double dot = 0.0, norm2 = 0.0, wmax = 0.0;
        for (int i = 0; i < n; ++i) {
            double s = 0.0;
            for (int j = 0; j < n; ++j) s += mat[i][j] * v[j];
            w[i] = s;
            dot += v[i] * s;
            norm2 += v[i] * v[i];
            wmax = std::max(wmax, std::abs(s));
        }
        double ray = dot / norm2;
        if (it > 0 && std::abs(ray - prev) <= 1e-12 * std::max(1.0, std::abs(ray)))
            return ray - 1.0;
        prev = ray;
        if (wmax == 0.0) return 0.0;  // unreachable: diagonal keeps w positive
        for (int i = 0; i < n; ++i) v[i] = w[i] / wmax;
    }
    fail(ErrorCode::NoConvergence, "power iteration did not converge");
}

double entropy(const Automaton& a) {
    double r = spectral_radius(a);
    return std::log(r);
}

bool factor_language_equal(const Automaton& x, const Automaton& y, int maxlen) {
    int lo = std::min(x.alpha_min, y.alpha_min);
    int hi = std::max(x.alpha_max, y.alpha_max);
    // depth-first enumeration of all nonempty words up to maxlen
    FiniteWord w{lo - 1};
    while (!w.empty()) {
        ++w.back();
        if (w.back() > hi) {
            w.pop_back();
            continue;
        }
        if (accepts_anywhere(x, w) != accepts_anywhere(y, w)) return false;
        if ((int)w.size() < maxlen) w.push_back(lo - 1);
    }
    return true;
}

std::string serialize(const Automaton& a) {
    std::ostringstream os;
    os << "negabase-automaton v1\n";
    os << "states " << a.num_states << "\n";
    os << "alphabet " << a.alpha_min << " " << a.alpha_max << "\n";
    os << "initial " << a.initial << "\n";
    os << "finals";
    for (int q = 0; q < a.num_states; ++q)
        if (a.final_[q]) os << " " << q;
    os << "\n";
    size_t m = 0;
    for (const auto& t : a.trans) m += t.size();
    os << "transitions " << m << "\n";
    for (int q = 0; q < a.num_states; ++q)
        for (const auto& [d, t] : a.trans[q])
            os << q << " " << d << " " << t << "\n";
    os << "end\n";
    return os.str();
}

Automaton parse_automaton(const std::string& text) {
    std::istringstream is(text);
    std::string word;
    auto expect = [&](const std::string& s) {
        if (!(is >> word) || word != s)
            fail(ErrorCode::ParseError, "automaton text: expected '" + s + "'");
    };
    expect("negabase-automaton");
    expect("v1");
    Automaton a;
    expect("states");
    if (!(is >> a.num_states) || a.num_states < 0)
        fail(ErrorCode::ParseError, "automaton text: bad state count");
    expect("alphabet");
    if (!(is >> a.alpha_min >> a.alpha_max))
        fail(ErrorCode::ParseError, "automaton text: bad alphabet");
    expect("initial");
    if (!(is >> a.initial))
        fail(ErrorCode::ParseError, "automaton text: bad initial state");
    expect("finals");
    a.trans.resize(a.num_states);
    a.final_.assign(a.num_states, false);
    while (is >> word && word != "transitions") {
        int q;
        try {
            q = std::stoi(word);
        } catch (const std::exception&) {
            fail(ErrorCode::ParseError, "automaton text: bad final state");
        }
        if (q < 0 || q >= a.num_states)
            fail(ErrorCode::ParseError, "automaton text: final out of range");
        a.final_[q] = true;
    }
    if (word != "transitions")
        fail(ErrorCode::ParseError, "automaton text: missing transitions");
    size_t m;
    if (!(is >> m)) fail(ErrorCode::ParseError, "automaton text: bad edge count");
    for (size_t i = 0; i < m; ++i) {
        int q, d, t;
        if (!(is >> q >> d >> t))
            fail(ErrorCode::ParseError, "automaton text: bad edge");
        if (q < 0 || q >= a.num_states || t < 0 || t >= a.num_states)
            fail(ErrorCode::ParseError, "automaton text: edge out of range");
        a.trans[q][d] = t;
    }
    expect("end");
    if (a.num_states > 0 && (a.initial < 0 || a.initial >= a.num_states))
        fail(ErrorCode::ParseError, "automaton text: initial out of range");
    return a;
}

std::string to_dot(const Automaton& a) {
    std::ostringstream os;
    os << "digraph shift {\n  rankdir=LR;\n  start [shape=none,label=\"\"];\n";
    for (int q = 0; q < a.num_states; ++q)
        os << "  " << q << " [shape="
           << (a.final_[q] ? "doublecircle" : "circle") << "];\n";
    if (a.num_states > 0) os << "  start -> " << a.initial << ";\n";
    for (int q = 0; q < a.num_states; ++q)
        for (const auto& [d, t] : a.trans[q])
            os << "  " << q << " -> " << t << " [label=\"" << d << "\"];\n";
    os << "}\n";
    return os.str();
}

}  // namespace negabase
