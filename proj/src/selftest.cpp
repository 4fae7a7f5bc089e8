#include "negabase/selftest.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <numeric>
#include <random>
#include <tuple>
#include <vector>

#include "negabase/expansion.hpp"
#include "negabase/shift_automata.hpp"
#include "negabase/transducers.hpp"

namespace negabase {

namespace {

struct CheckFailure {
    std::string what;
};

void require(bool cond, const std::string& what) {
    if (!cond) throw CheckFailure{what};
}

int rnd(std::mt19937& g, int lo, int hi) {
    return lo + (int)(g() % (unsigned)(hi - lo + 1));
}

NumberField golden_field() { return NumberField::make({-1, -1, 1}); }
NumberField golden_sq_field() { return NumberField::make({1, -3, 1}); }
NumberField int_field(int b) { return NumberField::make({-b, 1}); }

Automaton make_automaton(int n, int initial, int amin, int amax,
                         const std::vector<std::tuple<int, int, int>>& edges) {
    Automaton a;
    a.num_states = n;
    a.initial = initial;
    a.alpha_min = amin;
    a.alpha_max = amax;
    a.trans.resize(n);
    a.final_.assign(n, true);
    for (auto& [q, d, p] : edges) a.trans[q][d] = p;
    return a;
}

bool isomorphic(const Automaton& a, const Automaton& b) {
    if (a.num_states != b.num_states) return false;
    std::vector<int> perm(a.num_states);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        if (perm[a.initial] != b.initial) continue;
        bool ok = true;
        for (int q = 0; q < a.num_states && ok; ++q) {
            if (a.final_[q] != b.final_[perm[q]]) ok = false;
            if (ok && a.trans[q].size() != b.trans[perm[q]].size()) ok = false;
            for (auto it = a.trans[q].begin(); ok && it != a.trans[q].end(); ++it) {
                auto jt = b.trans[perm[q]].find(it->first);
                if (jt == b.trans[perm[q]].end() || jt->second != perm[it->second])
                    ok = false;
            }
        }
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

FieldElement abs_el(const NumberField& f, const FieldElement& v) {
    return f.sign(v) < 0 ? f.neg(v) : v;
}

// Random x = (num/den) * scale with 0 <= num < den.
FieldElement random_fraction_of(const NumberField& f, const FieldElement& scale,
                                std::mt19937& g) {
    int den = rnd(g, 3, 97);
    int num = rnd(g, 0, den - 1);
    return f.mul(f.from_rational(Rat(num, den)), scale);
}

void criterion_int_goldens() {
    require(int_negabase(3, 2) == (FiniteWord{1, 1, 1}), "<3> base -2");
    require(int_negabase(4, 2) == (FiniteWord{1, 0, 0}), "<4> base -2");
    require(int_negabase(6, 2) == (FiniteWord{1, 1, 0, 1, 0}), "<6> base -2");
    for (int b : {2, 3, 10})
        for (int n = -300; n <= 300; ++n)
            require(int_word_value(int_negabase(n, b), Int(-b)) == n,
                    "round trip " + std::to_string(n));
}

void criterion_converter_equivalence() {
    for (int b : {2, 3, 5}) {
        Transducer t = build_int_converter(b);
        for (int n = 0; n <= 500; ++n)
            require(run_int_converter(t, int_base_digits(n, b)) ==
                        int_negabase(n, b),
                    "converter mismatch at n=" + std::to_string(n));
    }
}

void criterion_golden_mean_shift() {
    NumberField g = golden_field();
    EpWord d = neg_endpoint_word(g);
    require(ep_equal(d, EpWord{{1}, {0}}), "left endpoint expansion");
    Automaton m = minimize(neg_shift_automaton(g));
    require(m.num_states == 2, "minimized state count");
    Automaton even = make_automaton(2, 0, 0, 1, {{0, 1, 0}, {0, 0, 1}, {1, 0, 0}});
    require(isomorphic(m, even), "even shift isomorphism");
    Classification c = classify_neg_shift(g);
    require(c.kind == ShiftClass::SoficNotFiniteType, "classification");
}

void criterion_golden_sq_shift() {
    NumberField g2 = golden_sq_field();
    require(ep_equal(neg_endpoint_word(g2), EpWord{{}, {2, 1}}),
            "left endpoint expansion");
    Classification c = classify_neg_shift(g2);
    require(c.kind == ShiftClass::FiniteType, "classification");
    require(c.forbidden == std::vector<FiniteWord>{{2, 0}}, "forbidden set");
    Automaton m = minimize(neg_shift_automaton(g2));
    Automaton expect = make_automaton(
        2, 0, 0, 2, {{0, 0, 0}, {0, 1, 0}, {0, 2, 1}, {1, 1, 0}, {1, 2, 1}});
    require(isomorphic(m, expect), "automaton isomorphism");
}

void criterion_entropy() {
    std::vector<NumberField> fields;
    fields.push_back(golden_field());
    fields.push_back(golden_sq_field());
    fields.push_back(int_field(2));
    fields.push_back(int_field(3));
    for (const NumberField& f : fields) {
        double h = entropy(neg_shift_automaton(f));
        RatInterval iv = f.beta_enclosure(Rat(1, Int(1000000000000000)));
        double logbeta = std::log(iv.mid().convert_to<double>());
        require(std::fabs(h - logbeta) <= 1e-9, "entropy vs log beta");
    }
}

void criterion_admissibility_crosscheck() {
    std::vector<NumberField> fields;
    fields.push_back(golden_field());
    fields.push_back(golden_sq_field());
    fields.push_back(int_field(2));
    for (const NumberField& f : fields) {
        Automaton a = neg_shift_automaton(f);
        std::vector<FiniteWord> level{{}};
        for (int len = 1; len <= 8; ++len) {
            std::vector<FiniteWord> next;
            for (const FiniteWord& w : level)
                for (int d = a.alpha_min; d <= a.alpha_max; ++d) {
                    FiniteWord v = w;
                    v.push_back(d);
                    require(accepts(a, v) == neg_factor(f, v),
                            "factor disagreement on " + format_finite_word(v));
                    next.push_back(std::move(v));
                }
            level = std::move(next);
        }
    }
}

void criterion_pisot_periodicity() {
    std::mt19937 g(101);
    for (bool sq : {false, true}) {
        NumberField f = sq ? golden_sq_field() : golden_field();
        int done = 0;
        while (done < 100) {
            int den = rnd(g, 1, 50);
            int num = rnd(g, -den, den);
            FieldElement x = f.from_rational(Rat(num, den));
            if (!neg_in_domain(f, x)) continue;
            ++done;
            EpWord w = neg_orbit(f, x);
            require(f.equal(eval_ep(f, w, BaseSign::Negative), x),
                    "round trip of " + std::to_string(num) + "/" +
                        std::to_string(den));
        }
    }
}

void criterion_online_bounds() {
    require(online_delay(golden_field()) == 4, "delay for the golden field");
    require(online_delay(int_field(2)) == 2, "delay for base 2");
    require(online_delay(int_field(3)) == 2, "delay for base 3");
    std::mt19937 g(103);
    for (bool quad : {true, false}) {
        NumberField f = quad ? golden_field() : int_field(2);
        int delta = online_delay(f);
        FieldElement beta = f.beta();
        FieldElement r = neg_right_endpoint(f);
        int n = 20;
        for (int trial = 0; trial < 100; ++trial) {
            FieldElement x = random_fraction_of(f, r, g);
            FiniteWord y = online_convert(f, pos_orbit(f, x), n);
            FieldElement diff =
                abs_el(f, f.sub(x, eval_finite(f, y, BaseSign::Negative)));
            FieldElement bound = f.neg(neg_left_endpoint(f));  // beta/(beta+1)
            FieldElement pw = f.one();
            for (int k = 0; k < delta; ++k) pw = f.mul(pw, beta);
            bound = f.add(bound, f.div(f.from_int(f.floor(beta)), pw));
            for (int k = 0; k < n; ++k) bound = f.div(bound, beta);
            require(f.compare(diff, bound) <= 0, "residual bound");
        }
    }
}

void criterion_online_transducer() {
    std::mt19937 g(107);
    for (bool quad : {false, true}) {
        NumberField f = quad ? golden_field() : int_field(2);
        Transducer t = build_online_transducer(f);
        FieldElement r = neg_right_endpoint(f);
        for (int trial = 0; trial < 100; ++trial) {
            FieldElement x = random_fraction_of(f, r, g);
            EpWord xw = pos_orbit(f, x);
            require(run_online_transducer(t, xw, 15) == online_convert(f, xw, 15),
                    "run mismatch");
        }
        // conjugate norm bound M_i for every stored remainder (states hold
        // beta^delta * q)
        int delta = t.delay;
        Rat fl = Rat(f.floor(f.beta()));
        for (int i = 0; i < f.num_conjugates(); ++i) {
            for (const FieldElement& q : t.payload) {
                bool decided = false;
                Rat eps(1, 10000000000LL);
                for (int attempt = 0; attempt < 3 && !decided; ++attempt) {
                    SqrtBounds bmod = f.conjugate_modulus(i, eps);
                    SqrtBounds qmod = f.element_conjugate_modulus(q, i, eps);
                    if (bmod.lb > 0 && bmod.ub < 1) {
                        Rat powlb = 1, powub = 1;
                        for (int k = 0; k < delta; ++k) {
                            powlb *= bmod.lb;
                            powub *= bmod.ub;
                        }
                        Rat lhs = qmod.ub / powlb;  // upper bound of |q(b_i)|
                        Rat mi = fl * (1 + 1 / powub) / (1 - bmod.lb);
                        if (lhs <= mi) decided = true;
                    }
                    eps /= 1000000;
                }
                require(decided, "conjugate norm bound");
            }
        }
    }
}

void criterion_normalization() {
    NumberField f2 = int_field(2);
    EpWord w{{0}, {0, 1}};
    EpWord want{{1}, {1, 0}};
    require(normalize(f2, w) == want, "base -2 identity, exact path");
    require(normalize_via_transducer(f2, w, 2) == want,
            "base -2 identity, transducer path");

    NumberField g = golden_field();
    std::mt19937 rng(109);
    int done = 0;
    while (done < 100) {
        EpWord w2;
        for (int i = 0; i < 8; ++i) w2.pre.push_back(rnd(rng, -1, 1));
        for (int i = 0; i < 3; ++i) w2.per.push_back(rnd(rng, -1, 1));
        FieldElement v = eval_ep(g, w2, BaseSign::Negative);
        if (!neg_in_domain(g, v)) continue;
        ++done;
        EpWord exact = normalize(g, w2);
        EpWord machine = normalize_via_transducer(g, w2, 1);
        require(ep_equal(exact, machine), "path agreement");
        require(neg_admissible(g, machine), "admissible output");
        require(g.equal(eval_ep(g, machine, BaseSign::Negative), v),
                "value preserved");
    }
}

void criterion_quadratic_converter() {
    for (int a : {1, 2}) {
        NumberField f = NumberField::make({-1, -a, 1});
        Transducer t = build_quadratic_converter(a);
        FieldElement beta = f.beta();
        std::mt19937 g(113 + a);
        for (int trial = 0; trial < 100; ++trial) {
            int d0 = rnd(g, 0, a);
            FieldElement x = d0 == a
                                 ? random_fraction_of(f, f.inv(beta), g)
                                 : random_fraction_of(f, f.one(), g);
            EpWord frac = pos_orbit(f, x);
            EpWord in{{d0}, frac.per};
            in.pre.insert(in.pre.end(), frac.pre.begin(), frac.pre.end());
            EpWord out = run_quadratic_converter(t, in);
            // compare 30 unrolled digits; each tail is geometric with ratio
            // 1/beta and digits at most a
            FieldElement vin = f.zero(), vout = f.zero(), pw = f.one();
            FieldElement binv = f.inv(beta);
            for (int i = 0; i < 30; ++i) {
                vin = f.add(vin, f.mul_rat(pw, Rat(ep_digit(in, i))));
                int sign = i % 2 ? -1 : 1;
                vout = f.add(vout, f.mul_rat(pw, Rat(sign * ep_digit(out, i))));
                pw = f.mul(pw, binv);
            }
            // pw = beta^-30; |tails| <= a * beta^-30 * beta/(beta-1) each
            FieldElement tail = f.mul_rat(
                f.div(f.mul(pw, beta), f.sub(beta, f.one())), Rat(2 * a));
            require(f.compare(abs_el(f, f.sub(vin, vout)), tail) <= 0,
                    "truncated values differ beyond the tail bound");
            FieldElement exact_in =
                f.mul(beta, eval_ep(f, in, BaseSign::Positive));
            FieldElement exact_out =
                f.mul(f.neg(beta), eval_ep(f, out, BaseSign::Negative));
            require(f.equal(exact_in, exact_out), "exact value preservation");
        }
    }
}

void criterion_non_pisot() {
    NumberField s = NumberField::make({-2, 0, 1});
    require(!s.is_pisot(), "sqrt(2) reported as Pisot");
    bool threw = false;
    try {
        build_redundancy_transducer(s, 1, 10000);
    } catch (const Error& e) {
        threw = e.code() == ErrorCode::StateCapExceeded;
    }
    require(threw, "redundancy construction should exceed the cap");
}

struct Criterion {
    const char* desc;
    void (*run)();
};

}  // namespace

int run_selftest(std::ostream& out) {
    const Criterion criteria[] = {
        {"integer negabase goldens and value round-trips", criterion_int_goldens},
        {"right-sequential converter equals int_negabase", criterion_converter_equivalence},
        {"golden mean: endpoint word, even shift, sofic not SFT", criterion_golden_mean_shift},
        {"golden mean squared: forbidden factor 20, two-state SFT", criterion_golden_sq_shift},
        {"shift entropy equals log beta", criterion_entropy},
        {"automaton acceptance matches the alternate-order factor test", criterion_admissibility_crosscheck},
        {"rational orbits are eventually periodic and eval back exactly", criterion_pisot_periodicity},
        {"on-line delays and residual bound after 20 digits", criterion_online_bounds},
        {"on-line transducer: run equivalence and conjugate norms", criterion_online_transducer},
        {"normalization: identity, machine = exact path, admissible", criterion_normalization},
        {"quadratic converter preserves values", criterion_quadratic_converter},
        {"non-Pisot honesty: is_pisot false, state cap exceeded", criterion_non_pisot},
    };
    int failures = 0;
    int n = 0;
    for (const Criterion& c : criteria) {
        ++n;
        std::string note;
        bool ok = true;
        try {
            c.run();
        } catch (const CheckFailure& e) {
            ok = false;
            note = e.what;
        } catch (const std::exception& e) {
            ok = false;
            note = e.what();
        }
        out << "criterion " << std::setw(2) << n << ": "
            << (ok ? "PASS" : "FAIL") << " - " << c.desc;
        if (!ok) out << " (" << note << ")";
        out << "\n";
        if (!ok) ++failures;
    }
    out << (12 - failures) << " of 12 criteria passed\n";
    return failures;
}

}  // namespace negabase
