#include "negabase/cli.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "negabase/expansion.hpp"
#include "negabase/selftest.hpp"
#include "negabase/shift_automata.hpp"
#include "negabase/transducers.hpp"

namespace negabase {

namespace {

struct UsageError {
    std::string msg;
};

Int parse_int(const std::string& s) {
    size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i == s.size()) throw UsageError{"cannot parse integer '" + s + "'"};
    for (size_t k = i; k < s.size(); ++k)
        if (!std::isdigit((unsigned char)s[k]))
            throw UsageError{"cannot parse integer '" + s + "'"};
    Int mag(s.substr(i));
    return s[0] == '-' ? Int(-mag) : mag;
}

Rat parse_rational(const std::string& s) {
    size_t slash = s.find('/');
    if (slash != std::string::npos) {
        Int num = parse_int(s.substr(0, slash));
        Int den = parse_int(s.substr(slash + 1));
        if (den == 0) throw UsageError{"zero denominator in '" + s + "'"};
        return Rat(num, den);
    }
    size_t dot = s.find('.');
    if (dot == std::string::npos) return Rat(parse_int(s));
    std::string head = s.substr(0, dot), tail = s.substr(dot + 1);
    bool neg = !head.empty() && head[0] == '-';
    if (!head.empty() && (head[0] == '-' || head[0] == '+')) head = head.substr(1);
    if (head.empty()) head = "0";
    Int scale = 1;
    for (char c : tail) {
        if (!std::isdigit((unsigned char)c))
            throw UsageError{"cannot parse number '" + s + "'"};
        scale *= 10;
    }
    if (tail.empty()) tail = "0";
    Rat v = Rat(parse_int(head)) + Rat(parse_int(tail), scale);
    return neg ? Rat(-v) : v;
}

IntPoly parse_poly(const std::string& s) {
    IntPoly coeffs;
    size_t start = 0;
    while (start <= s.size()) {
        size_t comma = s.find(',', start);
        std::string item = s.substr(
            start, comma == std::string::npos ? std::string::npos : comma - start);
        coeffs.push_back(parse_int(item));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return coeffs;
}

struct BaseArgs {
    int base = 0;
    std::string neg_poly, pos_poly, float_base;
};

void add_base_flags(CLI::App* cmd, BaseArgs& ba, bool with_float = false) {
    cmd->add_option("--base", ba.base,
                    "integer b >= 2; the negative base -b is used");
    cmd->add_option("--base-neg-poly", ba.neg_poly,
                    "minimal polynomial of beta, constant term first; "
                    "the base is -beta");
    cmd->add_option("--base-pos-poly", ba.pos_poly,
                    "minimal polynomial of beta; the base is beta");
    if (with_float)
        cmd->add_option("--base-float", ba.float_base,
                        "decimal approximation of beta (approximate mode)");
}

struct Resolved {
    std::optional<NumberField> field;
    BaseSign sign = BaseSign::Negative;
    bool is_float = false;
    Rat approx;
};

Resolved resolve_base(const BaseArgs& ba) {
    int count = (ba.base != 0) + !ba.neg_poly.empty() + !ba.pos_poly.empty() +
                !ba.float_base.empty();
    if (count != 1)
        throw UsageError{"exactly one of --base, --base-neg-poly, "
                         "--base-pos-poly, --base-float is required"};
    Resolved r;
    if (ba.base != 0) {
        if (ba.base < 2) throw UsageError{"--base must be at least 2"};
        r.field = NumberField::make({Int(-ba.base), Int(1)});
    } else if (!ba.neg_poly.empty()) {
        r.field = NumberField::make(parse_poly(ba.neg_poly));
    } else if (!ba.pos_poly.empty()) {
        r.field = NumberField::make(parse_poly(ba.pos_poly));
        r.sign = BaseSign::Positive;
    } else {
        r.is_float = true;
        r.approx = parse_rational(ba.float_base);
        if (r.approx <= 1) throw UsageError{"--base-float must exceed 1"};
    }
    return r;
}

EpWord parse_word_arg(const std::string& s) {
    if (s.find('(') != std::string::npos) return parse_ep_word(s);
    return EpWord{parse_finite_word(s), {}};
}

std::string fmt_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12f", v);
    return buf;
}

double approx_log_beta(const NumberField& f) {
    RatInterval iv = f.beta_enclosure(Rat(1, Int("1000000000000000")));
    return std::log(iv.mid().convert_to<double>());
}

void float_expand(std::ostream& out, std::ostream& err, const Rat& beta,
                  const Rat& x0, int n) {
    err << "warning: base taken as the rational " << beta
        << "; digits are approximate and periodicity is not meaningful\n";
    Rat l = -beta / (beta + 1), r = Rat(1) / (beta + 1);
    if (x0 < l || x0 >= r)
        fail(ErrorCode::ValueOutOfInterval, "value outside the base interval");
    Rat x = x0;
    FiniteWord digits;
    for (int i = 0; i < n; ++i) {
        Rat t = -beta * x;
        Int d = floor_rat(t + beta / (beta + 1));
        digits.push_back(d.convert_to<int>());
        x = t - Rat(d);
    }
    out << format_finite_word(digits) << "\n";
}

void automaton_json(std::ostream& out, const Automaton& a) {
    nlohmann::json j;
    j["states"] = a.num_states;
    j["initial"] = a.initial;
    j["alphabet"] = {a.alpha_min, a.alpha_max};
    j["finals"] = nlohmann::json::array();
    for (int q = 0; q < a.num_states; ++q)
        if (a.final_[q]) j["finals"].push_back(q);
    j["edges"] = nlohmann::json::array();
    for (int q = 0; q < a.num_states; ++q)
        for (const auto& [d, p] : a.trans[q])
            j["edges"].push_back({{"from", q}, {"label", d}, {"to", p}});
    out << j.dump(2) << "\n";
}

int dispatch(CLI::App& app, std::ostream& out, std::ostream& err);

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err) {
    CLI::App app{"expansions, shifts, and conversions in negative base"};
    app.require_subcommand(1);

    struct {
        std::string x;
        BaseArgs base;
        int n = -1;
        int cap = kDefaultOrbitCap;
    } expand;
    CLI::App* cmd = app.add_subcommand("expand", "digits of a real number");
    cmd->add_option("x", expand.x, "value, as p/q or a decimal")->required();
    add_base_flags(cmd, expand.base, true);
    cmd->add_option("-n,--digits", expand.n, "print exactly this many digits");
    cmd->add_option("--cap", expand.cap, "orbit step cap");

    struct {
        std::string n;
        int base = 0;
    } intc;
    cmd = app.add_subcommand("intconvert", "integer to negative base digits");
    cmd->add_option("n", intc.n, "integer to convert")->required();
    cmd->add_option("--base", intc.base, "integer b >= 2; output is base -b")
        ->required();

    struct {
        BaseArgs base;
        int cap = kDefaultOrbitCap;
    } classify, entropyc;
    cmd = app.add_subcommand("classify", "shift of the base: finite type or sofic");
    add_base_flags(cmd, classify.base);
    cmd->add_option("--cap", classify.cap, "orbit step cap");

    struct {
        BaseArgs base;
        bool dot = false, json = false;
        int cap = kDefaultOrbitCap;
    } autom;
    cmd = app.add_subcommand("automaton", "minimized shift automaton of the base");
    add_base_flags(cmd, autom.base);
    cmd->add_flag("--dot", autom.dot, "emit DOT");
    cmd->add_flag("--json", autom.json, "emit JSON");
    cmd->add_option("--cap", autom.cap, "orbit step cap");

    struct {
        std::string word;
        BaseArgs base;
        int bound = 0;
        int cap = kDefaultOrbitCap;
    } norm;
    cmd = app.add_subcommand("normalize",
                             "admissible expansion of the value of a word");
    cmd->add_option("word", norm.word, "digits, or pre(per) for a periodic word")
        ->required();
    add_base_flags(cmd, norm.base);
    cmd->add_option("--alphabet-bound", norm.bound,
                    "digit bound c; runs the normalization machine");
    cmd->add_option("--cap", norm.cap, "orbit step cap");

    struct {
        std::string word;
        BaseArgs base;
        int n = 20;
        bool delay = false;
    } onl;
    cmd = app.add_subcommand("online",
                             "stream conversion from base beta to base -beta");
    cmd->add_option("word", onl.word, "input digits, or pre(per)");
    add_base_flags(cmd, onl.base);
    cmd->add_option("-n,--digits", onl.n, "number of output digits");
    cmd->add_flag("--delay", onl.delay, "print the delay only");

    cmd = app.add_subcommand("entropy", "entropy of the shift and log beta");
    add_base_flags(cmd, entropyc.base);
    cmd->add_option("--cap", entropyc.cap, "orbit step cap");

    app.add_subcommand("selftest", "run the acceptance suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        auto subs = app.get_subcommands();
        out << (subs.empty() ? app.help() : subs[0]->help());
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (app.got_subcommand("expand")) {
            Resolved base = resolve_base(expand.base);
            if (base.is_float) {
                float_expand(out, err, base.approx, parse_rational(expand.x),
                             expand.n < 0 ? 20 : expand.n);
                return 0;
            }
            const NumberField& f = *base.field;
            FieldElement x = f.from_rational(parse_rational(expand.x));
            if (base.sign == BaseSign::Negative) {
                if (!neg_in_domain(f, x))
                    fail(ErrorCode::ValueOutOfInterval,
                         "value outside the base interval");
                if (expand.n >= 0)
                    out << format_finite_word(neg_digits(f, x, expand.n)) << "\n";
                else
                    out << format_ep_word(neg_orbit(f, x, expand.cap)) << "\n";
            } else {
                if (f.sign(x) < 0 || f.compare(x, f.one()) >= 0)
                    fail(ErrorCode::ValueOutOfInterval,
                         "value outside the base interval");
                if (expand.n >= 0)
                    out << format_finite_word(pos_digits(f, x, expand.n)) << "\n";
                else
                    out << format_ep_word(pos_orbit(f, x, expand.cap)) << "\n";
            }
        } else if (app.got_subcommand("intconvert")) {
            if (intc.base < 2) throw UsageError{"--base must be at least 2"};
            out << format_finite_word(int_negabase(parse_int(intc.n), intc.base))
                << "\n";
        } else if (app.got_subcommand("classify")) {
            Resolved base = resolve_base(classify.base);
            if (base.sign == BaseSign::Positive)
                throw UsageError{"classify describes the negative-base shift"};
            Classification c = classify_neg_shift(*base.field, classify.cap);
            switch (c.kind) {
                case ShiftClass::FiniteType: {
                    out << "finite-type; forbidden:";
                    for (size_t i = 0; i < c.forbidden.size(); ++i)
                        out << (i ? "," : "") << " "
                            << format_finite_word(c.forbidden[i]);
                    out << "\n";
                    break;
                }
                case ShiftClass::SoficNotFiniteType:
                    out << "sofic; not finite type\n";
                    break;
                case ShiftClass::NotSoficOrUndetected:
                    out << "not detected as sofic (orbit cap exceeded)\n";
                    break;
            }
        } else if (app.got_subcommand("automaton")) {
            Resolved base = resolve_base(autom.base);
            if (autom.dot && autom.json)
                throw UsageError{"choose one of --dot and --json"};
            Automaton a = minimize(base.sign == BaseSign::Negative
                                       ? neg_shift_automaton(*base.field, autom.cap)
                                       : pos_shift_automaton(*base.field, autom.cap));
            if (autom.dot)
                out << to_dot(a);
            else if (autom.json)
                automaton_json(out, a);
            else
                out << serialize(a);
        } else if (app.got_subcommand("normalize")) {
            Resolved base = resolve_base(norm.base);
            if (base.sign == BaseSign::Positive)
                throw UsageError{"normalize works in the negative base"};
            const NumberField& f = *base.field;
            EpWord w = parse_word_arg(norm.word);
            if (norm.bound > 0)
                out << format_ep_word(
                           normalize_via_transducer(f, w, norm.bound))
                    << "\n";
            else
                out << format_ep_word(normalize(f, w, norm.cap)) << "\n";
        } else if (app.got_subcommand("online")) {
            Resolved base = resolve_base(onl.base);
            const NumberField& f = *base.field;
            if (onl.delay) {
                out << "delay: " << online_delay(f) << "\n";
            } else {
                if (onl.word.empty())
                    throw UsageError{"online needs an input word"};
                out << format_finite_word(
                           online_convert(f, parse_word_arg(onl.word), onl.n))
                    << "\n";
            }
        } else if (app.got_subcommand("entropy")) {
            Resolved base = resolve_base(entropyc.base);
            Automaton a = base.sign == BaseSign::Negative
                              ? neg_shift_automaton(*base.field, entropyc.cap)
                              : pos_shift_automaton(*base.field, entropyc.cap);
            out << "entropy: " << fmt_double(entropy(a)) << "\n";
            out << "log beta: " << fmt_double(approx_log_beta(*base.field))
                << "\n";
        } else if (app.got_subcommand("selftest")) {
            return run_selftest(out) == 0 ? 0 : 1;
        }
    } catch (const UsageError& e) {
        err << "usage error: " << e.msg << "\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << error_code_name(e.code()) << ": " << e.what()
            << "\n";
        return 1;
    }
    return 0;
}

}  // namespace negabase
