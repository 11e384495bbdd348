// ordlab: command-line front end.
//
// Exit status: 0 success, 1 semantic failure (verdict differs from --expect,
// oracle without solutions), 2 usage or parse error.

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <sstream>

#include "ordlab/config.hpp"
#include "ordlab/encoders.hpp"
#include "ordlab/evaluator.hpp"
#include "ordlab/factorization.hpp"
#include "ordlab/logic.hpp"
#include "ordlab/nat_oracles.hpp"
#include "ordlab/ordinal.hpp"
#include "ordlab/sources.hpp"

using namespace ordlab;
using json = nlohmann::ordered_json;

namespace {

struct UsageError : Error {
    using Error::Error;
};

struct SemanticFailure {};

struct Options {
    bool json = false;
    std::string config;
    std::string expect;
    unsigned bound = 6;
};

Options opt;

void emit(const json& j, const std::string& text) {
    if (opt.json)
        std::cout << j.dump(2) << '\n';
    else
        std::cout << text << '\n';
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream is(s);
    while (std::getline(is, cur, sep))
        if (!cur.empty()) out.push_back(cur);
    return out;
}

std::string ord_str(const Ordinal& a) { return to_string(a); }

json bindings_json(const Bindings& b) {
    json j = json::object();
    for (const auto& [n, v] : b) j[n] = ord_str(v);
    return j;
}

std::string bindings_text(const Bindings& b) {
    std::string s;
    for (const auto& [n, v] : b) s += (s.empty() ? "" : ", ") + n + "=" + ord_str(v);
    return s;
}

// ---- ord -----------------------------------------------------------------

void ord_eval(const std::string& e) {
    Ordinal a = parse_ordinal(e);
    emit({{"value", ord_str(a)}}, ord_str(a));
}

void ord_cmp(const std::string& a, const std::string& b) {
    Ordinal x = parse_ordinal(a), y = parse_ordinal(b);
    std::string r = x < y ? "<" : (x == y ? "=" : ">");
    emit({{"left", ord_str(x)}, {"right", ord_str(y)}, {"order", r}}, r);
}

void ord_factor(const std::string& e) {
    Ordinal a = parse_ordinal(e);
    Factorization f = jacobsthal_factorize(a);
    json j{{"value", ord_str(a)}, {"factorization", to_string(f)}};
    auto p = classify_prime(a);
    j["prime"] = p ? to_string(*p) : "no";
    emit(j, to_string(f));
}

void ord_commute(const std::string& a, const std::string& b) {
    bool c = commute(parse_ordinal(a), parse_ordinal(b));
    emit({{"commute", c}}, c ? "true" : "false");
}

void ord_root(const std::string& a, const std::string& b) {
    RootSearch r = successor_common_root(parse_ordinal(a), parse_ordinal(b), opt.bound);
    static const char* names[] = {"found", "not-commuting", "no-root", "bound-exceeded"};
    std::string st = names[static_cast<int>(r.status)];
    json j{{"status", st}};
    std::string text = st;
    if (r.root) {
        j["root"] = ord_str(r.root->root);
        j["j"] = r.root->j.str();
        j["n"] = r.root->n.str();
        text += ": root=" + ord_str(r.root->root) + " j=" + r.root->j.str() + " n=" + r.root->n.str();
    }
    emit(j, text);
    if (r.status != RootStatus::Found) throw SemanticFailure{};
}

// ---- logic ---------------------------------------------------------------

struct Named {
    logic::Formula formula;
    std::vector<std::string> args;  // free variables in argument order
    bool integer_args = false;      // arguments i denote (w+1)^i
    std::string profile;
};

std::vector<std::string> sorted_free(const logic::Formula& f) {
    auto fv = logic::free_vars(f);
    return {fv.begin(), fv.end()};
}

Named named_formula(const std::string& name, const std::string& variant, const std::string& text) {
    enc::Variant v = variant == "universal" ? enc::Variant::Universal : enc::Variant::Existential;
    if (variant != "existential" && variant != "universal") throw UsageError("--variant must be existential or universal");
    if (name == "div") return {enc::div_formula(), {"x", "y"}, true, "div"};
    if (name == "lcm") return {enc::lcm_formula(), {"x", "y", "z"}, true, "lcm"};
    if (name == "mult") return {enc::mult_formula(), {"x", "y", "z"}, true, "mult"};
    if (name == "theta") return {enc::theta(), {"x"}, false, "default"};
    if (name == "term") {
        Monomial m = split(text, ' ');
        std::sort(m.begin(), m.end());
        auto f = enc::term_formula(m, "y").formula;
        std::vector<std::string> args{"y"};
        for (const auto& x : sorted_free(f))
            if (x != "y") args.push_back(x);
        return {f, args, true, "eq"};
    }
    if (name == "eq") {
        auto f = enc::eq_formula(parse_dioph(text));
        return {f, sorted_free(f), true, "eq"};
    }
    if (name == "nat") {
        auto f = enc::translate_nat_existential(parse_nat_system(text));
        return {f, sorted_free(f), true, "nat"};
    }
    if (name == "text") {
        auto f = logic::parse_formula(text);
        return {f, sorted_free(f), false, "default"};
    }
    enc::Predicate p = enc::parse_predicate(name);
    return {enc::build_predicate(p, v), {"x"}, false, "prop6"};
}

void logic_build(const std::string& name, const std::string& variant, const std::string& text) {
    Named n = named_formula(name, variant, text);
    std::string cls = logic::to_string(logic::prefix_class(n.formula));
    emit({{"formula", logic::print_formula(n.formula)}, {"class", cls}}, logic::print_formula(n.formula));
}

void logic_prenex(const std::string& text) {
    auto f = logic::prenex(logic::parse_formula(text));
    emit({{"formula", logic::print_formula(f)}, {"class", logic::to_string(logic::prefix_class(f))}},
         logic::print_formula(f));
}

void logic_class(const std::string& text) {
    std::string cls = logic::to_string(logic::prefix_class(logic::parse_formula(text)));
    emit({{"class", cls}}, cls);
}

void logic_translate(const std::string& text) {
    auto f = enc::translate_nat_existential(parse_nat_system(text));
    emit({{"formula", logic::print_formula(f)}, {"class", logic::to_string(logic::prefix_class(f))}},
         logic::print_formula(f));
}

void logic_eliminate(const std::string& text) {
    auto f = enc::eliminate_constants(logic::parse_formula(text));
    emit({{"formula", logic::print_formula(f)}, {"class", logic::to_string(logic::prefix_class(f))}},
         logic::print_formula(f));
}

EvalConfig load_cfg() { return opt.config.empty() ? default_config() : load_config(opt.config); }

void logic_check(const std::string& name, const std::string& variant, const std::string& text,
                 const std::string& args, const std::string& profile, bool eliminate, bool ordinals) {
    Named n = named_formula(name, variant, text);
    if (eliminate) {
        n.formula = enc::eliminate_constants(n.formula);
        n.profile = "elim_" + n.profile;
    }
    EvalConfig cfg = load_cfg();
    cfg.profile = profile.empty() ? n.profile : profile;
    auto vals = split(args, ',');
    if (vals.size() != n.args.size())
        throw UsageError("expected " + std::to_string(n.args.size()) + " argument(s) for " + name);
    Assignment a;
    const Ordinal w1 = add(Ordinal::omega(), Ordinal(1));
    for (std::size_t i = 0; i < vals.size(); ++i) {
        if (n.integer_args && !ordinals)
            a[n.args[i]] = pow(w1, Natural(vals[i]));
        else
            a[n.args[i]] = parse_ordinal(vals[i]);
    }
    Verdict v = check_guided(n.formula, a, cfg);
    json j{{"verdict", verdict_name(v)}, {"class", logic::to_string(v.prefix)}, {"evidence", v.evidence()}};
    std::string text_out = verdict_name(v);
    if (!v.witnesses.empty()) {
        j["witnesses"] = bindings_json(v.witnesses);
        text_out += "\nwitnesses: " + bindings_text(v.witnesses);
    }
    if (!v.context.empty()) {
        j["context"] = bindings_json(v.context);
        text_out += "\ncontext: " + bindings_text(v.context);
    }
    if (!v.counterexample.empty()) {
        j["counterexample"] = bindings_json(v.counterexample);
        text_out += "\ncounterexample: " + bindings_text(v.counterexample);
    }
    j["uniform"] = v.uniform;
    if (!v.note.empty()) {
        j["note"] = v.note;
        text_out += "\nnote: " + v.note;
    }
    text_out += "\nevidence: " + v.evidence();
    emit(j, text_out);
    if (!opt.expect.empty() && (opt.expect == "holds") != v.holds) throw SemanticFailure{};
}

// ---- bridge --------------------------------------------------------------

void bridge_encode(const std::string& text) {
    auto e = enc::encode_word_equation(parse_word_equation(text));
    json ineqs = json::array();
    std::string out = logic::print_formula(e.equation);
    for (const auto& f : e.inequations) {
        ineqs.push_back(logic::print_formula(f));
        out += "\n" + logic::print_formula(f);
    }
    emit({{"equation", logic::print_formula(e.equation)}, {"inequations", ineqs}}, out);
}

void bridge_decode(const std::vector<std::string>& items) {
    std::map<char, Ordinal> sol;
    for (const auto& it : items) {
        auto p = it.find('=');
        if (p != 1) throw UsageError("expected VAR=ORDINAL with a single-letter variable, got '" + it + "'");
        sol[it[0]] = parse_ordinal(it.substr(2));
    }
    auto words = enc::decode_ordinal_solution(sol);
    json j = json::object();
    std::string out;
    for (const auto& [v, w] : words) {
        j[std::string(1, v)] = w;
        out += (out.empty() ? "" : "\n") + std::string(1, v) + "=" + (w.empty() ? "\"\"" : w);
    }
    emit(j, out);
}

// ---- oracle --------------------------------------------------------------

std::string nat_text(const NatAssignment& a) {
    std::string s;
    for (const auto& [n, v] : a) s += (s.empty() ? "" : "\n") + n + "=" + v.str();
    return s;
}

json nat_json(const NatAssignment& a) {
    json j = json::object();
    for (const auto& [n, v] : a) j[n] = v.str();
    return j;
}

void oracle_divsys(const std::string& text) {
    SearchBox box;
    box.fallback = opt.bound;
    auto r = sat_system(parse_nat_system(text), box);
    if (!r) {
        emit({{"solution", nullptr}}, "no solution");
        throw SemanticFailure{};
    }
    emit({{"solution", nat_json(*r)}}, r->empty() ? "(empty assignment)" : nat_text(*r));
}

void oracle_dioph(const std::string& text) {
    SearchBox box;
    box.fallback = opt.bound;
    auto sols = solve_diophantine(parse_dioph(text), box);
    json arr = json::array();
    std::string out;
    for (const auto& s : sols) {
        arr.push_back(nat_json(s));
        std::string line;
        for (const auto& [n, v] : s) line += (line.empty() ? "" : " ") + n + "=" + v.str();
        out += (out.empty() ? "" : "\n") + (line.empty() ? "(empty assignment)" : line);
    }
    emit({{"solutions", arr}}, sols.empty() ? "no solution" : out);
    if (sols.empty()) throw SemanticFailure{};
}

void oracle_wordeq(const std::string& text) {
    auto sols = solve_word_equation(parse_word_equation(text), opt.bound);
    json arr = json::array();
    std::string out;
    for (const auto& s : sols) {
        json j = json::object();
        std::string line;
        for (const auto& [v, w] : s) {
            j[std::string(1, v)] = w;
            line += (line.empty() ? "" : " ") + std::string(1, v) + "=" + (w.empty() ? "\"\"" : w);
        }
        arr.push_back(j);
        out += (out.empty() ? "" : "\n") + (line.empty() ? "(empty assignment)" : line);
    }
    emit({{"solutions", arr}}, sols.empty() ? "no solution" : out);
    if (sols.empty()) throw SemanticFailure{};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"ordlab: ordinal multiplication, definability encoders and guided evaluation"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_flag("--json", opt.json, "structured output");
    app.add_option("--config", opt.config, "evaluation config file");
    app.add_option("--expect", opt.expect, "expected verdict")->check(CLI::IsMember({"holds", "fails"}));
    app.add_option("--bound", opt.bound, "search bound");
    std::function<void()> action;
    std::string a1, a2, variant = "existential", text, args, profile;
    std::vector<std::string> items;
    bool eliminate = false, ordinals = false;

    auto* ord = app.add_subcommand("ord", "ordinal arithmetic")->require_subcommand(1);
    auto* oe = ord->add_subcommand("eval", "evaluate an ordinal expression");
    oe->add_option("expr", a1)->required();
    oe->callback([&] { action = [&] { ord_eval(a1); }; });
    auto* oc = ord->add_subcommand("cmp", "compare two ordinals");
    oc->add_option("a", a1)->required();
    oc->add_option("b", a2)->required();
    oc->callback([&] { action = [&] { ord_cmp(a1, a2); }; });
    auto* of = ord->add_subcommand("factor", "Jacobsthal factorization");
    of->add_option("expr", a1)->required();
    of->callback([&] { action = [&] { ord_factor(a1); }; });
    auto* om = ord->add_subcommand("commute", "do a and b commute");
    om->add_option("a", a1)->required();
    om->add_option("b", a2)->required();
    om->callback([&] { action = [&] { ord_commute(a1, a2); }; });
    auto* orr = ord->add_subcommand("root", "common root of two successor ordinals");
    orr->add_option("a", a1)->required();
    orr->add_option("b", a2)->required();
    orr->callback([&] { action = [&] { ord_root(a1, a2); }; });

    auto* lg = app.add_subcommand("logic", "formulas")->require_subcommand(1);
    auto* lb = lg->add_subcommand("build", "build a named formula");
    lb->add_option("name", a1, "zero one prime limprime omega omega_plus_one omega_square_plus_one theta div lcm mult term eq nat")
        ->required();
    lb->add_option("--variant", variant);
    lb->add_option("--text", text, "monomial, equation or system for term, eq, nat");
    lb->callback([&] { action = [&] { logic_build(a1, variant, text); }; });
    auto* lp = lg->add_subcommand("prenex", "prenex normal form");
    lp->add_option("formula", a1)->required();
    lp->callback([&] { action = [&] { logic_prenex(a1); }; });
    auto* lc = lg->add_subcommand("class", "quantifier prefix class");
    lc->add_option("formula", a1)->required();
    lc->callback([&] { action = [&] { logic_class(a1); }; });
    auto* lt = lg->add_subcommand("translate", "translate an existential divisibility system");
    lt->add_option("system", a1)->required();
    lt->callback([&] { action = [&] { logic_translate(a1); }; });
    auto* le = lg->add_subcommand("eliminate", "remove the constants from an E* A^6 formula");
    le->add_option("formula", a1)->required();
    le->callback([&] { action = [&] { logic_eliminate(a1); }; });
    auto* lk = lg->add_subcommand("check", "guided evaluation");
    lk->add_option("--formula", a1, "formula name, or 'text' with --text")->required();
    lk->add_option("--variant", variant);
    lk->add_option("--text", text);
    lk->add_option("--args", args, "comma-separated values for the free variables");
    lk->add_option("--profile", profile, "binding profile (default: from the formula name)");
    lk->add_flag("--eliminate", eliminate, "check the constant-free version");
    lk->add_flag("--ordinals", ordinals, "read integer arguments as ordinals instead of (w+1)-exponents");
    lk->callback([&] { action = [&] { logic_check(a1, variant, text, args, profile, eliminate, ordinals); }; });

    auto* br = app.add_subcommand("bridge", "word equations")->require_subcommand(1);
    auto* be = br->add_subcommand("encode", "encode a word equation");
    be->add_option("equation", a1)->required();
    be->callback([&] { action = [&] { bridge_encode(a1); }; });
    auto* bd = br->add_subcommand("decode", "decode ordinal values to words");
    bd->add_option("values", items, "VAR=ORDINAL ...")->required();
    bd->callback([&] { action = [&] { bridge_decode(items); }; });

    auto* orc = app.add_subcommand("oracle", "brute-force solvers")->require_subcommand(1);
    auto* od = orc->add_subcommand("divsys", "first solution of a divisibility system");
    od->add_option("system", a1)->required();
    od->callback([&] { action = [&] { oracle_divsys(a1); }; });
    auto* odi = orc->add_subcommand("dioph", "all solutions of a Diophantine equation");
    odi->add_option("equation", a1)->required();
    odi->callback([&] { action = [&] { oracle_dioph(a1); }; });
    auto* ow = orc->add_subcommand("wordeq", "all solutions of a word equation");
    ow->add_option("equation", a1)->required();
    ow->callback([&] { action = [&] { oracle_wordeq(a1); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    try {
        if (action) action();
        return 0;
    } catch (const SemanticFailure&) {
        return 1;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
