// Acceptance battery: one PASS/FAIL line per criterion.
//
//   acceptance            run all criteria
//   acceptance 4 7        run a selection

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "golden.hpp"
#include "oracle.hpp"
#include "ordlab/config.hpp"
#include "ordlab/encoders.hpp"
#include "ordlab/evaluator.hpp"
#include "ordlab/factorization.hpp"
#include "ordlab/nat_oracles.hpp"

using namespace ordlab;

namespace {

struct Outcome {
    bool pass;
    std::string detail;
};

const Ordinal w1 = add(Ordinal::omega(), Ordinal(1));

Ordinal P(unsigned i) { return pow(w1, i); }

const std::vector<Ordinal>& d1() {
    static const auto d = enumerate_domain(DomainParams{}, 100000);
    return d;
}

// 30 elements spread evenly over the domain.
std::vector<Ordinal> core() {
    const auto& d = d1();
    std::vector<Ordinal> out;
    for (std::size_t i = 0; i < 30; ++i) out.push_back(d[i * (d.size() - 1) / 29]);
    return out;
}

template <class... T>
std::string fmt(const char* f, T... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

// ---- 1: algebra ----------------------------------------------------------

Outcome algebra() {
    const auto& d = d1();
    std::vector<std::array<Ordinal, 3>> triples;
    std::mt19937_64 rng(20240501);
    std::uniform_int_distribution<std::size_t> pick(0, d.size() - 1);
    for (int i = 0; i < 10000; ++i) triples.push_back({d[pick(rng)], d[pick(rng)], d[pick(rng)]});
    auto c = core();
    for (const auto& a : c)
        for (const auto& b : c)
            for (const auto& e : c) triples.push_back({a, b, e});

    std::size_t assoc_add = 0, assoc_mul = 0, distrib = 0, cancel = 0, noncanon = 0;
    for (const auto& [a, b, e] : triples) {
        Ordinal ab = add(a, b), be = add(b, e);
        Ordinal l1 = add(ab, e), r1 = add(a, be);
        Ordinal mab = mul(a, b), mbe = mul(b, e);
        Ordinal l2 = mul(mab, e), r2 = mul(a, mbe);
        Ordinal mae = mul(a, e);
        Ordinal l3 = mul(a, be), r3 = add(mab, mae);
        for (const Ordinal* x : {&ab, &be, &l1, &r1, &mab, &mbe, &l2, &r2, &mae, &l3, &r3})
            if (!is_canonical(*x)) ++noncanon;
        if (l1 != r1) ++assoc_add;
        if (l2 != r2) ++assoc_mul;
        if (l3 != r3) ++distrib;
        if (!a.is_zero() && mab == mae && b != e) ++cancel;
    }
    bool ok = assoc_add + assoc_mul + distrib + cancel + noncanon == 0 && d.size() >= 300;
    return {ok, fmt("|D1|=%zu, %zu triples; violations: assoc+ %zu, assoc* %zu, distrib %zu, cancel %zu, "
                    "non-canonical %zu",
                    d.size(), triples.size(), assoc_add, assoc_mul, distrib, cancel, noncanon)};
}

// ---- 2: order ------------------------------------------------------------

Outcome order() {
    auto c = core();
    std::size_t tri = 0, trans = 0, mono = 0, sub = 0;
    for (const auto& a : c)
        for (const auto& b : c) {
            Order x = compare(a, b), y = compare(b, a);
            bool one = (x == Order::Less && y == Order::Greater) || (x == Order::Greater && y == Order::Less) ||
                       (x == Order::Equal && y == Order::Equal && a == b);
            if (!one) ++tri;
            // a < b iff a + v = b for some v > 0
            if (x != Order::Greater) {
                Ordinal v = left_sub(a, b);
                if (add(a, v) != b || (x == Order::Less) == v.is_zero()) ++sub;
            }
            for (const auto& e : c)
                if (x == Order::Less && compare(b, e) == Order::Less && compare(a, e) != Order::Less) ++trans;
        }
    for (const auto& a : d1())
        for (const auto& b : d1())
            if (add(a, b) < a) ++mono;
    bool ok = tri + trans + mono + sub == 0;
    return {ok, fmt("core 30: trichotomy violations %zu, transitivity %zu, left_sub %zu; D1 pairs with a+b < a: %zu",
                    tri, trans, sub, mono)};
}

// ---- 3: factorization ----------------------------------------------------

Outcome factorization() {
    std::size_t bad_round = 0, bad_law = 0, n = 0;
    std::vector<Ordinal> nz;
    for (const auto& a : d1()) {
        if (a.is_zero()) continue;
        nz.push_back(a);
        ++n;
        auto f = jacobsthal_factorize(a);
        if (!is_valid(f) || recompose(f) != a) ++bad_round;
    }
    std::mt19937_64 rng(99);
    auto xs = oracle::sample(nz, 10000, rng), ys = oracle::sample(nz, 10000, rng);
    for (std::size_t i = 0; i < xs.size(); ++i)
        if (product_of_factorizations(jacobsthal_factorize(xs[i]), jacobsthal_factorize(ys[i])) !=
            jacobsthal_factorize(mul(xs[i], ys[i])))
            ++bad_law;
    return {bad_round + bad_law == 0,
            fmt("round trip failures %zu / %zu; product law failures %zu / 10000", bad_round, n, bad_law)};
}

// ---- 4: commuting successors ---------------------------------------------

Outcome common_roots() {
    std::vector<Ordinal> succ;
    for (const auto& a : d1())
        if (!a.is_zero() && is_successor(a)) succ.push_back(a);
    std::size_t pairs = 0, commuting = 0, mismatch = 0, finite_mismatch = 0, bound = 0;
    std::string example;
    for (const auto& a : succ)
        for (const auto& b : succ) {
            ++pairs;
            bool c = mul(a, b) == mul(b, a);
            RootSearch r = successor_common_root(a, b, 6);
            bool found = r.status == RootStatus::Found;
            if (found && (pow(r.root->root, r.root->j) != a || pow(r.root->root, r.root->n) != b)) found = false;
            if (r.status == RootStatus::BoundExceeded) ++bound;
            commuting += c;
            if (c != found) {
                ++mismatch;
                if (a.is_finite() && b.is_finite()) ++finite_mismatch;
                if (example.empty()) example = to_string(a) + ", " + to_string(b);
            }
        }
    return {mismatch == 0,
            fmt("%zu successor pairs, %zu commuting; mismatches %zu (%zu between naturals, %zu infinite), "
                "bound exceeded %zu; first mismatch (%s)",
                pairs, commuting, mismatch, finite_mismatch, mismatch - finite_mismatch, bound,
                example.empty() ? "-" : example.c_str())};
}

// ---- 5: commutant of (w+1)^n (w^2+1) -------------------------------------

Outcome commutants() {
    const Ordinal w21 = add(Ordinal::omega_power(Ordinal(2)), Ordinal(1));
    std::size_t bad = 0, checked = 0;
    for (unsigned n = 0; n <= 2; ++n) {
        Ordinal g = mul(P(n), w21);
        std::vector<Ordinal> dom(d1());
        Ordinal acc = 1;
        for (unsigned r = 0; r <= 3; ++r, acc = mul(acc, g)) dom.push_back(acc);
        auto sols = lemma8_solution_set(n, 3);
        for (const auto& z : dom) {
            if (z.is_zero() || !is_successor(z)) continue;
            ++checked;
            bool commutes = mul(z, g) == mul(g, z);
            bool listed = std::find(sols.begin(), sols.end(), z) != sols.end();
            if (commutes != listed) ++bad;
        }
    }
    return {bad == 0, fmt("n in {0,1,2}: %zu successor candidates, %zu disagreements", checked, bad)};
}

// ---- 6: definable predicates ---------------------------------------------

Outcome predicates() {
    EvalConfig cfg = default_config();
    cfg.profile = "prop6";
    std::size_t bad = 0, forms = 0;
    std::string first;
    for (auto p : enc::all_predicates()) {
        std::vector<enc::Variant> vs{enc::Variant::Existential};
        if (enc::has_variants(p)) vs.push_back(enc::Variant::Universal);
        for (auto v : vs) {
            ++forms;
            GuidedChecker c(enc::build_predicate(p, v), cfg);
            for (const auto& a : d1())
                if (c.holds({{"x", a}}) != semantic_oracle(p, a)) {
                    ++bad;
                    if (first.empty()) first = std::string(enc::predicate_name(p)) + " at " + to_string(a);
                }
        }
    }
    std::size_t golden_bad = 0, golden_n = 0;
    for (const auto& e : golden::load()) {
        ++golden_n;
        std::string got = logic::to_string(logic::prefix_class(golden::build(e.key)));
        auto d = golden::declared(e.key);
        if (got != e.cls || (d && logic::to_string(*d) != e.cls)) ++golden_bad;
    }
    return {bad + golden_bad == 0,
            fmt("%zu formulas x %zu domain elements: %zu disagreements%s%s; golden classes %zu/%zu match", forms,
                d1().size(), bad, first.empty() ? "" : ", first ", first.c_str(), golden_n - golden_bad, golden_n)};
}

// ---- 7 and 10: divisibility / lcm / multiplication batteries -------------

struct Case {
    unsigned i, j, k;
    bool truth;
};

struct Battery {
    std::string name, profile;
    logic::Formula formula;
    std::vector<std::string> args;
    std::vector<Case> cases;
};

std::vector<Battery> batteries() {
    std::vector<Battery> out;
    Battery div{"div", "div", enc::div_formula(), {"x", "y"}, {}};
    Battery lcm{"lcm", "lcm", enc::lcm_formula(), {"x", "y", "z"}, {}};
    Battery mult{"mult", "mult", enc::mult_formula(), {"x", "y", "z"}, {}};
    for (unsigned i = 0; i <= 8; ++i)
        for (unsigned j = 0; j <= 8; ++j) {
            div.cases.push_back({i, j, 0, oracle::nat_divides(i, j)});
            for (unsigned k = 0; k <= 64; ++k) lcm.cases.push_back({i, j, k, oracle::nat_lcm(i, j) == k});
            std::set<unsigned> ks{i * j, i * j + 1};
            if (i * j > 0) ks.insert(i * j - 1);
            for (unsigned k : ks)
                if (k <= 64) mult.cases.push_back({i, j, k, Natural(i) * j == k});
        }
    out.push_back(std::move(div));
    out.push_back(std::move(lcm));
    out.push_back(std::move(mult));
    return out;
}

Assignment case_args(const Battery& b, const Case& c) {
    Assignment a{{b.args[0], P(c.i)}, {b.args[1], P(c.j)}};
    if (b.args.size() == 3) a[b.args[2]] = P(c.k);
    return a;
}

// Verdicts per battery, cached so criterion 10 can compare against them.
std::map<std::string, std::vector<bool>>& verdicts() {
    static std::map<std::string, std::vector<bool>> v;
    return v;
}

Outcome encoders() {
    std::string parts;
    std::size_t bad = 0;
    for (const auto& b : batteries()) {
        EvalConfig cfg = default_config();
        cfg.profile = b.profile;
        GuidedChecker c(b.formula, cfg);
        std::size_t m = 0;
        auto& vs = verdicts()[b.name];
        vs.clear();
        for (const auto& cs : b.cases) {
            bool h = c.holds(case_args(b, cs));
            vs.push_back(h);
            if (h != cs.truth) ++m;
        }
        bad += m;
        parts += fmt("%s%s %zu/%zu", parts.empty() ? "" : ", ", b.name.c_str(), b.cases.size() - m, b.cases.size());
    }
    return {bad == 0, "agreement with integer oracle: " + parts};
}

Outcome elimination() {
    std::string parts;
    std::size_t bad = 0, shape = 0;
    for (const auto& b : batteries()) {
        logic::Formula f = enc::eliminate_constants(b.formula);
        auto pc = logic::prefix_class(b.formula);
        auto pe = logic::prefix_class(f);
        std::size_t m = pc.count(logic::Quant::Exists);
        bool ok_shape = !logic::contains_constant(f) && pe.entries.size() == 2 &&
                        pe.entries[0].quant == logic::Quant::Exists && pe.entries[0].count == m + 8 &&
                        pe.entries[1].quant == logic::Quant::Forall && pe.entries[1].count == 6;
        if (!ok_shape) ++shape;
        EvalConfig cfg = default_config();
        cfg.profile = "elim_" + b.profile;
        GuidedChecker c(f, cfg);
        if (!verdicts().count(b.name)) {
            EvalConfig base = default_config();
            base.profile = b.profile;
            GuidedChecker pre(b.formula, base);
            auto& vs = verdicts()[b.name];
            for (const auto& cs : b.cases) vs.push_back(pre.holds(case_args(b, cs)));
        }
        const auto& vs = verdicts()[b.name];
        std::size_t mis = 0;
        for (std::size_t i = 0; i < b.cases.size(); ++i)
            if (c.holds(case_args(b, b.cases[i])) != vs[i]) ++mis;
        bad += mis;
        parts += fmt("%s%s %s %s, %zu/%zu agree", parts.empty() ? "" : "; ", b.name.c_str(),
                     logic::to_string(pe).c_str(), ok_shape ? "ok" : "WRONG SHAPE", b.cases.size() - mis,
                     b.cases.size());
    }
    return {bad + shape == 0, parts};
}

// ---- 8: the multiplication identity through lcm --------------------------

Outcome lcm_identity() {
    std::size_t bad = 0, negative = 0, odd = 0;
    for (unsigned x = 0; x <= 200; ++x)
        for (unsigned y = 0; y <= 200; ++y) {
            Natural big = nat_lcm(x + y, x + y + 1);
            Natural small = nat_lcm(x, x + 1) + nat_lcm(y, y + 1);
            if (big < small) {
                ++negative;
                continue;
            }
            Natural diff = big - small;
            if (diff % 2 != 0) ++odd;
            else if (diff / 2 != Natural(x) * y) ++bad;
            if (nat_lcm(x + y, x + y + 1) != oracle::nat_lcm(x + y, x + y + 1)) ++bad;
        }
    return {bad + negative + odd == 0,
            fmt("41201 pairs: wrong %zu, negative intermediate %zu, odd difference %zu", bad, negative, odd)};
}

// ---- 9: Diophantine equations --------------------------------------------

Outcome equations() {
    EvalConfig cfg = default_config();
    cfg.profile = "eq";
    std::string parts;
    std::size_t bad = 0;
    for (const char* text : {"(= (m x x) (m y))", "(= (m x y) (m z))"}) {
        DiophEquation e = parse_dioph(text);
        GuidedChecker c(enc::eq_formula(e), cfg);
        SearchBox box;
        box.fallback = 4;
        auto sols = solve_diophantine(e, box);
        std::size_t total = 0, mis = 0, holds = 0;
        std::vector<std::string> vars = e.variables();
        std::vector<unsigned> val(vars.size(), 0);
        for (;;) {
            NatAssignment na;
            Assignment oa;
            for (std::size_t i = 0; i < vars.size(); ++i) {
                na[vars[i]] = val[i];
                oa[vars[i]] = P(val[i]);
            }
            bool truth = std::find(sols.begin(), sols.end(), na) != sols.end();
            Verdict v = c.check(oa);
            ++total;
            holds += v.holds;
            if (v.holds != truth) ++mis;
            std::size_t k = vars.size();
            while (k > 0 && ++val[k - 1] > 4) val[--k] = 0;
            if (k == 0) break;
        }
        bad += mis;
        parts += fmt("%s%s: %zu assignments, %zu solutions, %zu holds, %zu mismatches", parts.empty() ? "" : "; ",
                     print_dioph(e).c_str(), total, sols.size(), holds, mis);
    }
    return {bad == 0, parts};
}

// ---- 11: word equations --------------------------------------------------

Outcome words() {
    EvalConfig cfg = default_config();
    const auto& fam = cfg.family("words").elements;
    std::string parts;
    std::size_t bad = 0;
    for (const char* text : {"xa=ax", "xab=abx", "xy=yx"}) {
        WordEquation we = parse_word_equation(text);
        auto enc_ = enc::encode_word_equation(we);
        logic::Formula sys = enc_.conjunction();
        auto vars = we.variables();
        std::size_t forward = 0, fwd_bad = 0, found = 0, back_bad = 0;
        for (const auto& s : solve_word_equation(we, 4)) {
            ++forward;
            Assignment a;
            for (const auto& [v, word] : s) a[std::string(1, v)] = enc::word_image(word);
            std::map<char, Ordinal> om;
            for (const auto& [v, word] : s) om[v] = enc::word_image(word);
            if (!eval_qf(sys, a) || enc::decode_ordinal_solution(om) != s) ++fwd_bad;
        }
        std::vector<std::size_t> idx(vars.size(), 0);
        for (;;) {
            Assignment a;
            std::map<char, Ordinal> om;
            for (std::size_t i = 0; i < vars.size(); ++i) {
                a[std::string(1, vars[i])] = fam[idx[i]];
                om[vars[i]] = fam[idx[i]];
            }
            if (eval_qf(sys, a)) {
                ++found;
                if (!word_solution_holds(we, enc::decode_ordinal_solution(om))) ++back_bad;
            }
            std::size_t k = vars.size();
            while (k > 0 && ++idx[k - 1] == fam.size()) idx[--k] = 0;
            if (k == 0) break;
        }
        bad += fwd_bad + back_bad;
        parts += fmt("%s%s: %zu word solutions (%zu bad), %zu ordinal solutions (%zu bad)", parts.empty() ? "" : "; ",
                     text, forward, fwd_bad, found, back_bad);
    }
    return {bad == 0, parts};
}

struct Criterion {
    int id;
    const char* name;
    Outcome (*run)();
    double limit;  // seconds, 0 = none
};

}  // namespace

int main(int argc, char** argv) {
    const Criterion all[] = {
        {1, "algebra", algebra, 60},         {2, "order", order, 0},
        {3, "factorization", factorization, 0}, {4, "commuting successors", common_roots, 0},
        {5, "commutants", commutants, 0},     {6, "definable predicates", predicates, 0},
        {7, "div/lcm/mult encoders", encoders, 120}, {8, "lcm identity", lcm_identity, 0},
        {9, "diophantine equations", equations, 0}, {10, "constant elimination", elimination, 0},
        {11, "word bridge", words, 0},
    };
    std::set<int> want;
    for (int i = 1; i < argc; ++i) want.insert(std::stoi(argv[i]));
    int failed = 0;
    for (const auto& c : all) {
        if (!want.empty() && !want.count(c.id)) continue;
        auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (c.limit > 0 && secs >= c.limit) {
            o.pass = false;
            o.detail += fmt("; over the %.0f s limit", c.limit);
        }
        failed += !o.pass;
        std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << c.id << " (" << c.name << "): " << o.detail
                  << fmt(" [%.2f s]", secs) << std::endl;
    }
    return failed == 0 ? 0 : 1;
}
