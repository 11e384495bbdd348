#include "ordlab/encoders.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace ordlab::enc {

using namespace logic;

namespace {

Term c1() { return cst(Constant::One); }
Term cw() { return cst(Constant::Omega); }
Term cw1() { return cst(Constant::OmegaPlusOne); }
Term cw21() { return cst(Constant::OmegaSquarePlusOne); }

Term mul(const Term& a, const Term& b) { return prod(a, b); }
Term mul(const Term& a, const Term& b, const Term& c) { return prod({a, b, c}); }

}  // namespace

const std::vector<Predicate>& all_predicates() {
    static const std::vector<Predicate> ps{Predicate::Zero,  Predicate::One,          Predicate::Prime,
                                           Predicate::LimPrime, Predicate::Omega, Predicate::OmegaPlusOne,
                                           Predicate::OmegaSquarePlusOne};
    return ps;
}

std::string_view predicate_name(Predicate p) {
    switch (p) {
        case Predicate::Zero: return "zero";
        case Predicate::One: return "one";
        case Predicate::Prime: return "prime";
        case Predicate::LimPrime: return "limprime";
        case Predicate::Omega: return "omega";
        case Predicate::OmegaPlusOne: return "omega_plus_one";
        case Predicate::OmegaSquarePlusOne: return "omega_square_plus_one";
    }
    return "?";
}

Predicate parse_predicate(std::string_view name) {
    for (Predicate p : all_predicates())
        if (predicate_name(p) == name) return p;
    throw Error("unknown predicate '" + std::string(name) + "'");
}

bool has_variants(Predicate p) {
    return p == Predicate::Zero || p == Predicate::One || p == Predicate::LimPrime;
}

Formula theta(const Term& x) {
    return land({eq(mul(x, cw1()), mul(cw1(), x)), neq(mul(x, cw1()), x)});
}

Formula theta(const std::string& x) { return theta(var(x)); }

Formula matrix_A(const Term& x, const Term& y, const Term& z) {
    return land({neq(mul(x, x), x), implies(land({neq(mul(y, y), y), eq(x, mul(z, y))}), eq(y, x))});
}

Formula matrix_B(const Term& x, const Term& t) {
    return land({neq(mul(t, t), t), eq(mul(t, x), x)});
}

Formula matrix_C(const Term& x, const Term& y, const Term& z, const Term& t) {
    return land({matrix_A(x, y, z), matrix_B(x, t)});
}

Formula matrix_D(const Term& x, const Term& y, const Term& z) {
    return implies(land({eq(mul(y, x), x), eq(mul(z, x), x)}), eq(mul(y, z), mul(z, y)));
}

Formula matrix_E(const Term& x, const Term& y, const Term& z, const Term& t) {
    return land({matrix_C(x, y, z, t), matrix_D(x, y, z)});
}

Formula matrix_F(const Term& x, const Term& y, const Term& z, const Term& u, const Term& t) {
    return land({matrix_A(x, y, z), matrix_E(u, y, z, t), eq(mul(x, u), mul(u, u)), neq(mul(x, u), mul(u, x))});
}

Formula matrix_G(const Term& x, const Term& y, const Term& z, const Term& u, const Term& t) {
    return land(
        {matrix_A(x, y, z), matrix_E(u, y, z, t), eq(mul(x, u), mul(u, u, u)), neq(mul(x, u), mul(u, x))});
}

Formula build_predicate(Predicate p, Variant v, const std::string& xn) {
    NameSupply names({xn});
    const std::string yn = names.fresh("y"), zn = names.fresh("z"), tn = names.fresh("t"), un = names.fresh("u");
    Term x = var(xn), y = var(yn), z = var(zn), t = var(tn), u = var(un);
    const bool ex = v == Variant::Existential;
    switch (p) {
        case Predicate::Zero:
            if (ex) return exists({yn}, land({neq(mul(y, y), y), eq(mul(x, y), x)}));
            return forall({yn}, eq(mul(x, y), x));
        case Predicate::One:
            if (ex) return land({eq(mul(x, x), x), exists({yn}, neq(mul(x, y), x))});
            return forall({yn}, eq(mul(x, y), y));
        case Predicate::Prime: return forall({yn, zn}, matrix_A(x, y, z));
        case Predicate::LimPrime:
            if (ex) return exists({tn}, forall({yn, zn}, matrix_C(x, y, z, t)));
            return forall({yn, zn}, exists({tn}, matrix_C(x, y, z, t)));
        case Predicate::Omega: return exists({tn}, forall({yn, zn}, matrix_E(x, y, z, t)));
        case Predicate::OmegaPlusOne: return exists({un, tn}, forall({yn, zn}, matrix_F(x, y, z, u, t)));
        case Predicate::OmegaSquarePlusOne: return exists({un, tn}, forall({yn, zn}, matrix_G(x, y, z, u, t)));
    }
    throw Error("unknown predicate");
}

PrefixClass expected_class(Predicate p, Variant v) {
    const bool ex = v == Variant::Existential;
    switch (p) {
        case Predicate::Zero:
        case Predicate::One: return parse_prefix_class(ex ? "E^1" : "A^1");
        case Predicate::Prime: return parse_prefix_class("A^2");
        case Predicate::LimPrime: return parse_prefix_class(ex ? "E^1 A^2" : "A^2 E^1");
        case Predicate::Omega: return parse_prefix_class("E^1 A^2");
        case Predicate::OmegaPlusOne:
        case Predicate::OmegaSquarePlusOne: return parse_prefix_class("E^2 A^2");
    }
    throw Error("unknown predicate");
}

// -- divisibility, lcm, multiplication -------------------------------------

Formula div_matrix(const Term& x, const Term& y, const Term& z, const Term& t) {
    Formula d = land({theta(x), theta(y), eq(x, mul(t, cw1(), cw1())),
                      eq(prod({z, t, cw21()}), prod({t, cw21(), z})), eq(mul(y, cw()), mul(z, cw()))});
    return lor({land({eq(x, cw1()), eq(mul(y, cw1()), mul(cw1(), y))}), land({eq(x, c1()), eq(y, c1())}), d});
}

Formula div_formula() {
    return exists({"z", "t"}, div_matrix(var("x"), var("y"), var("z"), var("t")));
}

Formula EAForm::formula() const {
    return build_prenex({{Quant::Exists, exists}, {Quant::Forall, forall}}, matrix);
}

std::vector<std::string> fresh_universals(NameSupply& names) {
    std::vector<std::string> out;
    for (const char* b : {"v", "vzx", "vtx", "vzy", "vty", "w"}) out.push_back(names.fresh(b));
    return out;
}

EAForm lcm_form(const Term& x, const Term& y, const Term& z, NameSupply& names,
                const std::vector<std::string>& universals) {
    if (universals.size() != 6) throw Error("lcm_form needs six universal variables");
    EAForm out;
    for (const char* b : {"zx", "tx", "zy", "ty"}) out.exists.push_back(names.fresh(b));
    out.forall = universals;
    auto e = [](const std::string& n) { return var(n); };
    const auto& u = out.exists;
    const auto& vv = universals;
    Term v = e(vv[0]);
    Formula multiple_is_not_below =
        lor({lnot(div_matrix(x, v, e(vv[1]), e(vv[2]))), lnot(div_matrix(y, v, e(vv[3]), e(vv[4]))),
             eq(mul(v, cw()), mul(z, cw())), eq(v, c1()), neq(mul(e(vv[5]), v, cw()), mul(z, cw()))});
    out.matrix = land({div_matrix(x, z, e(u[0]), e(u[1])), div_matrix(y, z, e(u[2]), e(u[3])),
                       lor({neq(z, c1()), eq(x, c1()), eq(y, c1())}), multiple_is_not_below});
    return out;
}

EAForm mult_form(const Term& x, const Term& y, const Term& z, NameSupply& names,
                 const std::vector<std::string>& universals) {
    std::string r1 = names.fresh("r"), r2 = names.fresh("r"), r3 = names.fresh("r");
    Term xy = mul(x, y);
    EAForm l1 = lcm_form(x, mul(x, cw1()), var(r1), names, universals);
    EAForm l2 = lcm_form(y, mul(y, cw1()), var(r2), names, universals);
    EAForm l3 = lcm_form(xy, mul(xy, cw1()), var(r3), names, universals);
    EAForm out;
    out.exists = {r1, r2, r3};
    for (const auto* l : {&l1, &l2, &l3}) out.exists.insert(out.exists.end(), l->exists.begin(), l->exists.end());
    out.forall = universals;
    out.matrix = land({eq(prod({z, z, var(r1), var(r2)}), var(r3)), l3.matrix, l1.matrix, l2.matrix});
    return out;
}

Formula lcm_formula() {
    NameSupply names({"x", "y", "z"});
    auto us = fresh_universals(names);
    return lcm_form(var("x"), var("y"), var("z"), names, us).formula();
}

Formula mult_formula() {
    NameSupply names({"x", "y", "z"});
    auto us = fresh_universals(names);
    return mult_form(var("x"), var("y"), var("z"), names, us).formula();
}

// -- terms and equations ---------------------------------------------------

EAForm term_form(const Monomial& w, const std::string& result, NameSupply& names,
                 const std::vector<std::string>& universals) {
    EAForm out;
    out.forall = universals;
    if (w.empty()) {
        out.matrix = eq(var(result), cw1());
        return out;
    }
    if (w.size() == 1) {
        out.matrix = eq(var(result), var(w[0]));
        return out;
    }
    std::vector<Formula> parts;
    Term prev = var(w[0]);
    for (std::size_t i = 1; i < w.size(); ++i) {
        std::string target = result;
        if (i + 1 < w.size()) {
            target = names.fresh("p");
            out.exists.push_back(target);
        }
        EAForm m = mult_form(prev, var(w[i]), var(target), names, universals);
        out.exists.insert(out.exists.end(), m.exists.begin(), m.exists.end());
        parts.push_back(m.matrix);
        prev = var(target);
    }
    out.matrix = land(std::move(parts));
    return out;
}

TermEncoding term_formula(const Monomial& w, const std::string& result) {
    NameSupply names({result});
    names.reserve(std::set<std::string>(w.begin(), w.end()));
    auto us = fresh_universals(names);
    EAForm f = term_form(w, result, names, us);
    return {f.formula(), f.exists.size()};
}

Formula eq_formula(const DiophEquation& e) {
    auto vars = e.variables();
    NameSupply names(std::set<std::string>(vars.begin(), vars.end()));
    auto us = fresh_universals(names);
    std::vector<std::string> ys;
    std::vector<EAForm> terms;
    for (const auto* side : {&e.lhs, &e.rhs})
        ys.insert(ys.end(), side->size(), std::string());
    for (auto& y : ys) y = names.fresh("y");
    std::size_t k = 0;
    for (const auto* side : {&e.lhs, &e.rhs})
        for (const auto& m : *side) terms.push_back(term_form(m, ys[k++], names, us));

    EAForm out;
    out.exists = ys;
    out.forall = us;
    std::vector<Formula> parts;
    for (const auto& t : terms) {
        out.exists.insert(out.exists.end(), t.exists.begin(), t.exists.end());
        parts.push_back(t.matrix);
    }
    std::vector<Term> left, right;
    for (std::size_t i = 0; i < ys.size(); ++i) (i < e.lhs.size() ? left : right).push_back(var(ys[i]));
    parts.push_back(eq(prod(left), prod(right)));
    out.matrix = land(std::move(parts));
    return out.formula();
}

// -- existential divisibility systems --------------------------------------

namespace {

Term linear_product(const NatLinearTerm& l) {
    std::vector<Term> fs;
    for (const auto& [name, c] : l.coeffs)
        for (Natural i = 0; i < c; ++i) fs.push_back(var(name));
    for (Natural i = 0; i < l.constant; ++i) fs.push_back(cw1());
    if (fs.empty()) return c1();
    return prod(fs);
}

Formula gamma(const NatLinearTerm& l, const NatLinearTerm& r, NameSupply& names) {
    std::string dx = names.fresh("dx"), dy = names.fresh("dy"), dz = names.fresh("dz"), dt = names.fresh("dt");
    return exists({dx, dy, dz, dt}, land({div_matrix(var(dx), var(dy), var(dz), var(dt)),
                                          eq(var(dx), linear_product(l)), eq(var(dy), linear_product(r))}));
}

}  // namespace

Formula translate_nat_existential(const NatSystem& s) {
    auto vars = s.variables();
    NameSupply names(std::set<std::string>(vars.begin(), vars.end()));
    std::vector<Formula> disjuncts;
    for (const auto& conj : s.disjuncts) {
        std::vector<Formula> gs;
        for (const auto& a : conj) {
            gs.push_back(gamma(a.lhs, a.rhs, names));
            if (a.kind == NatAtom::Kind::Eq) gs.push_back(gamma(a.rhs, a.lhs, names));
        }
        disjuncts.push_back(gs.empty() ? eq(c1(), c1()) : land(std::move(gs)));
    }
    if (disjuncts.empty()) disjuncts.push_back(neq(c1(), c1()));
    std::vector<Formula> parts;
    for (const auto& v : vars) parts.push_back(theta(v));
    parts.push_back(disjuncts.size() == 1 ? disjuncts.front() : lor(std::move(disjuncts)));
    Formula phi = parts.size() == 1 ? parts.front() : land(std::move(parts));
    if (!s.exists_vars.empty()) phi = exists(s.exists_vars, phi);
    return prenex(phi);
}

// -- constant elimination --------------------------------------------------

Formula eliminate_constants(const Formula& f) {
    if (!is_prenex(f)) throw Error("eliminate_constants expects a prenex formula");
    PrenexParts p = split_prenex(f);
    std::vector<std::string> ex, un;
    for (std::size_t i = 0; i < p.blocks.size(); ++i) {
        const auto& b = p.blocks[i];
        if (b.quant == Quant::Exists && i == 0)
            ex = b.vars;
        else if (b.quant == Quant::Forall && i + 1 == p.blocks.size())
            un = b.vars;
        else
            throw Error("eliminate_constants expects an E* A^k prefix");
    }
    if (un.size() > 6) throw Error("universal block wider than 6");

    std::function<bool(const Formula&)> has_zero = [&](const Formula& g) -> bool {
        std::function<bool(const Term&)> tz = [&](const Term& t) -> bool {
            if (!t) return false;
            if (t->kind == TermNode::Kind::Const) return t->constant == Constant::Zero;
            return tz(t->left) || tz(t->right);
        };
        if (tz(g->lhs) || tz(g->rhs)) return true;
        return std::any_of(g->children.begin(), g->children.end(), has_zero);
    };
    if (has_zero(p.matrix)) throw Error("the constant 0 is not part of the signature");

    NameSupply names(all_var_names(f));
    std::string a = names.fresh("a"), b = names.fresh("b"), c = names.fresh("c"), d = names.fresh("d");
    std::string z1 = names.fresh("z1"), z2 = names.fresh("z2"), z3 = names.fresh("z3"), z4 = names.fresh("z4");
    while (un.size() < 6) un.push_back(names.fresh("pad"));

    Term v1 = var(un[0]), v2 = var(un[1]);
    Formula alpha = land({eq(mul(var(a), var(a)), var(a)), neq(mul(var(a), var(z1)), var(a))});
    Formula beta = matrix_E(var(b), v1, v2, var(z2));
    Formula gam = matrix_F(var(c), v1, v2, var(b), var(z3));
    Formula del = matrix_G(var(d), v1, v2, var(b), var(z4));
    Formula phi = replace_constants(p.matrix, {{Constant::One, a},
                                               {Constant::Omega, b},
                                               {Constant::OmegaPlusOne, c},
                                               {Constant::OmegaSquarePlusOne, d}});
    std::vector<std::string> all_ex{a, b, c, d, z1, z2, z3, z4};
    all_ex.insert(all_ex.end(), ex.begin(), ex.end());
    return build_prenex({{Quant::Exists, all_ex}, {Quant::Forall, un}}, land({alpha, beta, gam, del, phi}));
}

// -- word equations --------------------------------------------------------

Formula WordEncoding::conjunction() const {
    std::vector<Formula> parts{equation};
    parts.insert(parts.end(), inequations.begin(), inequations.end());
    return parts.size() == 1 ? equation : land(std::move(parts));
}

Ordinal letter_image(char letter) {
    if (letter == 'a') return constant_value(Constant::OmegaPlusOne);
    if (letter == 'b') return constant_value(Constant::OmegaSquarePlusOne);
    throw DomainError(std::string("not a constant letter: ") + letter);
}

namespace {

Term side_term(const std::string& side) {
    std::vector<Term> fs;
    for (char ch : side) {
        if (ch == 'a')
            fs.push_back(cw1());
        else if (ch == 'b')
            fs.push_back(cw21());
        else
            fs.push_back(var(std::string(1, ch)));
    }
    if (fs.empty()) return c1();
    return prod(fs);
}

}  // namespace

WordEncoding encode_word_equation(const WordEquation& we) {
    WordEncoding out;
    out.equation = eq(side_term(we.lhs), side_term(we.rhs));
    for (char v : we.variables()) {
        Term x = var(std::string(1, v));
        out.inequations.push_back(neq(mul(cw1(), x), mul(cw(), x)));
    }
    return out;
}

Ordinal word_image(const std::string& word) {
    Ordinal acc = 1;
    for (char ch : word) acc = ordlab::mul(acc, letter_image(ch));
    return acc;
}

std::string decode_ordinal(const Ordinal& a) {
    if (a.is_zero()) throw DomainError("cannot decode 0");
    if (!is_successor(a)) throw DomainError("cannot decode a limit ordinal: " + to_string(a));
    Factorization f = jacobsthal_factorize(a);
    std::string word;
    for (const auto& s : f.syllables) word.push_back(s.mu == Ordinal(1) ? 'a' : 'b');
    return word;
}

WordAssignment decode_ordinal_solution(const std::map<char, Ordinal>& sol) {
    WordAssignment out;
    for (const auto& [v, a] : sol) out[v] = decode_ordinal(a);
    return out;
}

}  // namespace ordlab::enc
