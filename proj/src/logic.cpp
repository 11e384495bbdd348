#include "ordlab/logic.hpp"

#include <cctype>

namespace ordlab::logic {

Ordinal constant_value(Constant c) {
    switch (c) {
        case Constant::Zero: return {};
        case Constant::One: return Ordinal(1);
        case Constant::Omega: return Ordinal::omega();
        case Constant::OmegaPlusOne: return add(Ordinal::omega(), Ordinal(1));
        case Constant::OmegaSquarePlusOne: return add(Ordinal::omega_power(Ordinal(2)), Ordinal(1));
    }
    return {};
}

std::string_view constant_symbol(Constant c) {
    switch (c) {
        case Constant::Zero: return "0";
        case Constant::One: return "1";
        case Constant::Omega: return "w";
        case Constant::OmegaPlusOne: return "w+1";
        case Constant::OmegaSquarePlusOne: return "w2+1";
    }
    return "?";
}

Term var(std::string name) {
    if (name.empty()) throw Error("empty variable name");
    return std::make_shared<const TermNode>(TermNode{TermNode::Kind::Var, std::move(name), Constant::Zero, nullptr, nullptr});
}

Term cst(Constant c) {
    return std::make_shared<const TermNode>(TermNode{TermNode::Kind::Const, {}, c, nullptr, nullptr});
}

Term prod(Term a, Term b) {
    return std::make_shared<const TermNode>(TermNode{TermNode::Kind::Prod, {}, Constant::Zero, std::move(a), std::move(b)});
}

Term prod(const std::vector<Term>& factors) {
    if (factors.empty()) throw Error("empty product");
    Term acc = factors.back();
    for (std::size_t i = factors.size() - 1; i-- > 0;) acc = prod(factors[i], acc);
    return acc;
}

namespace {

Formula make(Kind k, Term l, Term r, std::vector<Formula> ch, std::vector<std::string> vars) {
    return std::make_shared<const FormulaNode>(FormulaNode{k, std::move(l), std::move(r), std::move(ch), std::move(vars)});
}

}  // namespace

Formula eq(Term a, Term b) { return make(Kind::Eq, std::move(a), std::move(b), {}, {}); }
Formula neq(Term a, Term b) { return make(Kind::Neq, std::move(a), std::move(b), {}, {}); }
Formula lnot(Formula f) { return make(Kind::Not, nullptr, nullptr, {std::move(f)}, {}); }

Formula land(std::vector<Formula> fs) {
    if (fs.empty()) throw Error("empty conjunction");
    if (fs.size() == 1) return fs.front();
    return make(Kind::And, nullptr, nullptr, std::move(fs), {});
}

Formula lor(std::vector<Formula> fs) {
    if (fs.empty()) throw Error("empty disjunction");
    if (fs.size() == 1) return fs.front();
    return make(Kind::Or, nullptr, nullptr, std::move(fs), {});
}

Formula implies(Formula a, Formula b) {
    return make(Kind::Implies, nullptr, nullptr, {std::move(a), std::move(b)}, {});
}

Formula quantify(Quant q, std::vector<std::string> vars, Formula body) {
    if (vars.empty()) return body;
    return make(q == Quant::Exists ? Kind::Exists : Kind::Forall, nullptr, nullptr, {std::move(body)}, std::move(vars));
}

Formula exists(std::vector<std::string> vars, Formula body) { return quantify(Quant::Exists, std::move(vars), std::move(body)); }
Formula forall(std::vector<std::string> vars, Formula body) { return quantify(Quant::Forall, std::move(vars), std::move(body)); }

bool is_quantifier(Kind k) { return k == Kind::Exists || k == Kind::Forall; }

bool is_quantifier_free(const Formula& f) {
    if (is_quantifier(f->kind)) return false;
    for (const auto& c : f->children)
        if (!is_quantifier_free(c)) return false;
    return true;
}

namespace {

bool term_has_constant(const Term& t) {
    switch (t->kind) {
        case TermNode::Kind::Var: return false;
        case TermNode::Kind::Const: return true;
        case TermNode::Kind::Prod: return term_has_constant(t->left) || term_has_constant(t->right);
    }
    return false;
}

void free_vars_into(const Formula& f, std::set<std::string>& bound, std::set<std::string>& out) {
    if (f->kind == Kind::Eq || f->kind == Kind::Neq) {
        std::set<std::string> vs;
        collect_vars(f->lhs, vs);
        collect_vars(f->rhs, vs);
        for (const auto& v : vs)
            if (!bound.count(v)) out.insert(v);
        return;
    }
    if (is_quantifier(f->kind)) {
        std::vector<std::string> added;
        for (const auto& v : f->vars)
            if (bound.insert(v).second) added.push_back(v);
        free_vars_into(f->body(), bound, out);
        for (const auto& v : added) bound.erase(v);
        return;
    }
    for (const auto& c : f->children) free_vars_into(c, bound, out);
}

void all_names_into(const Formula& f, std::set<std::string>& out) {
    if (f->kind == Kind::Eq || f->kind == Kind::Neq) {
        collect_vars(f->lhs, out);
        collect_vars(f->rhs, out);
        return;
    }
    out.insert(f->vars.begin(), f->vars.end());
    for (const auto& c : f->children) all_names_into(c, out);
}

}  // namespace

bool contains_constant(const Formula& f) {
    if (f->kind == Kind::Eq || f->kind == Kind::Neq) return term_has_constant(f->lhs) || term_has_constant(f->rhs);
    for (const auto& c : f->children)
        if (contains_constant(c)) return true;
    return false;
}

void collect_vars(const Term& t, std::set<std::string>& out) {
    switch (t->kind) {
        case TermNode::Kind::Var: out.insert(t->name); break;
        case TermNode::Kind::Const: break;
        case TermNode::Kind::Prod:
            collect_vars(t->left, out);
            collect_vars(t->right, out);
            break;
    }
}

std::set<std::string> free_vars(const Formula& f) {
    std::set<std::string> bound, out;
    free_vars_into(f, bound, out);
    return out;
}

std::set<std::string> all_var_names(const Formula& f) {
    std::set<std::string> out;
    all_names_into(f, out);
    return out;
}

Term rename_term(const Term& t, const std::map<std::string, std::string>& m) {
    switch (t->kind) {
        case TermNode::Kind::Var: {
            auto it = m.find(t->name);
            return it == m.end() ? t : var(it->second);
        }
        case TermNode::Kind::Const: return t;
        case TermNode::Kind::Prod: return prod(rename_term(t->left, m), rename_term(t->right, m));
    }
    return t;
}

Term substitute_term(const Term& t, const std::string& v, const Term& by) {
    switch (t->kind) {
        case TermNode::Kind::Var: return t->name == v ? by : t;
        case TermNode::Kind::Const: return t;
        case TermNode::Kind::Prod: return prod(substitute_term(t->left, v, by), substitute_term(t->right, v, by));
    }
    return t;
}

Term replace_constants(const Term& t, const std::map<Constant, std::string>& by) {
    switch (t->kind) {
        case TermNode::Kind::Var: return t;
        case TermNode::Kind::Const: {
            auto it = by.find(t->constant);
            return it == by.end() ? t : var(it->second);
        }
        case TermNode::Kind::Prod: return prod(replace_constants(t->left, by), replace_constants(t->right, by));
    }
    return t;
}

Formula replace_constants(const Formula& f, const std::map<Constant, std::string>& by) {
    if (f->kind == Kind::Eq || f->kind == Kind::Neq)
        return make(f->kind, replace_constants(f->lhs, by), replace_constants(f->rhs, by), {}, {});
    std::vector<Formula> ch;
    for (const auto& c : f->children) ch.push_back(replace_constants(c, by));
    return make(f->kind, nullptr, nullptr, std::move(ch), f->vars);
}

namespace {

Formula substitute_impl(const Formula& f, const std::string& v, const Term& by,
                        const std::set<std::string>& by_vars, NameSupply& names) {
    if (f->kind == Kind::Eq || f->kind == Kind::Neq)
        return make(f->kind, substitute_term(f->lhs, v, by), substitute_term(f->rhs, v, by), {}, {});
    if (is_quantifier(f->kind)) {
        for (const auto& b : f->vars)
            if (b == v) return f;
        if (!free_vars(f->body()).count(v)) return f;
        std::vector<std::string> vars = f->vars;
        Formula body = f->body();
        for (auto& b : vars) {
            if (!by_vars.count(b)) continue;
            std::string nb = names.fresh(base_name(b));
            body = substitute_impl(body, b, var(nb), {nb}, names);
            b = nb;
        }
        return make(f->kind, nullptr, nullptr, {substitute_impl(body, v, by, by_vars, names)}, std::move(vars));
    }
    std::vector<Formula> ch;
    for (const auto& c : f->children) ch.push_back(substitute_impl(c, v, by, by_vars, names));
    return make(f->kind, nullptr, nullptr, std::move(ch), f->vars);
}

}  // namespace

Formula substitute(const Formula& f, const std::string& v, const Term& by) {
    std::set<std::string> by_vars;
    collect_vars(by, by_vars);
    NameSupply names(all_var_names(f));
    names.reserve(by_vars);
    return substitute_impl(f, v, by, by_vars, names);
}

std::string NameSupply::fresh(const std::string& base) {
    if (used_.insert(base).second) return base;
    std::size_t& k = next_[base];
    for (;;) {
        std::string cand = base + "_" + std::to_string(++k);
        if (used_.insert(cand).second) return cand;
    }
}

std::string base_name(const std::string& name) {
    auto pos = name.rfind('_');
    if (pos == std::string::npos || pos == 0 || pos + 1 == name.size()) return name;
    for (std::size_t i = pos + 1; i < name.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(name[i]))) return name;
    return name.substr(0, pos);
}

}  // namespace ordlab::logic
