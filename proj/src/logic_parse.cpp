#include <cctype>
#include <sstream>

#include "ordlab/logic.hpp"
#include "ordlab/sexpr.hpp"

namespace ordlab::logic {

// -- printing --------------------------------------------------------------

std::string print_term(const Term& t) {
    switch (t->kind) {
        case TermNode::Kind::Var: return t->name;
        case TermNode::Kind::Const: return "(c " + std::string(constant_symbol(t->constant)) + ")";
        case TermNode::Kind::Prod: return "(* " + print_term(t->left) + " " + print_term(t->right) + ")";
    }
    return "?";
}

std::string print_formula(const Formula& f) {
    std::ostringstream os;
    switch (f->kind) {
        case Kind::Eq: os << "(= " << print_term(f->lhs) << ' ' << print_term(f->rhs) << ')'; break;
        case Kind::Neq: os << "(!= " << print_term(f->lhs) << ' ' << print_term(f->rhs) << ')'; break;
        case Kind::Not: os << "(not " << print_formula(f->body()) << ')'; break;
        case Kind::And:
        case Kind::Or:
            os << (f->kind == Kind::And ? "(and" : "(or");
            for (const auto& c : f->children) os << ' ' << print_formula(c);
            os << ')';
            break;
        case Kind::Implies:
            os << "(=> " << print_formula(f->children[0]) << ' ' << print_formula(f->children[1]) << ')';
            break;
        case Kind::Exists:
        case Kind::Forall: {
            os << (f->kind == Kind::Exists ? "(exists (" : "(forall (");
            for (std::size_t i = 0; i < f->vars.size(); ++i) os << (i ? " " : "") << f->vars[i];
            os << ") " << print_formula(f->body()) << ')';
            break;
        }
    }
    return os.str();
}

// -- parsing ---------------------------------------------------------------

namespace {

bool valid_identifier(const std::string& s) {
    if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
    for (char ch : s)
        if (!(std::isalnum(static_cast<unsigned char>(ch)) || ch == '_' || ch == '\'')) return false;
    return true;
}

Constant constant_from(const sexpr::Node& n) {
    if (!n.is_atom()) throw ParseError("expected constant symbol", n.pos);
    for (Constant c : {Constant::Zero, Constant::One, Constant::Omega, Constant::OmegaPlusOne,
                       Constant::OmegaSquarePlusOne})
        if (n.atom == constant_symbol(c)) return c;
    throw ParseError("unknown constant symbol '" + n.atom + "'", n.pos);
}

Term term_from(const sexpr::Node& n) {
    if (n.is_atom()) {
        if (!valid_identifier(n.atom)) throw ParseError("invalid variable name '" + n.atom + "'", n.pos);
        return var(n.atom);
    }
    const std::string& head = n.head();
    if (head == "c") {
        n.expect_arity(1);
        return cst(constant_from(n.items[1]));
    }
    if (head == "*") {
        if (n.items.size() < 3) throw ParseError("product needs at least two factors", n.pos);
        std::vector<Term> fs;
        for (std::size_t i = 1; i < n.items.size(); ++i) fs.push_back(term_from(n.items[i]));
        return prod(fs);
    }
    throw ParseError("unknown term constructor '" + head + "'", n.pos);
}

Formula formula_from(const sexpr::Node& n) {
    if (n.is_atom()) throw ParseError("expected formula", n.pos);
    const std::string& head = n.head();
    if (head == "=" || head == "!=") {
        n.expect_arity(2);
        Term l = term_from(n.items[1]), r = term_from(n.items[2]);
        return head == "=" ? eq(l, r) : neq(l, r);
    }
    if (head == "not") {
        n.expect_arity(1);
        return lnot(formula_from(n.items[1]));
    }
    if (head == "and" || head == "or") {
        if (n.items.size() < 2) throw ParseError("'" + head + "' needs at least one operand", n.pos);
        std::vector<Formula> ch;
        for (std::size_t i = 1; i < n.items.size(); ++i) ch.push_back(formula_from(n.items[i]));
        return head == "and" ? land(std::move(ch)) : lor(std::move(ch));
    }
    if (head == "=>") {
        n.expect_arity(2);
        return implies(formula_from(n.items[1]), formula_from(n.items[2]));
    }
    if (head == "exists" || head == "forall") {
        n.expect_arity(2);
        const auto& vs = n.items[1];
        if (vs.is_atom() || vs.items.empty()) throw ParseError("expected variable list", vs.pos);
        std::vector<std::string> vars;
        for (const auto& v : vs.items) {
            if (!v.is_atom() || !valid_identifier(v.atom)) throw ParseError("invalid bound variable", v.pos);
            vars.push_back(v.atom);
        }
        return quantify(head == "exists" ? Quant::Exists : Quant::Forall, std::move(vars), formula_from(n.items[2]));
    }
    throw ParseError("unknown formula constructor '" + head + "'", n.pos);
}

}  // namespace

Term parse_term(std::string_view text) {
    return term_from(sexpr::parse_one(text));
}

Formula parse_formula(std::string_view text) {
    return formula_from(sexpr::parse_one(text));
}

// -- prefix classes --------------------------------------------------------

std::size_t PrefixClass::count(Quant q) const {
    std::size_t n = 0;
    for (const auto& e : entries)
        if (e.quant == q) n += e.count;
    return n;
}

std::string to_string(const PrefixClass& p) {
    if (p.entries.empty()) return "QF";
    std::ostringstream os;
    for (std::size_t i = 0; i < p.entries.size(); ++i) {
        if (i) os << ' ';
        os << (p.entries[i].quant == Quant::Exists ? 'E' : 'A') << '^' << p.entries[i].count;
    }
    return os.str();
}

PrefixClass parse_prefix_class(std::string_view text) {
    PrefixClass p;
    std::istringstream is{std::string(text)};
    std::string tok;
    while (is >> tok) {
        if (tok == "QF") continue;
        if (tok.size() < 3 || (tok[0] != 'E' && tok[0] != 'A') || tok[1] != '^')
            throw ParseError("bad prefix class token '" + tok + "'", 0);
        Quant q = tok[0] == 'E' ? Quant::Exists : Quant::Forall;
        std::size_t n = std::stoul(tok.substr(2));
        if (!p.entries.empty() && p.entries.back().quant == q)
            p.entries.back().count += n;
        else
            p.entries.push_back({q, n});
    }
    return p;
}

}  // namespace ordlab::logic
