#include "ordlab/sources.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "ordlab/sexpr.hpp"

namespace ordlab {

Natural NatLinearTerm::eval(const NatAssignment& a) const {
    Natural v = constant;
    for (const auto& [name, c] : coeffs) {
        auto it = a.find(name);
        if (it == a.end()) throw Error("unbound variable '" + name + "'");
        v += c * it->second;
    }
    return v;
}

std::vector<std::string> NatSystem::variables() const {
    std::set<std::string> vs(exists_vars.begin(), exists_vars.end());
    for (const auto& conj : disjuncts)
        for (const auto& at : conj) {
            for (const auto& [n, c] : at.lhs.coeffs) vs.insert(n);
            for (const auto& [n, c] : at.rhs.coeffs) vs.insert(n);
        }
    return {vs.begin(), vs.end()};
}

bool nat_divides(const Natural& x, const Natural& y) {
    if (x == 0) return y == 0;
    return y % x == 0;
}

bool eval_atom(const NatAtom& atom, const NatAssignment& a) {
    Natural l = atom.lhs.eval(a), r = atom.rhs.eval(a);
    return atom.kind == NatAtom::Kind::Div ? nat_divides(l, r) : l == r;
}

bool eval_system(const NatSystem& s, const NatAssignment& a) {
    for (const auto& conj : s.disjuncts) {
        bool ok = true;
        for (const auto& at : conj)
            if (!eval_atom(at, a)) {
                ok = false;
                break;
            }
        if (ok) return true;
    }
    return false;
}

namespace {

using Dnf = std::vector<std::vector<NatAtom>>;

bool is_identifier(const std::string& s) {
    if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
    return std::all_of(s.begin(), s.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

bool is_number(const std::string& s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

void linear_into(const sexpr::Node& n, NatLinearTerm& t, const Natural& scale) {
    if (n.is_atom()) {
        if (is_number(n.atom)) {
            t.constant += scale * Natural(n.atom);
        } else if (is_identifier(n.atom)) {
            t.coeffs[n.atom] += scale;
        } else {
            throw ParseError("bad linear term atom '" + n.atom + "'", n.pos);
        }
        return;
    }
    if (n.head() == "+") {
        for (std::size_t i = 1; i < n.items.size(); ++i) linear_into(n.items[i], t, scale);
        return;
    }
    if (n.head() == "*") {
        n.expect_arity(2);
        const auto& c = n.items[1];
        if (!c.is_atom() || !is_number(c.atom)) throw ParseError("coefficient must be a natural number", c.pos);
        linear_into(n.items[2], t, scale * Natural(c.atom));
        return;
    }
    throw ParseError("bad linear term '" + n.head() + "'", n.pos);
}

NatLinearTerm linear_from(const sexpr::Node& n) {
    NatLinearTerm t;
    linear_into(n, t, 1);
    for (auto it = t.coeffs.begin(); it != t.coeffs.end();) it = it->second == 0 ? t.coeffs.erase(it) : std::next(it);
    return t;
}

Dnf dnf_from(const sexpr::Node& n) {
    if (n.is_atom()) throw ParseError("expected system formula", n.pos);
    const std::string& h = n.head();
    if (h == "div" || h == "eq" || h == "=") {
        n.expect_arity(2);
        NatAtom a{h == "div" ? NatAtom::Kind::Div : NatAtom::Kind::Eq, linear_from(n.items[1]), linear_from(n.items[2])};
        return {{a}};
    }
    if (h == "or") {
        Dnf out;
        for (std::size_t i = 1; i < n.items.size(); ++i) {
            Dnf d = dnf_from(n.items[i]);
            out.insert(out.end(), d.begin(), d.end());
        }
        return out;
    }
    if (h == "and") {
        Dnf out{{}};
        for (std::size_t i = 1; i < n.items.size(); ++i) {
            Dnf d = dnf_from(n.items[i]);
            Dnf next;
            for (const auto& l : out)
                for (const auto& r : d) {
                    auto c = l;
                    c.insert(c.end(), r.begin(), r.end());
                    next.push_back(std::move(c));
                }
            out = std::move(next);
        }
        return out;
    }
    if (h == "not") throw ParseError("negation is not supported in divisibility systems", n.pos);
    throw ParseError("unknown system constructor '" + h + "'", n.pos);
}

std::string print_linear(const NatLinearTerm& t) {
    std::ostringstream os;
    os << "(+";
    for (const auto& [n, c] : t.coeffs) os << " (* " << c << ' ' << n << ')';
    os << ' ' << t.constant << ')';
    return os.str();
}

}  // namespace

NatSystem parse_nat_system(std::string_view text) {
    sexpr::Node n = sexpr::parse_one(text);
    NatSystem s;
    if (!n.is_atom() && n.head() == "exists") {
        n.expect_arity(2);
        const auto& vs = n.items[1];
        if (vs.is_atom()) throw ParseError("expected variable list", vs.pos);
        for (const auto& v : vs.items) {
            if (!v.is_atom() || !is_identifier(v.atom)) throw ParseError("invalid variable", v.pos);
            s.exists_vars.push_back(v.atom);
        }
        s.disjuncts = dnf_from(n.items[2]);
    } else {
        s.disjuncts = dnf_from(n);
    }
    return s;
}

std::string print_nat_system(const NatSystem& s) {
    std::ostringstream os;
    auto conj = [&](const std::vector<NatAtom>& c) {
        os << "(and";
        for (const auto& a : c)
            os << " (" << (a.kind == NatAtom::Kind::Div ? "div " : "eq ") << print_linear(a.lhs) << ' '
               << print_linear(a.rhs) << ')';
        os << ')';
    };
    if (!s.exists_vars.empty()) {
        os << "(exists (";
        for (std::size_t i = 0; i < s.exists_vars.size(); ++i) os << (i ? " " : "") << s.exists_vars[i];
        os << ") ";
    }
    os << "(or";
    for (const auto& c : s.disjuncts) {
        os << ' ';
        conj(c);
    }
    os << ')';
    if (!s.exists_vars.empty()) os << ')';
    return os.str();
}

// -- Diophantine equations -------------------------------------------------

std::vector<std::string> DiophEquation::variables() const {
    std::set<std::string> vs;
    for (const auto* side : {&lhs, &rhs})
        for (const auto& m : *side) vs.insert(m.begin(), m.end());
    return {vs.begin(), vs.end()};
}

Natural DiophEquation::eval_side(const std::vector<Monomial>& side, const NatAssignment& a) const {
    Natural sum = 0;
    for (const auto& m : side) {
        Natural p = 1;
        for (const auto& v : m) {
            auto it = a.find(v);
            if (it == a.end()) throw Error("unbound variable '" + v + "'");
            p *= it->second;
        }
        sum += p;
    }
    return sum;
}

bool DiophEquation::holds(const NatAssignment& a) const {
    return eval_side(lhs, a) == eval_side(rhs, a);
}

namespace {

Monomial monomial_from(const sexpr::Node& n) {
    if (n.is_atom() || n.head() != "m") throw ParseError("expected monomial (m ...)", n.pos);
    Monomial m;
    for (std::size_t i = 1; i < n.items.size(); ++i) {
        const auto& v = n.items[i];
        if (!v.is_atom() || !is_identifier(v.atom)) throw ParseError("invalid monomial variable", v.pos);
        m.push_back(v.atom);
    }
    std::sort(m.begin(), m.end());
    return m;
}

std::vector<Monomial> side_from(const sexpr::Node& n) {
    if (!n.is_atom() && n.head() == "+") {
        std::vector<Monomial> out;
        for (std::size_t i = 1; i < n.items.size(); ++i) out.push_back(monomial_from(n.items[i]));
        if (out.empty()) throw ParseError("a side needs at least one monomial", n.pos);
        return out;
    }
    return {monomial_from(n)};
}

std::string print_side(const std::vector<Monomial>& side) {
    std::ostringstream os;
    os << "(+";
    for (const auto& m : side) {
        os << " (m";
        for (const auto& v : m) os << ' ' << v;
        os << ')';
    }
    os << ')';
    return os.str();
}

}  // namespace

DiophEquation parse_dioph(std::string_view text) {
    sexpr::Node n = sexpr::parse_one(text);
    if (n.is_atom() || n.head() != "=") throw ParseError("expected (= lhs rhs)", n.pos);
    n.expect_arity(2);
    return DiophEquation{side_from(n.items[1]), side_from(n.items[2])};
}

std::string print_dioph(const DiophEquation& e) {
    return "(= " + print_side(e.lhs) + " " + print_side(e.rhs) + ")";
}

// -- word equations --------------------------------------------------------

std::vector<char> WordEquation::variables() const {
    std::set<char> vs;
    for (char c : lhs + rhs)
        if (!is_constant(c)) vs.insert(c);
    return {vs.begin(), vs.end()};
}

WordEquation parse_word_equation(std::string_view text) {
    WordEquation we;
    bool seen_eq = false;
    for (std::size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        if (c == '=') {
            if (seen_eq) throw ParseError("second '=' in word equation", i);
            seen_eq = true;
            continue;
        }
        if (!std::isalpha(static_cast<unsigned char>(c))) throw ParseError("unexpected character in word equation", i);
        (seen_eq ? we.rhs : we.lhs).push_back(c);
    }
    if (!seen_eq) throw ParseError("word equation needs '='", text.size());
    return we;
}

std::string print_word_equation(const WordEquation& we) { return we.lhs + "=" + we.rhs; }

std::string apply_word_assignment(const std::string& side, const WordAssignment& a) {
    std::string out;
    for (char c : side) {
        if (WordEquation::is_constant(c)) {
            out.push_back(c);
            continue;
        }
        auto it = a.find(c);
        if (it == a.end()) throw Error(std::string("unbound word variable '") + c + "'");
        out += it->second;
    }
    return out;
}

bool word_solution_holds(const WordEquation& we, const WordAssignment& a) {
    return apply_word_assignment(we.lhs, a) == apply_word_assignment(we.rhs, a);
}

}  // namespace ordlab
