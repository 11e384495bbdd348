#pragma once

// Source-language objects consumed by the translators: existential
// <N; +, |> systems, Diophantine equations and word equations over {a, b}.

#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "ordlab/ordinal.hpp"

namespace ordlab {

using NatAssignment = std::map<std::string, Natural>;

struct NatLinearTerm {
    std::map<std::string, Natural> coeffs;  // absent variable = coefficient 0
    Natural constant = 0;

    Natural eval(const NatAssignment& a) const;
    friend bool operator==(const NatLinearTerm&, const NatLinearTerm&) = default;
};

struct NatAtom {
    enum class Kind { Div, Eq };
    Kind kind;
    NatLinearTerm lhs, rhs;
};

/// Negation-free system in disjunctive normal form.  When `exists_vars` is
/// non-empty the system denotes the closed sentence binding those variables.
struct NatSystem {
    std::vector<std::vector<NatAtom>> disjuncts;
    std::vector<std::string> exists_vars;

    std::vector<std::string> variables() const;
};

/// x | y  iff  x * z = y for some z; so 0 | 0 holds and 0 | y fails for y > 0.
bool nat_divides(const Natural& x, const Natural& y);
bool eval_atom(const NatAtom& atom, const NatAssignment& a);
bool eval_system(const NatSystem& s, const NatAssignment& a);

/// Syntax: (or (and (div L R) (eq L R) ...) ...), optionally wrapped in
/// (exists (x y) ...).  L, R are linear terms: NAT | var | (* NAT var) | (+ L ...).
/// Nested and/or are distributed into DNF; (not ...) is rejected.
NatSystem parse_nat_system(std::string_view text);
std::string print_nat_system(const NatSystem& s);

using Monomial = std::vector<std::string>;  // sorted multiset; empty = constant 1

struct DiophEquation {
    std::vector<Monomial> lhs, rhs;

    std::vector<std::string> variables() const;
    Natural eval_side(const std::vector<Monomial>& side, const NatAssignment& a) const;
    bool holds(const NatAssignment& a) const;
};

/// Syntax: (= (+ (m x x) (m)) (+ (m y))); a side may also be a bare (m ...).
DiophEquation parse_dioph(std::string_view text);
std::string print_dioph(const DiophEquation& e);

struct WordEquation {
    std::string lhs, rhs;  // letters a, b are constants; any other letter is a variable

    std::vector<char> variables() const;
    static bool is_constant(char c) { return c == 'a' || c == 'b'; }
};

using WordAssignment = std::map<char, std::string>;

/// Syntax: "xab=abx".  Either side may be empty.
WordEquation parse_word_equation(std::string_view text);
std::string print_word_equation(const WordEquation& we);
std::string apply_word_assignment(const std::string& side, const WordAssignment& a);
bool word_solution_holds(const WordEquation& we, const WordAssignment& a);

}  // namespace ordlab
