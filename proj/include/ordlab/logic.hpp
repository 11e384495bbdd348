#pragma once

// First-order terms and formulas over the signature {x, =} with the
// constants 0, 1, w, w+1, w^2+1.  Nodes are immutable and shared.

#include <cstddef>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "ordlab/ordinal.hpp"

namespace ordlab::logic {

enum class Constant { Zero, One, Omega, OmegaPlusOne, OmegaSquarePlusOne };

Ordinal constant_value(Constant c);
/// Symbol used by the s-expression syntax: 0, 1, w, w+1, w2+1.
std::string_view constant_symbol(Constant c);

struct TermNode;
using Term = std::shared_ptr<const TermNode>;

struct TermNode {
    enum class Kind { Var, Const, Prod };
    Kind kind;
    std::string name;  // Var
    Constant constant = Constant::Zero;
    Term left, right;  // Prod
};

Term var(std::string name);
Term cst(Constant c);
Term prod(Term a, Term b);
/// Right-nested product of one or more factors.
Term prod(const std::vector<Term>& factors);

enum class Kind { Eq, Neq, Not, And, Or, Implies, Exists, Forall };
enum class Quant { Exists, Forall };

struct FormulaNode;
using Formula = std::shared_ptr<const FormulaNode>;

struct FormulaNode {
    Kind kind;
    Term lhs, rhs;                  // Eq / Neq
    std::vector<Formula> children;  // Not(1), And/Or(>=1), Implies(2), quantifiers(1)
    std::vector<std::string> vars;  // quantifiers

    const Formula& body() const { return children.front(); }
};

Formula eq(Term a, Term b);
Formula neq(Term a, Term b);
Formula lnot(Formula f);
Formula land(std::vector<Formula> fs);
Formula lor(std::vector<Formula> fs);
Formula implies(Formula a, Formula b);
Formula exists(std::vector<std::string> vars, Formula body);
Formula forall(std::vector<std::string> vars, Formula body);
Formula quantify(Quant q, std::vector<std::string> vars, Formula body);

bool is_quantifier(Kind k);
bool is_quantifier_free(const Formula& f);
bool contains_constant(const Formula& f);

void collect_vars(const Term& t, std::set<std::string>& out);
std::set<std::string> free_vars(const Formula& f);
std::set<std::string> all_var_names(const Formula& f);

/// Renames free occurrences of variables according to the map (no capture check).
Term rename_term(const Term& t, const std::map<std::string, std::string>& m);
Term substitute_term(const Term& t, const std::string& var, const Term& by);
Term replace_constants(const Term& t, const std::map<Constant, std::string>& by);
Formula replace_constants(const Formula& f, const std::map<Constant, std::string>& by);

/// Capture-avoiding substitution of `by` for the free occurrences of `var`.
Formula substitute(const Formula& f, const std::string& var, const Term& by);

/// Deterministic fresh names: base, base_1, base_2, ... skipping used names.
class NameSupply {
public:
    NameSupply() = default;
    explicit NameSupply(std::set<std::string> used) : used_(std::move(used)) {}

    void reserve(const std::string& name) { used_.insert(name); }
    void reserve(const std::set<std::string>& names) { used_.insert(names.begin(), names.end()); }
    bool used(const std::string& name) const { return used_.count(name) != 0; }
    /// `base` itself when unused, otherwise the first free base_k.
    std::string fresh(const std::string& base);

private:
    std::set<std::string> used_;
    std::map<std::string, std::size_t> next_;
};

/// Strips a trailing "_<digits>" suffix added by NameSupply.
std::string base_name(const std::string& name);

// -- s-expression syntax ---------------------------------------------------

std::string print_term(const Term& t);
std::string print_formula(const Formula& f);
Term parse_term(std::string_view text);
Formula parse_formula(std::string_view text);

// -- prenex forms ----------------------------------------------------------

struct QuantBlock {
    Quant quant;
    std::vector<std::string> vars;
};

struct PrenexParts {
    std::vector<QuantBlock> blocks;
    Formula matrix;
};

bool is_prenex(const Formula& f);
/// Splits a prenex formula into merged quantifier blocks and its matrix.
PrenexParts split_prenex(const Formula& f);
Formula build_prenex(const std::vector<QuantBlock>& blocks, Formula matrix);

/// Negation normal form: no Implies, Not only absorbed into Eq/Neq.
Formula nnf(const Formula& f);

/// Equivalent prenex formula.  Bound variables are renamed apart, existential
/// blocks are pulled first out of conjunctions and universal blocks first out
/// of disjunctions; universal blocks meeting under a conjunction (existential
/// blocks under a disjunction) share variables position by position.
Formula prenex(const Formula& f);

struct PrefixClass {
    struct Entry {
        Quant quant;
        std::size_t count;
        friend bool operator==(const Entry&, const Entry&) = default;
    };
    std::vector<Entry> entries;

    std::size_t count(Quant q) const;
    std::size_t alternations() const { return entries.empty() ? 0 : entries.size() - 1; }
    friend bool operator==(const PrefixClass&, const PrefixClass&) = default;
};

/// Quantifier-prefix class of f (prenexed first when necessary).
PrefixClass prefix_class(const Formula& f);
/// "E^4 A^6"; "QF" for the empty prefix.
std::string to_string(const PrefixClass& p);
PrefixClass parse_prefix_class(std::string_view text);

}  // namespace ordlab::logic
