#pragma once

// Formula constructions over the multiplicative signature: definable
// predicates, divisibility / lcm / multiplication of (w+1)-powers,
// Diophantine equations, constant elimination and the word-equation bridge.
//
// Integers i are represented by (w+1)^i throughout.

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ordlab/factorization.hpp"
#include "ordlab/logic.hpp"
#include "ordlab/sources.hpp"

namespace ordlab::enc {

using logic::Formula;
using logic::NameSupply;
using logic::PrefixClass;
using logic::Term;

enum class Predicate { Zero, One, Prime, LimPrime, Omega, OmegaPlusOne, OmegaSquarePlusOne };
/// Zero, One and LimPrime have two definitions.  For LimPrime, Existential
/// is the E^1 A^2 form and Universal the A^2 E^1 form.
enum class Variant { Existential, Universal };

const std::vector<Predicate>& all_predicates();
std::string_view predicate_name(Predicate p);
Predicate parse_predicate(std::string_view name);
bool has_variants(Predicate p);

/// x(w+1) = (w+1)x  /\  x(w+1) != x.  Holds exactly on the powers of w+1.
Formula theta(const Term& x);
Formula theta(const std::string& x = "x");

/// Definition with free variable x, over the constant-free signature.
Formula build_predicate(Predicate p, Variant v = Variant::Existential, const std::string& x = "x");
/// The class the construction is designed to have.
PrefixClass expected_class(Predicate p, Variant v = Variant::Existential);

// Quantifier-free building blocks, with arbitrary terms in argument places.
Formula matrix_A(const Term& x, const Term& y, const Term& z);
Formula matrix_B(const Term& x, const Term& t);
Formula matrix_C(const Term& x, const Term& y, const Term& z, const Term& t);
Formula matrix_D(const Term& x, const Term& y, const Term& z);
Formula matrix_E(const Term& x, const Term& y, const Term& z, const Term& t);
/// Matrix of the (w+1) / (w^2+1) definitions, u standing for w.
Formula matrix_F(const Term& x, const Term& y, const Term& z, const Term& u, const Term& t);
Formula matrix_G(const Term& x, const Term& y, const Term& z, const Term& u, const Term& t);

/// Quantifier-free E with  Div(x, y) <=> exists z, t E(x, y, z, t).
Formula div_matrix(const Term& x, const Term& y, const Term& z, const Term& t);
/// exists z t E(x, y, z, t), free x, y.
Formula div_formula();

/// A prenex formula  exists U forall V  M  whose universal block is meant to
/// be shared when several such pieces are conjoined.
struct EAForm {
    std::vector<std::string> exists;
    std::vector<std::string> forall;
    Formula matrix;

    Formula formula() const;
};

/// Universal variable names for an A^6 block, drawn from `names`.
/// Base names: v, vzx, vtx, vzy, vty, w.
std::vector<std::string> fresh_universals(NameSupply& names);

/// LCM(x, y, z) as E^4 A^6 over the given universal block.
/// Existential base names: zx, tx, zy, ty.
EAForm lcm_form(const Term& x, const Term& y, const Term& z, NameSupply& names,
                const std::vector<std::string>& universals);
/// MULT(x, y, z) as E^15 A^6.  Existential base names: r, plus the lcm names.
EAForm mult_form(const Term& x, const Term& y, const Term& z, NameSupply& names,
                 const std::vector<std::string>& universals);

/// Free x, y, z.
Formula lcm_formula();
Formula mult_formula();

struct TermEncoding {
    Formula formula;
    std::size_t exists_count;
};

/// TERM_w(result, vars of w) as E^m A^6.  Intermediate results use base name p.
EAForm term_form(const Monomial& w, const std::string& result, NameSupply& names,
                 const std::vector<std::string>& universals);
TermEncoding term_formula(const Monomial& w, const std::string& result = "y");

/// EQ_e with the equation's variables free.  Monomial results use base name y.
Formula eq_formula(const DiophEquation& e);

/// Existential formula over the signature with constants.  Every free
/// variable of the system is guarded by theta; each divisibility atom
/// gets fresh witnesses with base names dx, dy, dz, dt.
Formula translate_nat_existential(const NatSystem& s);

/// Replaces 1, w, w+1, w^2+1 by a, b, c, d tied down by the quantifier-free
/// definitions with witnesses z1..z4.  The universal block is padded to 6
/// with base name pad.  Throws on non-prenex input, on more than one
/// universal block, on universal width > 6, or on the constant 0.
Formula eliminate_constants(const Formula& f);

/// L' = R' and one inequation (w+1)x != w x per variable.
struct WordEncoding {
    Formula equation;
    std::vector<Formula> inequations;

    Formula conjunction() const;
};

Ordinal letter_image(char letter);  // a -> w+1, b -> w^2+1
WordEncoding encode_word_equation(const WordEquation& we);
/// f-image of a word.
Ordinal word_image(const std::string& word);
/// Word of a successor ordinal via g (exponents capped at 2, coefficients
/// dropped) followed by h.  Throws DomainError on 0 or limit ordinals.
std::string decode_ordinal(const Ordinal& a);
WordAssignment decode_ordinal_solution(const std::map<char, Ordinal>& sol);

}  // namespace ordlab::enc
