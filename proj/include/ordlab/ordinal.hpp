#pragma once

// Ordinals below epsilon_0 in Cantor normal form.
//
// An Ordinal is an immutable handle onto a shared, canonical term list
//   w^e_1 * c_1 + w^e_2 * c_2 + ... + w^e_k * c_k
// with e_1 > e_2 > ... > e_k (each itself an Ordinal) and every c_i >= 1.
// The empty list is 0.  Copies are cheap and values are never mutated, so
// Ordinals can be shared freely between threads.

#include <cstddef>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace ordlab {

using Natural = boost::multiprecision::cpp_int;

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Raised for operations undefined on their input (degree of 0, left_sub with l > m, ...).
struct DomainError : Error {
    using Error::Error;
};

struct ParseError : Error {
    ParseError(const std::string& what, std::size_t pos)
        : Error(what + " at position " + std::to_string(pos)), position(pos) {}
    std::size_t position;
};

enum class Order { Less, Equal, Greater };

struct Term;

class Ordinal {
public:
    Ordinal() = default;
    Ordinal(unsigned long long n);  // NOLINT: naturals convert implicitly
    explicit Ordinal(const Natural& n);

    static Ordinal omega();
    /// w^exponent * coeff; coeff must be >= 1.
    static Ordinal omega_power(const Ordinal& exponent, const Natural& coeff = 1);
    /// Builds from a term list, throwing DomainError unless it is already canonical.
    static Ordinal from_terms(std::vector<Term> terms);

    std::span<const Term> terms() const;
    std::size_t size() const;
    bool is_zero() const { return rep_ == nullptr; }
    bool is_finite() const;
    /// Value as a natural number; throws DomainError for infinite ordinals.
    Natural to_natural() const;

    std::size_t hash() const { return hash_; }

    friend bool operator==(const Ordinal& a, const Ordinal& b);

private:
    static Ordinal adopt(std::vector<Term> terms);

    std::shared_ptr<const std::vector<Term>> rep_;
    std::size_t hash_ = 0;
};

struct Term {
    Ordinal exponent;
    Natural coeff;

    friend bool operator==(const Term& a, const Term& b) {
        return a.coeff == b.coeff && a.exponent == b.exponent;
    }
};

Order compare(const Ordinal& a, const Ordinal& b);
Ordinal add(const Ordinal& a, const Ordinal& b);
Ordinal mul(const Ordinal& a, const Ordinal& b);
Ordinal pow(const Ordinal& a, const Natural& n);

Ordinal degree(const Ordinal& a);
Ordinal valuation(const Ordinal& a);
bool is_successor(const Ordinal& a);

/// The unique v with l + v = m.  Requires l <= m.
Ordinal left_sub(const Ordinal& l, const Ordinal& m);

/// Height of the exponent tower: 0 for naturals, 1 for finite exponents, ...
std::size_t nesting_depth(const Ordinal& a);

/// True iff a < w^(w^lambda), i.e. a lies in the base set of <w^(w^lambda); x>.
bool below_power_tower(const Ordinal& a, const Ordinal& lambda);

/// Recursively re-checks the canonical-form invariants.
bool is_canonical(const Ordinal& a);

inline bool operator<(const Ordinal& a, const Ordinal& b) { return compare(a, b) == Order::Less; }
inline bool operator<=(const Ordinal& a, const Ordinal& b) { return compare(a, b) != Order::Greater; }
inline bool operator>(const Ordinal& a, const Ordinal& b) { return compare(a, b) == Order::Greater; }
inline bool operator>=(const Ordinal& a, const Ordinal& b) { return compare(a, b) != Order::Less; }
inline Ordinal operator+(const Ordinal& a, const Ordinal& b) { return add(a, b); }
inline Ordinal operator*(const Ordinal& a, const Ordinal& b) { return mul(a, b); }

/// Canonical printer: "w^(w)*2 + w*3 + 5".
std::string to_string(const Ordinal& a);
std::ostream& operator<<(std::ostream& os, const Ordinal& a);

/// Parses ordinal expressions.  Accepts the canonical grammar plus
/// parentheses, products, finite powers and the unicode letter for omega:
///   expr    := sum
///   sum     := product ('+' product)*
///   product := power ('*' power)*
///   power   := atom ('^' (NAT | atom))?      exponent may be an ordinal only for base w
///   atom    := NAT | 'w' | '(' expr ')'
Ordinal parse_ordinal(std::string_view text);

struct OrdinalHash {
    std::size_t operator()(const Ordinal& a) const { return a.hash(); }
};

}  // namespace ordlab
