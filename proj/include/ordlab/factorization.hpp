#pragma once

// Jacobsthal factorization of ordinals and the commutation theory of
// successor ordinals.
//
// Every a >= 1 factors uniquely as w^A1 * A2 where
//   w^A1 = (w^(w^xi_1))^n_1 ... (w^(w^xi_r))^n_r     xi_1 > ... > xi_r
//   A2   = a0 (w^mu_1 + 1) a1 (w^mu_2 + 1) ... (w^mu_k + 1) ak
// with every a_i >= 1 and every mu_i >= 1.  A2 is the maximal successor
// right factor of a.

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ordlab/ordinal.hpp"

namespace ordlab {

struct NaturalPrime {
    Natural p;
};
struct SuccessorPrime {
    Ordinal mu;  // w^mu + 1
};
struct LimitPrime {
    Ordinal xi;  // w^(w^xi)
};
using PrimeKind = std::variant<NaturalPrime, SuccessorPrime, LimitPrime>;

struct LimitFactor {
    Ordinal xi;
    Natural n;
    friend bool operator==(const LimitFactor&, const LimitFactor&) = default;
};

struct Syllable {
    Ordinal mu;
    Natural a;
    friend bool operator==(const Syllable&, const Syllable&) = default;
};

struct Factorization {
    std::vector<LimitFactor> limit_part;
    Natural a0 = 1;
    std::vector<Syllable> syllables;

    friend bool operator==(const Factorization&, const Factorization&) = default;
};

bool is_prime_natural(const Natural& n);

/// The prime kind of a, or nullopt when a is not prime.  Throws on 0.
std::optional<PrimeKind> classify_prime(const Ordinal& a);
std::string to_string(const PrimeKind& k);

Factorization jacobsthal_factorize(const Ordinal& a);
Ordinal recompose(const Factorization& f);
bool is_valid(const Factorization& f);

/// A1 read back from the limit part: sum of w^xi_i * n_i.
Ordinal limit_exponent(const Factorization& f);
/// A2 as an ordinal.
Ordinal successor_value(const Factorization& f);
Ordinal max_successor_right_factor(const Ordinal& a);

/// Factorization of recompose(f) * recompose(g), computed on the factor lists.
Factorization product_of_factorizations(const Factorization& f, const Factorization& g);

bool commute(const Ordinal& a, const Ordinal& b);

struct CommonRoot {
    Ordinal root;
    Natural j;
    Natural n;
};

enum class RootStatus {
    Found,
    NotCommuting,
    /// a and b commute but are not powers of a common ordinal (only for pairs of naturals).
    NoRoot,
    /// a and b commute but the exponents exceed the search bound.
    BoundExceeded,
};

struct RootSearch {
    RootStatus status;
    std::optional<CommonRoot> root;
};

/// Finds root, j, n with root^j = a and root^n = b, j, n <= bound, taking the
/// primitive root of a.  a and b must be successor ordinals.
RootSearch successor_common_root(const Ordinal& a, const Ordinal& b, unsigned bound);

/// ((w+1)^n (w^2+1))^r for r = 0..r_max.
std::vector<Ordinal> lemma8_solution_set(unsigned n, unsigned r_max);

/// "w^[(xi,n) ...] * a0 (w^mu+1) a1 ..."
std::string to_string(const Factorization& f);
Factorization parse_factorization(std::string_view text);

}  // namespace ordlab
