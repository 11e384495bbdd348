#pragma once

// Domain enumeration, witness families and the key-value evaluation config.
//
//   domain.max_depth = 2          family.pow = omega_plus_one_powers 64
//   domain.terms = 3              family.com = commutant_powers 6 32 64
//   domain.coeff = 3              bind.lcm.zx = com
//   domain.seed = 1               bind.lcm.* = pow
//   domain.exp_terms = 1          bind.default.* = d1
//   domain.exp_coeff = 2          max_family = 100000
//
// Family generators:
//   omega_plus_one_powers N       (w+1)^0 .. (w+1)^N
//   commutant_powers N R [DEG]    ((w+1)^n (w^2+1))^r, n <= N, r <= R, degree r(n+2) <= DEG
//   naturals N                    0 .. N
//   syllable_words L              products of w+1, w^2+1, w^3+1 of length <= L
//   domain                        enumerate_domain of the config's domain bounds
//   explicit A; B; ...            ordinal literals
//   union F G ...                 named families, concatenated

#include <cstddef>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "ordlab/ordinal.hpp"

namespace ordlab {

struct DomainParams {
    unsigned max_depth = 2;
    unsigned terms = 3;      // per CNF at the top level
    unsigned coeff = 3;      // top-level coefficient bound
    unsigned seed = 1;       // finite exponents 0..seed at the bottom level
    unsigned exp_terms = 1;  // terms per CNF below the top level
    unsigned exp_coeff = 2;  // coefficient bound below the top level
};

/// All CNF ordinals within the bounds, strictly increasing.
std::vector<Ordinal> enumerate_domain(const DomainParams& p, std::size_t cap = 100000);

struct WitnessFamily {
    std::string name;
    std::string spec;
    std::vector<Ordinal> elements;  // generation order, duplicate-free
};

class EvalConfig {
public:
    DomainParams domain;
    std::size_t max_family = 100000;
    std::string profile = "default";

    /// Adds or replaces a family definition.
    void define_family(const std::string& name, const std::string& spec);
    /// Appends a binding rule; earlier rules of a profile win.
    void bind(const std::string& profile, const std::string& glob, const std::string& family);

    bool has_family(const std::string& name) const { return specs_.count(name) != 0; }
    /// Expanded family; throws when unknown or larger than max_family.
    const WitnessFamily& family(const std::string& name) const;
    /// Family name for a quantified variable: the current profile's rules,
    /// then the "default" profile's, matched on the full name or its base name.
    std::string family_for(const std::string& var) const;

    std::vector<std::string> family_names() const;

private:
    std::map<std::string, std::string> specs_;
    std::map<std::string, std::vector<std::pair<std::string, std::string>>> bindings_;
    mutable std::map<std::string, std::shared_ptr<WitnessFamily>> cache_;
    mutable std::vector<std::string> expanding_;
};

/// Reads ORDLAB_MAX_FAMILY when set.
std::size_t default_max_family();

EvalConfig parse_config(std::string_view text);
EvalConfig load_config(const std::string& path);
/// Path of the config shipped with the sources.
std::string default_config_path();
EvalConfig default_config();

}  // namespace ordlab
