#pragma once

// Brute-force ground truth on the integer and word sides.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ordlab/sources.hpp"

namespace ordlab {

/// Inclusive upper bound per variable; variables not listed use `fallback`.
struct SearchBox {
    std::map<std::string, Natural> bounds;
    Natural fallback = 10;
    bool exclude_zero = false;

    Natural bound(const std::string& var) const;
};

/// lcm with lcm(0, n) = lcm(n, 0) = 0.
Natural nat_lcm(const Natural& i, const Natural& j);

/// First satisfying assignment in lexicographic order (variables sorted by
/// name, first variable most significant).
std::optional<NatAssignment> sat_system(const NatSystem& s, const SearchBox& box);

/// All solutions in the box, in lexicographic order.
std::vector<NatAssignment> solve_diophantine(const DiophEquation& e, const SearchBox& box);

/// All words over {a, b} of length <= max_len, by length then alphabetically.
std::vector<std::string> words_up_to(std::size_t max_len);

/// All maps variable -> word with |word| <= max_len solving the equation.
/// Variables vary in name order, each over words_up_to(max_len).
std::vector<WordAssignment> solve_word_equation(const WordEquation& we, std::size_t max_len);

}  // namespace ordlab
