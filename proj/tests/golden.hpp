#pragma once
// Golden prefix classes: one "key | class" line per built formula.
#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include "ordlab/encoders.hpp"

#ifndef ORDLAB_GOLDEN_DIR
#define ORDLAB_GOLDEN_DIR "tests/golden"
#endif

namespace golden {

struct Entry {
    std::string key;
    std::string cls;
};

inline std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t"), e = s.find_last_not_of(" \t\r");
    return b == std::string::npos ? "" : s.substr(b, e - b + 1);
}

inline std::vector<Entry> load() {
    std::ifstream in(std::string(ORDLAB_GOLDEN_DIR) + "/prefix_classes.txt");
    if (!in) throw std::runtime_error("golden file missing");
    std::vector<Entry> out;
    for (std::string line; std::getline(in, line);) {
        if (line.empty() || line[0] == '#') continue;
        auto bar = line.rfind('|');
        out.push_back({trim(line.substr(0, bar)), trim(line.substr(bar + 1))});
    }
    return out;
}

// Builds the formula a golden key names.
inline ordlab::logic::Formula build(const std::string& key) {
    using namespace ordlab;
    auto sp = key.find(' ');
    std::string head = key.substr(0, sp), rest = sp == std::string::npos ? "" : key.substr(sp + 1);
    if (head == "theta") return enc::theta();
    if (head == "div") return enc::div_formula();
    if (head == "lcm") return enc::lcm_formula();
    if (head == "mult") return enc::mult_formula();
    if (head == "eq") return enc::eq_formula(parse_dioph(rest));
    if (head == "nat") return enc::translate_nat_existential(parse_nat_system(rest));
    if (head == "term") {
        Monomial m;
        std::string inner = rest.substr(1, rest.size() - 2), tok;
        for (std::size_t i = 0; i <= inner.size(); ++i) {
            if (i == inner.size() || inner[i] == ' ') {
                if (!tok.empty()) m.push_back(tok);
                tok.clear();
            } else {
                tok += inner[i];
            }
        }
        return enc::term_formula(m).formula;
    }
    auto v = rest == "universal" ? enc::Variant::Universal : enc::Variant::Existential;
    return enc::build_predicate(enc::parse_predicate(head), v);
}

// Expected class from the construction itself, where one is declared.
inline std::optional<ordlab::logic::PrefixClass> declared(const std::string& key) {
    using namespace ordlab;
    auto sp = key.find(' ');
    std::string head = key.substr(0, sp), rest = sp == std::string::npos ? "" : key.substr(sp + 1);
    for (auto p : enc::all_predicates())
        if (enc::predicate_name(p) == head)
            return enc::expected_class(p, rest == "universal" ? enc::Variant::Universal : enc::Variant::Existential);
    if (head == "lcm") return logic::parse_prefix_class("E^4 A^6");
    if (head == "mult") return logic::parse_prefix_class("E^15 A^6");
    if (head == "div") return logic::parse_prefix_class("E^2");
    return std::nullopt;
}

}  // namespace golden
