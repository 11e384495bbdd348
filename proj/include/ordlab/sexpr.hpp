#pragma once

// Minimal s-expression reader shared by the formula, system and equation
// syntaxes.  Atoms are maximal runs of characters other than whitespace,
// parentheses and ';' (which starts a line comment).

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "ordlab/ordinal.hpp"

namespace ordlab::sexpr {

struct Node {
    std::string atom;
    std::vector<Node> items;
    bool list = false;
    std::size_t pos = 0;

    bool is_atom() const { return !list; }

    const std::string& head() const {
        static const std::string empty;
        if (items.empty() || !items.front().is_atom()) return empty;
        return items.front().atom;
    }

    void expect_arity(std::size_t n) const {
        if (items.size() != n + 1)
            throw ParseError("'" + head() + "' expects " + std::to_string(n) + " argument(s)", pos);
    }
};

class Reader {
public:
    explicit Reader(std::string_view text) : s_(text) {}

    bool at_end() {
        skip();
        return i_ >= s_.size();
    }

    Node read() {
        skip();
        if (i_ >= s_.size()) throw ParseError("unexpected end of input", i_);
        Node n;
        n.pos = i_;
        if (s_[i_] == '(') {
            ++i_;
            n.list = true;
            for (;;) {
                skip();
                if (i_ >= s_.size()) throw ParseError("missing ')'", n.pos);
                if (s_[i_] == ')') {
                    ++i_;
                    break;
                }
                n.items.push_back(read());
            }
            return n;
        }
        if (s_[i_] == ')') throw ParseError("unexpected ')'", i_);
        std::size_t start = i_;
        while (i_ < s_.size() && !std::isspace(static_cast<unsigned char>(s_[i_])) && s_[i_] != '(' &&
               s_[i_] != ')' && s_[i_] != ';')
            ++i_;
        n.atom = std::string(s_.substr(start, i_ - start));
        return n;
    }

private:
    void skip() {
        for (;;) {
            while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
            if (i_ < s_.size() && s_[i_] == ';') {
                while (i_ < s_.size() && s_[i_] != '\n') ++i_;
                continue;
            }
            return;
        }
    }

    std::string_view s_;
    std::size_t i_ = 0;
};

inline Node parse_one(std::string_view text) {
    Reader r(text);
    Node n = r.read();
    if (!r.at_end()) throw ParseError("trailing input after expression", 0);
    return n;
}

}  // namespace ordlab::sexpr
