#include "ordlab/ordinal.hpp"

#include <cctype>

namespace ordlab {

namespace {

class OrdinalParser {
public:
    explicit OrdinalParser(std::string_view text) : s_(text) {}

    Ordinal parse() {
        Ordinal v = sum();
        skip();
        if (i_ != s_.size()) fail("unexpected character");
        return v;
    }

private:
    [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, i_); }

    void skip() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    }

    bool eat(char c) {
        skip();
        if (i_ < s_.size() && s_[i_] == c) {
            ++i_;
            return true;
        }
        return false;
    }

    bool at_digit() {
        skip();
        return i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]));
    }

    bool eat_omega() {
        skip();
        if (i_ < s_.size() && s_[i_] == 'w') {
            ++i_;
            return true;
        }
        static constexpr std::string_view kOmega = "\xcf\x89";  // U+03C9
        if (s_.substr(i_, kOmega.size()) == kOmega) {
            i_ += kOmega.size();
            return true;
        }
        return false;
    }

    Natural nat() {
        if (!at_digit()) fail("expected natural number");
        std::size_t start = i_;
        while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
        return Natural(std::string(s_.substr(start, i_ - start)));
    }

    Ordinal sum() {
        Ordinal v = product();
        while (eat('+')) v = add(v, product());
        return v;
    }

    Ordinal product() {
        Ordinal v = power();
        for (;;) {
            if (eat('*')) v = mul(v, power());
            else if (at_digit()) v = mul(v, Ordinal(nat()));  // "w^2 3" = w^2*3
            else return v;
        }
    }

    Ordinal power() {
        skip();
        if (eat_omega()) {
            if (!eat('^')) return Ordinal::omega();
            if (at_digit()) return Ordinal::omega_power(Ordinal(nat()));
            return Ordinal::omega_power(atom());
        }
        Ordinal base = atom();
        if (eat('^')) return pow(base, nat());
        return base;
    }

    Ordinal atom() {
        if (at_digit()) return Ordinal(nat());
        if (eat_omega()) return Ordinal::omega();
        if (eat('(')) {
            Ordinal v = sum();
            if (!eat(')')) fail("expected ')'");
            return v;
        }
        skip();
        if (i_ >= s_.size()) fail("unexpected end of input");
        fail("unexpected character");
    }

    std::string_view s_;
    std::size_t i_ = 0;
};

}  // namespace

Ordinal parse_ordinal(std::string_view text) {
    return OrdinalParser(text).parse();
}

}  // namespace ordlab
