#include "ordlab/ordinal.hpp"

#include <functional>
#include <ostream>
#include <sstream>

namespace ordlab {

namespace {

std::size_t mix(std::size_t seed, std::size_t v) {
    return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

std::size_t hash_natural(const Natural& n) {
    std::size_t h = 0xcbf29ce484222325ULL;
    Natural v = n;
    do {
        h = mix(h, static_cast<std::size_t>(static_cast<unsigned long long>(v & 0xffffffffffffffffULL)));
        v >>= 64;
    } while (v != 0);
    return h;
}

}  // namespace

Ordinal::Ordinal(unsigned long long n) : Ordinal(Natural(n)) {}

Ordinal::Ordinal(const Natural& n) {
    if (n < 0) throw DomainError("ordinal from negative integer");
    if (n == 0) return;
    *this = adopt({Term{Ordinal(), n}});
}

Ordinal Ordinal::adopt(std::vector<Term> terms) {
    Ordinal r;
    if (terms.empty()) return r;
    std::size_t h = terms.size();
    for (const auto& t : terms) {
        h = mix(h, t.exponent.hash_);
        h = mix(h, hash_natural(t.coeff));
    }
    r.hash_ = h;
    r.rep_ = std::make_shared<const std::vector<Term>>(std::move(terms));
    return r;
}

Ordinal Ordinal::omega() {
    return omega_power(Ordinal(1));
}

Ordinal Ordinal::omega_power(const Ordinal& exponent, const Natural& coeff) {
    if (coeff < 1) throw DomainError("coefficient must be positive");
    return adopt({Term{exponent, coeff}});
}

Ordinal Ordinal::from_terms(std::vector<Term> terms) {
    for (std::size_t i = 0; i < terms.size(); ++i) {
        if (terms[i].coeff < 1) throw DomainError("coefficient must be positive");
        if (i > 0 && compare(terms[i - 1].exponent, terms[i].exponent) != Order::Greater)
            throw DomainError("exponents must be strictly decreasing");
    }
    return adopt(std::move(terms));
}

std::span<const Term> Ordinal::terms() const {
    if (!rep_) return {};
    return {rep_->data(), rep_->size()};
}

std::size_t Ordinal::size() const { return rep_ ? rep_->size() : 0; }

bool Ordinal::is_finite() const {
    return !rep_ || (rep_->size() == 1 && rep_->front().exponent.is_zero());
}

Natural Ordinal::to_natural() const {
    if (!rep_) return 0;
    if (!is_finite()) throw DomainError("ordinal " + to_string(*this) + " is not finite");
    return rep_->front().coeff;
}

bool operator==(const Ordinal& a, const Ordinal& b) {
    if (a.rep_ == b.rep_) return true;
    if (!a.rep_ || !b.rep_ || a.hash_ != b.hash_) return false;
    return *a.rep_ == *b.rep_;
}

Order compare(const Ordinal& a, const Ordinal& b) {
    auto ta = a.terms();
    auto tb = b.terms();
    std::size_t n = std::min(ta.size(), tb.size());
    for (std::size_t i = 0; i < n; ++i) {
        Order c = compare(ta[i].exponent, tb[i].exponent);
        if (c != Order::Equal) return c;
        if (ta[i].coeff != tb[i].coeff) return ta[i].coeff < tb[i].coeff ? Order::Less : Order::Greater;
    }
    if (ta.size() == tb.size()) return Order::Equal;
    return ta.size() < tb.size() ? Order::Less : Order::Greater;
}

Ordinal add(const Ordinal& a, const Ordinal& b) {
    if (b.is_zero()) return a;
    if (a.is_zero()) return b;
    auto ta = a.terms();
    auto tb = b.terms();
    const Ordinal& lead = tb.front().exponent;
    std::vector<Term> out;
    out.reserve(ta.size() + tb.size());
    bool merged = false;
    for (const auto& t : ta) {
        Order c = compare(t.exponent, lead);
        if (c == Order::Greater) {
            out.push_back(t);
        } else {
            if (c == Order::Equal) {
                out.push_back(Term{lead, t.coeff + tb.front().coeff});
                merged = true;
            }
            break;
        }
    }
    for (std::size_t i = merged ? 1 : 0; i < tb.size(); ++i) out.push_back(tb[i]);
    return Ordinal::from_terms(std::move(out));
}

Ordinal mul(const Ordinal& a, const Ordinal& b) {
    if (a.is_zero() || b.is_zero()) return {};
    auto ta = a.terms();
    auto tb = b.terms();
    const Ordinal& lead = ta.front().exponent;
    std::vector<Term> out;
    out.reserve(tb.size() + ta.size());
    for (const auto& t : tb) {
        if (t.exponent.is_zero()) {
            // finite tail b1: w^lead * (a_r * b1) followed by the rest of a
            out.push_back(Term{lead, ta.front().coeff * t.coeff});
            for (std::size_t i = 1; i < ta.size(); ++i) out.push_back(ta[i]);
        } else {
            out.push_back(Term{add(lead, t.exponent), t.coeff});
        }
    }
    return Ordinal::from_terms(std::move(out));
}

Ordinal pow(const Ordinal& a, const Natural& n) {
    if (n < 0) throw DomainError("negative exponent");
    Ordinal result(1);
    Ordinal base = a;
    Natural e = n;
    while (e > 0) {
        if ((e & 1) != 0) result = mul(result, base);
        e >>= 1;
        if (e > 0) base = mul(base, base);
    }
    return result;
}

Ordinal degree(const Ordinal& a) {
    if (a.is_zero()) throw DomainError("degree undefined on 0");
    return a.terms().front().exponent;
}

Ordinal valuation(const Ordinal& a) {
    if (a.is_zero()) throw DomainError("valuation undefined on 0");
    return a.terms().back().exponent;
}

bool is_successor(const Ordinal& a) {
    return valuation(a).is_zero();
}

Ordinal left_sub(const Ordinal& l, const Ordinal& m) {
    auto tl = l.terms();
    auto tm = m.terms();
    std::size_t i = 0;
    while (i < tl.size() && i < tm.size() && tl[i] == tm[i]) ++i;
    if (i == tl.size()) return Ordinal::from_terms({tm.begin() + static_cast<std::ptrdiff_t>(i), tm.end()});
    if (i == tm.size()) throw DomainError("left_sub: " + to_string(l) + " > " + to_string(m));
    Order c = compare(tl[i].exponent, tm[i].exponent);
    if (c == Order::Less)
        return Ordinal::from_terms({tm.begin() + static_cast<std::ptrdiff_t>(i), tm.end()});
    if (c == Order::Equal && tl[i].coeff < tm[i].coeff) {
        std::vector<Term> out;
        out.push_back(Term{tm[i].exponent, tm[i].coeff - tl[i].coeff});
        for (std::size_t k = i + 1; k < tm.size(); ++k) out.push_back(tm[k]);
        return Ordinal::from_terms(std::move(out));
    }
    throw DomainError("left_sub: " + to_string(l) + " > " + to_string(m));
}

std::size_t nesting_depth(const Ordinal& a) {
    if (a.is_finite()) return 0;
    std::size_t d = 0;
    for (const auto& t : a.terms()) d = std::max(d, nesting_depth(t.exponent));
    return d + 1;
}

bool below_power_tower(const Ordinal& a, const Ordinal& lambda) {
    return a < Ordinal::omega_power(Ordinal::omega_power(lambda));
}

bool is_canonical(const Ordinal& a) {
    auto t = a.terms();
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (t[i].coeff < 1 || !is_canonical(t[i].exponent)) return false;
        if (i > 0 && compare(t[i - 1].exponent, t[i].exponent) != Order::Greater) return false;
    }
    return true;
}

std::string to_string(const Ordinal& a) {
    if (a.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : a.terms()) {
        if (!first) os << " + ";
        first = false;
        if (t.exponent.is_zero()) {
            os << t.coeff;
            continue;
        }
        os << 'w';
        if (t.exponent.is_finite()) {
            if (t.exponent.to_natural() != 1) os << '^' << t.exponent.to_natural();
        } else {
            os << "^(" << to_string(t.exponent) << ')';
        }
        if (t.coeff != 1) os << '*' << t.coeff;
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Ordinal& a) {
    return os << to_string(a);
}

}  // namespace ordlab
