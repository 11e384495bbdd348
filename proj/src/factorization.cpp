#include "ordlab/factorization.hpp"

#include <cctype>
#include <sstream>

#include <boost/multiprecision/miller_rabin.hpp>

namespace ordlab {

namespace {

const Ordinal kOne(1);

Ordinal successor_prime_value(const Ordinal& mu) {
    return add(Ordinal::omega_power(mu), kOne);
}

Natural integer_root(const Natural& a, unsigned j) {
    Natural lo = 0, hi = 1;
    while (boost::multiprecision::pow(hi, j) <= a) hi <<= 1;
    while (lo + 1 < hi) {
        Natural mid = (lo + hi) / 2;
        if (boost::multiprecision::pow(mid, j) <= a)
            lo = mid;
        else
            hi = mid;
    }
    return lo;
}

// Primitive root of a successor a > 1: the root r with r^j = a and j maximal.
std::pair<Ordinal, Natural> primitive_root(const Ordinal& a) {
    if (a.is_finite()) {
        Natural v = a.to_natural();
        unsigned bits = static_cast<unsigned>(boost::multiprecision::msb(v));
        for (unsigned j = bits; j >= 2; --j) {
            Natural r = integer_root(v, j);
            if (boost::multiprecision::pow(r, j) == v) return {Ordinal(r), Natural(j)};
        }
        return {a, Natural(1)};
    }
    Factorization f = jacobsthal_factorize(a);
    std::size_t k = f.syllables.size();
    for (std::size_t j = k; j >= 1; --j) {
        if (k % j != 0) continue;
        std::size_t m = k / j;
        Factorization g;
        g.a0 = f.a0;
        g.syllables.assign(f.syllables.begin(), f.syllables.begin() + static_cast<std::ptrdiff_t>(m));
        g.syllables.back().a = f.syllables.back().a;
        Ordinal root = recompose(g);
        if (pow(root, j) == a) return {root, Natural(j)};
    }
    return {a, Natural(1)};
}

// Smallest n <= limit with root^n = b, if any.
std::optional<Natural> power_index(const Ordinal& root, const Ordinal& b, unsigned limit) {
    if (b == kOne) return Natural(0);
    if (root == kOne) return std::nullopt;
    if (!root.is_finite()) {
        std::size_t rs = jacobsthal_factorize(root).syllables.size();
        std::size_t bs = b.is_finite() ? 0 : jacobsthal_factorize(b).syllables.size();
        if (bs == 0 || bs % rs != 0) return std::nullopt;
        Natural n = bs / rs;
        if (pow(root, n) == b) return n;
        return std::nullopt;
    }
    Ordinal acc = kOne;
    for (unsigned n = 1; n <= limit; ++n) {
        acc = mul(acc, root);
        if (acc == b) return Natural(n);
        if (acc > b) break;
    }
    return std::nullopt;
}

}  // namespace

bool is_prime_natural(const Natural& n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if ((n & 1) == 0) return false;
    if (n < 1000000) {
        for (Natural d = 3; d * d <= n; d += 2)
            if (n % d == 0) return false;
        return true;
    }
    return boost::multiprecision::miller_rabin_test(n, 25);
}

std::optional<PrimeKind> classify_prime(const Ordinal& a) {
    if (a.is_zero()) throw DomainError("classify_prime undefined on 0");
    if (a.is_finite()) {
        Natural v = a.to_natural();
        if (is_prime_natural(v)) return NaturalPrime{v};
        return std::nullopt;
    }
    auto t = a.terms();
    if (t.size() == 2 && t[0].coeff == 1 && t[1].exponent.is_zero() && t[1].coeff == 1)
        return SuccessorPrime{t[0].exponent};
    if (t.size() == 1 && t[0].coeff == 1) {
        auto e = t[0].exponent.terms();
        if (e.size() == 1 && e[0].coeff == 1) return LimitPrime{e[0].exponent};
    }
    return std::nullopt;
}

std::string to_string(const PrimeKind& k) {
    struct Visitor {
        std::string operator()(const NaturalPrime& p) const {
            return "natural(" + p.p.str() + ")";
        }
        std::string operator()(const SuccessorPrime& p) const {
            return "successor(mu=" + to_string(p.mu) + ")";
        }
        std::string operator()(const LimitPrime& p) const {
            return "limit(xi=" + to_string(p.xi) + ")";
        }
    };
    return std::visit(Visitor{}, k);
}

Factorization jacobsthal_factorize(const Ordinal& a) {
    if (a.is_zero()) throw DomainError("factorization undefined on 0");
    Factorization f;
    Ordinal a1 = valuation(a);
    for (const auto& t : a1.terms()) f.limit_part.push_back(LimitFactor{t.exponent, t.coeff});

    auto terms = a.terms();
    Ordinal prev;
    for (std::size_t i = terms.size(); i-- > 0;) {
        Ordinal e = left_sub(a1, terms[i].exponent);
        if (i + 1 == terms.size()) {
            f.a0 = terms[i].coeff;
        } else {
            f.syllables.push_back(Syllable{left_sub(prev, e), terms[i].coeff});
        }
        prev = e;
    }
    return f;
}

Ordinal limit_exponent(const Factorization& f) {
    std::vector<Term> terms;
    for (const auto& l : f.limit_part) terms.push_back(Term{l.xi, l.n});
    return Ordinal::from_terms(std::move(terms));
}

Ordinal successor_value(const Factorization& f) {
    Ordinal v(f.a0);
    for (const auto& s : f.syllables) v = mul(mul(v, successor_prime_value(s.mu)), Ordinal(s.a));
    return v;
}

Ordinal recompose(const Factorization& f) {
    return mul(Ordinal::omega_power(limit_exponent(f)), successor_value(f));
}

bool is_valid(const Factorization& f) {
    for (std::size_t i = 0; i < f.limit_part.size(); ++i) {
        if (f.limit_part[i].n < 1) return false;
        if (i > 0 && !(f.limit_part[i - 1].xi > f.limit_part[i].xi)) return false;
    }
    if (f.a0 < 1) return false;
    for (const auto& s : f.syllables)
        if (s.a < 1 || s.mu.is_zero()) return false;
    return true;
}

Ordinal max_successor_right_factor(const Ordinal& a) {
    return successor_value(jacobsthal_factorize(a));
}

Factorization product_of_factorizations(const Factorization& f, const Factorization& g) {
    Factorization out;
    if (g.limit_part.empty()) {
        out.limit_part = f.limit_part;
        out.a0 = f.a0;
        out.syllables = f.syllables;
        if (out.syllables.empty())
            out.a0 *= g.a0;
        else
            out.syllables.back().a *= g.a0;
        out.syllables.insert(out.syllables.end(), g.syllables.begin(), g.syllables.end());
        return out;
    }
    Ordinal succ_degree;
    for (const auto& s : f.syllables) succ_degree = add(succ_degree, s.mu);
    Ordinal e = add(add(limit_exponent(f), succ_degree), limit_exponent(g));
    for (const auto& t : e.terms()) out.limit_part.push_back(LimitFactor{t.exponent, t.coeff});
    out.a0 = g.a0;
    out.syllables = g.syllables;
    return out;
}

bool commute(const Ordinal& a, const Ordinal& b) {
    return mul(a, b) == mul(b, a);
}

RootSearch successor_common_root(const Ordinal& a, const Ordinal& b, unsigned bound) {
    if (!is_successor(a) || !is_successor(b))
        throw DomainError("successor_common_root requires successor ordinals");
    if (!commute(a, b)) return {RootStatus::NotCommuting, std::nullopt};
    if (a == b) return {RootStatus::Found, CommonRoot{a, 1, 1}};

    bool a_is_one = a == kOne;
    auto [root, j] = a_is_one ? primitive_root(b) : primitive_root(a);
    if (a_is_one) {
        CommonRoot r{root, 0, j};
        if (j > bound) return {RootStatus::BoundExceeded, std::nullopt};
        return {RootStatus::Found, r};
    }
    if (j > bound) return {RootStatus::BoundExceeded, std::nullopt};
    auto n = power_index(root, b, bound);
    if (!n) {
        // For infinite successors a commuting pair always has a common root;
        // finite pairs such as 2, 3 commute without one.
        if (root.is_finite() && b.is_finite()) {
            auto big = power_index(root, b, 64 * bound + 64);
            if (big) return {RootStatus::BoundExceeded, std::nullopt};
        }
        return {RootStatus::NoRoot, std::nullopt};
    }
    if (*n > bound) return {RootStatus::BoundExceeded, std::nullopt};
    return {RootStatus::Found, CommonRoot{root, j, *n}};
}

std::vector<Ordinal> lemma8_solution_set(unsigned n, unsigned r_max) {
    Ordinal base = mul(pow(successor_prime_value(kOne), n), successor_prime_value(Ordinal(2)));
    std::vector<Ordinal> out;
    Ordinal acc = kOne;
    for (unsigned r = 0; r <= r_max; ++r) {
        out.push_back(acc);
        acc = mul(acc, base);
    }
    return out;
}

// ---------------------------------------------------------------------------
// text form

namespace {

std::string syllable_text(const Ordinal& mu) {
    if (mu == kOne) return "(w+1)";
    if (mu.is_finite()) return "(w^" + mu.to_natural().str() + "+1)";
    return "(w^(" + to_string(mu) + ")+1)";
}

}  // namespace

std::string to_string(const Factorization& f) {
    std::ostringstream os;
    if (!f.limit_part.empty()) {
        os << "w^[";
        for (std::size_t i = 0; i < f.limit_part.size(); ++i) {
            if (i) os << ' ';
            os << '(' << to_string(f.limit_part[i].xi) << ',' << f.limit_part[i].n << ')';
        }
        os << ']';
        if (f.a0 == 1 && f.syllables.empty()) return os.str();
        os << " * ";
    }
    std::vector<std::string> parts;
    if (f.a0 != 1 || f.syllables.empty()) parts.push_back(f.a0.str());
    for (const auto& s : f.syllables) {
        parts.push_back(syllable_text(s.mu));
        if (s.a != 1) parts.push_back(s.a.str());
    }
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) os << ' ';
        os << parts[i];
    }
    return os.str();
}

Factorization parse_factorization(std::string_view text) {
    Factorization f;
    std::size_t i = 0;
    auto skip = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    auto group_end = [&](std::size_t open) {
        int depth = 0;
        for (std::size_t k = open; k < text.size(); ++k) {
            if (text[k] == '(') ++depth;
            if (text[k] == ')' && --depth == 0) return k;
        }
        throw ParseError("unbalanced parentheses", open);
    };
    auto nat = [&] {
        std::size_t start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (start == i) throw ParseError("expected natural number", i);
        return Natural(std::string(text.substr(start, i - start)));
    };

    skip();
    if (text.substr(i, 3) == "w^[") {
        i += 3;
        for (;;) {
            skip();
            if (i < text.size() && text[i] == ']') {
                ++i;
                break;
            }
            if (i >= text.size() || text[i] != '(') throw ParseError("expected '(' in limit part", i);
            std::size_t close = group_end(i);
            std::string_view inner = text.substr(i + 1, close - i - 1);
            std::size_t comma = inner.rfind(',');
            if (comma == std::string_view::npos) throw ParseError("expected ',' in limit factor", i);
            Natural n(std::string(inner.substr(comma + 1)));
            f.limit_part.push_back(LimitFactor{parse_ordinal(inner.substr(0, comma)), n});
            i = close + 1;
        }
        skip();
        if (i < text.size() && text[i] == '*') ++i;
    }

    bool seen_any = false;
    Natural pending = 1;
    for (;;) {
        skip();
        if (i >= text.size()) break;
        if (std::isdigit(static_cast<unsigned char>(text[i]))) {
            pending *= nat();
        } else if (text[i] == '(') {
            std::size_t close = group_end(i);
            Ordinal p = parse_ordinal(text.substr(i + 1, close - i - 1));
            auto kind = p.is_zero() || p.is_finite() ? std::nullopt : classify_prime(p);
            if (!kind || !std::holds_alternative<SuccessorPrime>(*kind))
                throw ParseError("expected a factor of the form (w^mu+1)", i);
            if (f.syllables.empty())
                f.a0 = pending;
            else
                f.syllables.back().a = pending;
            f.syllables.push_back(Syllable{std::get<SuccessorPrime>(*kind).mu, 1});
            pending = 1;
            i = close + 1;
        } else {
            throw ParseError("unexpected character in factorization", i);
        }
        seen_any = true;
    }
    if (f.syllables.empty())
        f.a0 = pending;
    else
        f.syllables.back().a = pending;
    if (!seen_any && f.limit_part.empty()) throw ParseError("empty factorization", i);
    if (!is_valid(f)) throw ParseError("factorization violates canonical form", 0);
    return f;
}

}  // namespace ordlab
