#include <algorithm>
#include <sstream>
#include <unordered_set>

#include "ordlab/config.hpp"

namespace ordlab {

namespace {

void check_cap(std::size_t n, std::size_t cap, const std::string& what) {
    if (n > cap) throw Error(what + " exceeds the size cap of " + std::to_string(cap) + " elements");
}

// Ordinals sum w^e_i c_i with e_1 > e_2 > ... drawn from `exps` (sorted
// decreasingly), at most `max_terms` terms, coefficients 1..max_coeff.
void combine(const std::vector<Ordinal>& exps, unsigned max_terms, unsigned max_coeff, std::size_t cap,
             std::vector<Ordinal>& out) {
    std::vector<Term> acc;
    auto rec = [&](auto&& self, std::size_t from) -> void {
        out.push_back(Ordinal::from_terms(acc));
        check_cap(out.size(), cap, "domain enumeration");
        if (acc.size() == max_terms) return;
        for (std::size_t i = from; i < exps.size(); ++i)
            for (unsigned c = 1; c <= max_coeff; ++c) {
                acc.push_back(Term{exps[i], Natural(c)});
                self(self, i + 1);
                acc.pop_back();
            }
    };
    rec(rec, 0);
}

void sort_unique(std::vector<Ordinal>& v) {
    std::sort(v.begin(), v.end(), [](const Ordinal& a, const Ordinal& b) { return a < b; });
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

struct Dedup {
    std::unordered_set<Ordinal, OrdinalHash> seen;
    std::vector<Ordinal>& out;
    std::size_t cap;
    const std::string& name;

    void add(const Ordinal& a) {
        if (!seen.insert(a).second) return;
        out.push_back(a);
        check_cap(out.size(), cap, "family '" + name + "'");
    }
};

unsigned long long to_count(const std::string& tok, const std::string& spec) {
    try {
        std::size_t used = 0;
        unsigned long long v = std::stoull(tok, &used);
        if (used == tok.size()) return v;
    } catch (const std::exception&) {
    }
    throw Error("bad number '" + tok + "' in family spec '" + spec + "'");
}

}  // namespace

std::vector<Ordinal> enumerate_domain(const DomainParams& p, std::size_t cap) {
    std::vector<Ordinal> level;
    if (p.max_depth == 0) {
        for (unsigned i = 0; i <= p.coeff; ++i) level.emplace_back(i);
        return level;
    }
    for (unsigned i = 0; i <= p.seed; ++i) level.emplace_back(i);
    for (unsigned d = 1; d <= p.max_depth; ++d) {
        const bool top = d == p.max_depth;
        std::vector<Ordinal> exps(level.rbegin(), level.rend());
        std::vector<Ordinal> next;
        combine(exps, top ? p.terms : p.exp_terms, top ? p.coeff : p.exp_coeff, cap, next);
        sort_unique(next);
        level = std::move(next);
    }
    return level;
}

const WitnessFamily& EvalConfig::family(const std::string& name) const {
    if (auto it = cache_.find(name); it != cache_.end()) return *it->second;
    auto sit = specs_.find(name);
    if (sit == specs_.end()) throw Error("unknown family '" + name + "'");
    if (std::find(expanding_.begin(), expanding_.end(), name) != expanding_.end())
        throw Error("family '" + name + "' is defined in terms of itself");
    expanding_.push_back(name);
    struct Pop {
        std::vector<std::string>& v;
        ~Pop() { v.pop_back(); }
    } pop{expanding_};

    const std::string& spec = sit->second;
    auto fam = std::make_shared<WitnessFamily>();
    fam->name = name;
    fam->spec = spec;
    Dedup d{{}, fam->elements, max_family, name};

    std::istringstream is(spec);
    std::string kind;
    is >> kind;
    std::vector<std::string> args;
    for (std::string tok; is >> tok;) args.push_back(tok);
    auto arg = [&](std::size_t i) { return to_count(args.at(i), spec); };
    auto need = [&](std::size_t lo, std::size_t hi) {
        if (args.size() < lo || args.size() > hi) throw Error("wrong number of arguments in family spec '" + spec + "'");
    };

    if (kind == "omega_plus_one_powers") {
        need(1, 1);
        const Ordinal w1 = add(Ordinal::omega(), Ordinal(1));
        Ordinal acc = 1;
        for (unsigned long long i = 0; i <= arg(0); ++i) {
            d.add(acc);
            acc = mul(acc, w1);
        }
    } else if (kind == "commutant_powers") {
        need(2, 3);
        const Ordinal w1 = add(Ordinal::omega(), Ordinal(1));
        const Ordinal w21 = add(Ordinal::omega_power(Ordinal(2)), Ordinal(1));
        for (unsigned long long n = 0; n <= arg(0); ++n) {
            Ordinal base = mul(pow(w1, Natural(n)), w21);
            Ordinal acc = 1;
            for (unsigned long long r = 0; r <= arg(1); ++r) {
                if (args.size() == 3 && r * (n + 2) > arg(2)) break;
                d.add(acc);
                acc = mul(acc, base);
            }
        }
    } else if (kind == "naturals") {
        need(1, 1);
        for (unsigned long long i = 0; i <= arg(0); ++i) d.add(Ordinal(i));
    } else if (kind == "syllable_words") {
        need(1, 1);
        const std::vector<Ordinal> syl{add(Ordinal::omega(), Ordinal(1)),
                                       add(Ordinal::omega_power(Ordinal(2)), Ordinal(1)),
                                       add(Ordinal::omega_power(Ordinal(3)), Ordinal(1))};
        std::vector<Ordinal> layer{Ordinal(1)};
        d.add(Ordinal(1));
        for (unsigned long long len = 1; len <= arg(0); ++len) {
            std::vector<Ordinal> next;
            for (const auto& w : layer)
                for (const auto& s : syl) {
                    next.push_back(mul(w, s));
                    d.add(next.back());
                }
            layer = std::move(next);
        }
    } else if (kind == "domain") {
        need(0, 0);
        for (const auto& a : enumerate_domain(domain, max_family)) d.add(a);
    } else if (kind == "explicit") {
        std::string rest = spec.substr(spec.find("explicit") + 8);
        std::istringstream ls(rest);
        for (std::string item; std::getline(ls, item, ';');) {
            if (item.find_first_not_of(" \t") == std::string::npos) continue;
            d.add(parse_ordinal(item));
        }
    } else if (kind == "union") {
        for (const auto& f : args)
            for (const auto& a : family(f).elements) d.add(a);
    } else {
        throw Error("unknown family generator '" + kind + "'");
    }
    return *cache_.emplace(name, std::move(fam)).first->second;
}

}  // namespace ordlab
