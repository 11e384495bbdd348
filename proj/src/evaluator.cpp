#include "ordlab/evaluator.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <unordered_map>

#include <boost/functional/hash.hpp>

namespace ordlab {

namespace L = logic;

// -- direct evaluation -----------------------------------------------------

Ordinal eval_term(const L::Term& t, const Assignment& a) {
    switch (t->kind) {
        case L::TermNode::Kind::Var: {
            auto it = a.find(t->name);
            if (it == a.end()) throw Error("unbound variable '" + t->name + "'");
            return it->second;
        }
        case L::TermNode::Kind::Const: return L::constant_value(t->constant);
        case L::TermNode::Kind::Prod: return mul(eval_term(t->left, a), eval_term(t->right, a));
    }
    throw Error("bad term");
}

bool eval_qf(const L::Formula& f, const Assignment& a) {
    switch (f->kind) {
        case L::Kind::Eq: return eval_term(f->lhs, a) == eval_term(f->rhs, a);
        case L::Kind::Neq: return !(eval_term(f->lhs, a) == eval_term(f->rhs, a));
        case L::Kind::Not: return !eval_qf(f->body(), a);
        case L::Kind::And:
            for (const auto& c : f->children)
                if (!eval_qf(c, a)) return false;
            return true;
        case L::Kind::Or:
            for (const auto& c : f->children)
                if (eval_qf(c, a)) return true;
            return false;
        case L::Kind::Implies: return !eval_qf(f->children[0], a) || eval_qf(f->children[1], a);
        case L::Kind::Exists:
        case L::Kind::Forall: throw Error("eval_qf expects a quantifier-free formula");
    }
    throw Error("bad formula");
}

std::string Verdict::evidence() const {
    if (prefix.entries.empty()) return "exact";
    if (holds && prefix.count(L::Quant::Forall) == 0) return "sound";
    if (!holds && prefix.count(L::Quant::Exists) == 0) return "sound";
    return "restricted";
}

std::string verdict_name(const Verdict& v) { return v.holds ? "HoldsInFamilies" : "FailsInFamilies"; }

bool semantic_oracle(enc::Predicate which, const Ordinal& a) {
    static const Ordinal w = Ordinal::omega();
    switch (which) {
        case enc::Predicate::Zero: return a.is_zero();
        case enc::Predicate::One: return a == Ordinal(1);
        case enc::Predicate::Prime: return !a.is_zero() && classify_prime(a).has_value();
        case enc::Predicate::LimPrime: {
            auto t = a.terms();
            if (t.size() != 1 || t[0].coeff != 1) return false;
            auto e = t[0].exponent.terms();
            return e.size() == 1 && e[0].coeff == 1;
        }
        case enc::Predicate::Omega: return a == w;
        case enc::Predicate::OmegaPlusOne: return a == add(w, Ordinal(1));
        case enc::Predicate::OmegaSquarePlusOne: return a == add(Ordinal::omega_power(Ordinal(2)), Ordinal(1));
    }
    return false;
}

// -- guided evaluation -----------------------------------------------------

namespace {

using Id = std::uint32_t;
constexpr Id kUnset = UINT32_MAX;
constexpr Id kDefer = UINT32_MAX - 1;

// Interned ordinals with a product table.  Values interned through keep()
// are permanent; products live above the watermark and are dropped once
// their total size passes a budget, so ids of products are only valid until
// the next flush_if_large().
class Pool {
public:
    Pool() {
        zero_ = keep(Ordinal(0));
        one_ = keep(Ordinal(1));
    }

    Id keep(const Ordinal& a) {
        auto it = ids_.find(a);
        if (it != ids_.end() && it->second < permanent_) return it->second;
        flush();
        Id id = intern(a);
        permanent_ = static_cast<Id>(values_.size());
        return id;
    }

    const Ordinal& value(Id id) const { return values_[id]; }

    /// Degree of a nonzero value, cached.
    const Ordinal& degree_of(Id id) {
        if (degrees_.size() < values_.size()) degrees_.resize(values_.size());
        auto& d = degrees_[id];
        if (!d) d = ordlab::degree(values_[id]);
        return *d;
    }

    /// kDefer instead of a fresh product when both factors are long.
    Id mul(Id a, Id b, bool cheap = false) {
        if (a == zero_ || b == zero_) return zero_;
        if (a == one_) return b;
        if (b == one_) return a;
        std::uint64_t key = (static_cast<std::uint64_t>(a) << 32) | b;
        auto it = products_.find(key);
        if (it != products_.end()) return it->second;
        if (cheap && values_[a].size() + values_[b].size() > kLong) return kDefer;
        Ordinal p = ordlab::mul(values_[a], values_[b]);
        std::size_t before = values_.size();
        Id r = intern(p);
        if (values_.size() != before) transient_terms_ += p.size() + 1;
        products_.emplace(key, r);
        return r;
    }

    void flush_if_large() {
        if (transient_terms_ > kBudget) flush();
    }

    Id zero() const { return zero_; }

private:
    static constexpr std::size_t kBudget = 2'000'000;
    static constexpr std::size_t kLong = 24;

    Id intern(const Ordinal& a) {
        auto [it, fresh] = ids_.try_emplace(a, static_cast<Id>(values_.size()));
        if (fresh) values_.push_back(a);
        return it->second;
    }

    void flush() {
        if (values_.size() == permanent_) return;
        for (std::size_t i = permanent_; i < values_.size(); ++i) ids_.erase(values_[i]);
        values_.resize(permanent_);
        if (degrees_.size() > permanent_) degrees_.resize(permanent_);
        std::erase_if(products_, [&](const auto& kv) {
            return kv.second >= permanent_ || (kv.first >> 32) >= permanent_ || (kv.first & 0xffffffffu) >= permanent_;
        });
        transient_terms_ = 0;
    }

    std::vector<Ordinal> values_;
    std::vector<std::optional<Ordinal>> degrees_;
    std::unordered_map<Ordinal, Id, OrdinalHash> ids_;
    std::unordered_map<std::uint64_t, Id> products_;
    Id zero_ = 0, one_ = 0, permanent_ = 0;
    std::size_t transient_terms_ = 0;
};

struct TNode {
    enum class K { Var, Const, Prod } k;
    Id v = 0;  // slot or constant id
    int l = -1, r = -1;
};

enum class NK { Atom, And, Or, Quant, True, False };
enum class TV : std::uint8_t { F, T, U };

struct Node {
    NK k;
    bool eq = true;
    int lhs = -1, rhs = -1;
    std::vector<int> ch;
    bool exists = false;
    std::vector<Id> vars;
    int body = -1;
    std::vector<Id> fv;      // sorted
    std::vector<Id> inside;  // bound slots of this node and its descendants, sorted
    bool qf = true;
};

struct KeyHash {
    std::size_t operator()(const std::vector<Id>& v) const { return boost::hash_range(v.begin(), v.end()); }
};

std::vector<Id> set_union(const std::vector<Id>& a, const std::vector<Id>& b) {
    std::vector<Id> out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

bool intersects(const std::vector<Id>& sorted, Id x) { return std::binary_search(sorted.begin(), sorted.end(), x); }

}  // namespace

struct GuidedChecker::Impl {
    L::Formula source;
    const EvalConfig* cfg;
    Pool pool;
    std::vector<TNode> terms;
    std::vector<std::vector<Id>> term_vars;
    std::vector<Node> nodes;
    int root = -1;

    std::vector<std::string> slot_name;
    std::vector<const std::vector<Id>*> slot_family;  // null for free slots
    std::map<std::string, std::vector<Id>> family_ids;
    std::map<std::string, Id> free_slot;

    struct Block {
        bool exists;
        std::vector<std::string> names;
        std::vector<Id> slots;
    };
    std::vector<Block> blocks;
    L::Formula nnf_form;

    std::vector<Id> assign;
    std::vector<Id> pin;  // kUnset when not pinned
    std::vector<char> no_memo;
    std::vector<std::unordered_map<std::vector<Id>, bool, KeyHash>> memo;

    // ---- compilation
    Id new_slot(const std::string& name, bool bound) {
        Id s = static_cast<Id>(slot_name.size());
        slot_name.push_back(name);
        const std::vector<Id>* fam = nullptr;
        if (bound) {
            std::string fname = cfg->family_for(name);
            auto it = family_ids.find(fname);
            if (it == family_ids.end()) {
                std::vector<Id> ids;
                for (const auto& a : cfg->family(fname).elements) ids.push_back(pool.keep(a));
                it = family_ids.emplace(fname, std::move(ids)).first;
            }
            fam = &it->second;
        }
        slot_family.push_back(fam);
        return s;
    }

    int add_term(const L::Term& t, const std::map<std::string, Id>& scope) {
        TNode n{};
        std::vector<Id> vs;
        switch (t->kind) {
            case L::TermNode::Kind::Var: {
                n.k = TNode::K::Var;
                auto it = scope.find(t->name);
                if (it != scope.end()) {
                    n.v = it->second;
                } else {
                    auto fit = free_slot.find(t->name);
                    if (fit == free_slot.end()) fit = free_slot.emplace(t->name, new_slot(t->name, false)).first;
                    n.v = fit->second;
                }
                vs = {n.v};
                break;
            }
            case L::TermNode::Kind::Const:
                n.k = TNode::K::Const;
                n.v = pool.keep(L::constant_value(t->constant));
                break;
            case L::TermNode::Kind::Prod:
                n.k = TNode::K::Prod;
                n.l = add_term(t->left, scope);
                n.r = add_term(t->right, scope);
                vs = set_union(term_vars[n.l], term_vars[n.r]);
                break;
        }
        terms.push_back(n);
        term_vars.push_back(std::move(vs));
        return static_cast<int>(terms.size()) - 1;
    }

    int push(Node n) {
        nodes.push_back(std::move(n));
        return static_cast<int>(nodes.size()) - 1;
    }

    int make_const(bool v) {
        Node n;
        n.k = v ? NK::True : NK::False;
        return push(std::move(n));
    }

    int make_atom(bool is_eq, int l, int r) {
        Node n;
        n.k = NK::Atom;
        n.eq = is_eq;
        n.lhs = l;
        n.rhs = r;
        n.fv = set_union(term_vars[l], term_vars[r]);
        return push(std::move(n));
    }

    int make_junction(NK k, const std::vector<int>& children) {
        const NK absorbing = k == NK::And ? NK::False : NK::True;
        const NK neutral = k == NK::And ? NK::True : NK::False;
        std::vector<int> flat;
        for (int c : children) {
            const Node& cn = nodes[c];
            if (cn.k == absorbing) return make_const(absorbing == NK::True);
            if (cn.k == neutral) continue;
            if (cn.k == k)
                flat.insert(flat.end(), cn.ch.begin(), cn.ch.end());
            else
                flat.push_back(c);
        }
        if (flat.empty()) return make_const(neutral == NK::True);
        if (flat.size() == 1) return flat.front();
        std::stable_partition(flat.begin(), flat.end(), [&](int c) { return nodes[c].qf; });
        Node n;
        n.k = k;
        for (int c : flat) {
            n.fv = set_union(n.fv, nodes[c].fv);
            n.inside = set_union(n.inside, nodes[c].inside);
            n.qf = n.qf && nodes[c].qf;
        }
        n.ch = std::move(flat);
        return push(std::move(n));
    }

    int make_quant(bool ex, std::vector<Id> vars, int body) {
        Node n;
        n.k = NK::Quant;
        n.exists = ex;
        n.body = body;
        n.qf = false;
        std::vector<Id> sorted = vars;
        std::sort(sorted.begin(), sorted.end());
        const Node& b = nodes[body];
        std::set_difference(b.fv.begin(), b.fv.end(), sorted.begin(), sorted.end(), std::back_inserter(n.fv));
        n.inside = set_union(b.inside, sorted);
        n.vars = std::move(vars);
        return push(std::move(n));
    }

    int build(const L::Formula& f, std::map<std::string, Id> scope, bool leading) {
        switch (f->kind) {
            case L::Kind::Eq:
            case L::Kind::Neq:
                return make_atom(f->kind == L::Kind::Eq, add_term(f->lhs, scope), add_term(f->rhs, scope));
            case L::Kind::And:
            case L::Kind::Or: {
                std::vector<int> ch;
                for (const auto& c : f->children) ch.push_back(build(c, scope, false));
                return make_junction(f->kind == L::Kind::And ? NK::And : NK::Or, ch);
            }
            case L::Kind::Exists:
            case L::Kind::Forall: {
                const bool ex = f->kind == L::Kind::Exists;
                std::vector<Id> vars;
                for (const auto& v : f->vars) {
                    Id s = new_slot(v, true);
                    scope[v] = s;
                    vars.push_back(s);
                }
                if (leading) {
                    if (blocks.empty() || blocks.back().exists != ex) blocks.push_back({ex, {}, {}});
                    blocks.back().names.insert(blocks.back().names.end(), f->vars.begin(), f->vars.end());
                    blocks.back().slots.insert(blocks.back().slots.end(), vars.begin(), vars.end());
                }
                int body = build(f->body(), scope, leading);
                return make_quant(ex, std::move(vars), body);
            }
            default: throw Error("internal: formula not in negation normal form");
        }
    }

    // ---- miniscoping
    bool family_empty(Id s) const { return slot_family[s] && slot_family[s]->empty(); }

    int mini(int n) {
        Node node = nodes[n];
        switch (node.k) {
            case NK::Atom:
            case NK::True:
            case NK::False: return n;
            case NK::And:
            case NK::Or: {
                std::vector<int> ch;
                for (int c : node.ch) ch.push_back(mini(c));
                return make_junction(node.k, ch);
            }
            case NK::Quant: return mini_quant(node.exists, node.vars, mini(node.body));
        }
        return n;
    }

    int mini_quant(bool ex, std::vector<Id> vars, int body) {
        for (Id s : vars)
            if (family_empty(s)) return make_const(!ex);
        std::vector<Id> kept;
        for (Id s : vars)
            if (intersects(nodes[body].fv, s) && std::find(kept.begin(), kept.end(), s) == kept.end())
                kept.push_back(s);
        if (kept.empty()) return body;
        const Node b = nodes[body];
        if (b.k == NK::Quant && b.exists == ex) {
            kept.insert(kept.end(), b.vars.begin(), b.vars.end());
            return mini_quant(ex, kept, b.body);
        }
        const NK junction = ex ? NK::And : NK::Or;
        const NK distributes = ex ? NK::Or : NK::And;
        if (b.k == distributes) {
            std::vector<int> ch;
            for (int c : b.ch) ch.push_back(mini_quant(ex, kept, c));
            return make_junction(distributes, ch);
        }
        if (b.k == junction) return mini_junction(ex, kept, b.ch);
        return make_quant(ex, kept, body);
    }

    int mini_junction(bool ex, const std::vector<Id>& vars, const std::vector<int>& children) {
        const NK junction = ex ? NK::And : NK::Or;
        std::vector<int> results, rest;
        for (int c : children) {
            bool touches = false;
            for (Id s : vars) touches = touches || intersects(nodes[c].fv, s);
            (touches ? rest : results).push_back(c);
        }
        // connected components of `rest` through shared variables
        std::vector<std::size_t> parent(rest.size());
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](std::size_t i) {
            while (parent[i] != i) i = parent[i] = parent[parent[i]];
            return i;
        };
        for (Id s : vars) {
            std::size_t first = rest.size();
            for (std::size_t i = 0; i < rest.size(); ++i) {
                if (!intersects(nodes[rest[i]].fv, s)) continue;
                if (first == rest.size())
                    first = i;
                else
                    parent[find(i)] = find(first);
            }
        }
        std::vector<std::size_t> order;
        std::map<std::size_t, std::vector<int>> comps;
        for (std::size_t i = 0; i < rest.size(); ++i) {
            std::size_t r = find(i);
            if (!comps.count(r)) order.push_back(r);
            comps[r].push_back(rest[i]);
        }
        for (std::size_t r : order) {
            const auto& comp = comps[r];
            std::vector<Id> cv;
            for (Id s : vars)
                for (int c : comp)
                    if (intersects(nodes[c].fv, s)) {
                        cv.push_back(s);
                        break;
                    }
            if (comp.size() == 1) {
                results.push_back(mini_quant(ex, cv, comp[0]));
                continue;
            }
            std::vector<Id> single, shared;
            for (Id s : cv) {
                int cnt = 0;
                for (int c : comp) cnt += intersects(nodes[c].fv, s) ? 1 : 0;
                (cnt == 1 ? single : shared).push_back(s);
            }
            if (single.empty()) {
                results.push_back(make_quant(ex, cv, make_junction(junction, comp)));
                continue;
            }
            std::vector<int> pushed;
            for (int c : comp) {
                std::vector<Id> own;
                for (Id s : single)
                    if (intersects(nodes[c].fv, s)) own.push_back(s);
                pushed.push_back(own.empty() ? c : mini_quant(ex, own, c));
            }
            results.push_back(shared.empty() ? make_junction(junction, pushed) : mini_junction(ex, shared, pushed));
        }
        return make_junction(junction, results);
    }

    // ---- evaluation
    Id term_value(int t, bool cheap = false) {
        const TNode& n = terms[t];
        switch (n.k) {
            case TNode::K::Var: return assign[n.v];
            case TNode::K::Const: return n.v;
            case TNode::K::Prod: {
                Id l = term_value(n.l, cheap);
                if (l == pool.zero()) return l;
                Id r = term_value(n.r, cheap);
                if (l == kUnset || r == kUnset) return r == pool.zero() ? r : kUnset;
                if (r == pool.zero()) return r;
                if (l == kDefer || r == kDefer) return kDefer;
                return pool.mul(l, r, cheap);
            }
        }
        return kUnset;
    }

    // Zero flag and degree of a term without multiplying out: a product is 0
    // iff a factor is, and deg(l r) = deg(l) + deg(r) for r != 0.
    struct Sig {
        bool zero;
        Ordinal deg;
    };

    std::optional<Sig> sig(int t) {
        const TNode& n = terms[t];
        if (n.k != TNode::K::Prod) {
            Id v = n.k == TNode::K::Var ? assign[n.v] : n.v;
            if (v == kUnset) return std::nullopt;
            if (v == pool.zero()) return Sig{true, {}};
            return Sig{false, pool.degree_of(v)};
        }
        auto l = sig(n.l);
        if (l && l->zero) return l;
        auto r = sig(n.r);
        if (!l || !r) return r && r->zero ? r : std::nullopt;
        if (r->zero) return r;
        return Sig{false, add(l->deg, r->deg)};
    }

    TV eval3(int id) {
        const Node& n = nodes[id];
        switch (n.k) {
            case NK::True: return TV::T;
            case NK::False: return TV::F;
            case NK::Atom: {
                pool.flush_if_large();
                Id l = term_value(n.lhs, true);
                if (l == kUnset) return TV::U;
                Id r = term_value(n.rhs, true);
                if (r == kUnset) return TV::U;
                if (l == kDefer || r == kDefer) {
                    // long uncached products: try the degrees first
                    auto a = sig(n.lhs), b = sig(n.rhs);
                    if (a->zero != b->zero || (!a->zero && a->deg != b->deg)) return n.eq ? TV::F : TV::T;
                    l = term_value(n.lhs);
                    r = term_value(n.rhs);
                }
                return (l == r) == n.eq ? TV::T : TV::F;
            }
            case NK::And:
            case NK::Or: {
                const TV stop = n.k == NK::And ? TV::F : TV::T;
                TV res = n.k == NK::And ? TV::T : TV::F;
                for (int c : n.ch) {
                    TV v = eval3(c);
                    if (v == stop) return stop;
                    if (v == TV::U) res = TV::U;
                }
                return res;
            }
            case NK::Quant:
                for (Id s : n.fv)
                    if (assign[s] == kUnset) return TV::U;
                return solve(id) ? TV::T : TV::F;
        }
        return TV::U;
    }

    bool solve(int id) {
        const bool cache = !no_memo[static_cast<std::size_t>(id)];
        std::vector<Id> key;
        if (cache) {
            const Node& n = nodes[id];
            key.reserve(n.fv.size());
            for (Id s : n.fv) key.push_back(assign[s]);
            auto& m = memo[static_cast<std::size_t>(id)];
            if (auto it = m.find(key); it != m.end()) return it->second;
        }
        bool r = dfs(id);
        if (cache) memo[static_cast<std::size_t>(id)].emplace(std::move(key), r);
        return r;
    }

    Id pick(const Node& q) {
        const Node& b = nodes[q.body];
        if (b.k == NK::And || b.k == NK::Or) {
            int best = -1;
            std::size_t best_count = SIZE_MAX;
            bool best_qf = false;
            for (int c : b.ch) {
                std::size_t cnt = 0;
                for (Id s : nodes[c].fv) cnt += assign[s] == kUnset ? 1 : 0;
                if (cnt == 0) continue;
                bool qf = nodes[c].qf;
                if (cnt < best_count || (cnt == best_count && qf && !best_qf)) {
                    best = c;
                    best_count = cnt;
                    best_qf = qf;
                }
            }
            if (best >= 0)
                for (Id s : q.vars)
                    if (assign[s] == kUnset && intersects(nodes[best].fv, s)) return s;
        }
        for (Id s : q.vars)
            if (assign[s] == kUnset) return s;
        return kUnset;
    }

    bool dfs(int id) {
        const Node& q = nodes[id];
        TV v = eval3(q.body);
        if (v != TV::U) return v == TV::T;
        Id s = pick(q);
        if (s == kUnset) throw Error("internal: undetermined body with all variables assigned");
        const bool ex = q.exists;
        auto try_value = [&](Id val) {
            assign[s] = val;
            bool r = dfs(id);
            assign[s] = kUnset;
            return r;
        };
        if (pin[s] != kUnset) return try_value(pin[s]);
        for (Id val : *slot_family[s]) {
            bool r = try_value(val);
            if (ex && r) return true;
            if (!ex && !r) return false;
        }
        return !ex;
    }

    // ---- driver
    Impl(const L::Formula& f, const EvalConfig& c) : source(f), cfg(&c) {
        nnf_form = L::nnf(f);
        int raw = build(nnf_form, {}, true);
        root = mini(raw);
        memo.resize(nodes.size());
        no_memo.assign(nodes.size(), 0);
        assign.assign(slot_name.size(), kUnset);
        pin.assign(slot_name.size(), kUnset);
    }

    Id slot_of_block_var(const std::string& name) const {
        for (const auto& b : blocks)
            for (std::size_t i = 0; i < b.names.size(); ++i)
                if (b.names[i] == name) return b.slots[i];
        throw Error("'" + name + "' is not a variable of the outer quantifier prefix");
    }

    bool run(const Assignment& free, const Assignment& pins) {
        std::fill(assign.begin(), assign.end(), kUnset);
        std::fill(pin.begin(), pin.end(), kUnset);
        for (const auto& [name, slot] : free_slot) {
            auto it = free.find(name);
            if (it == free.end()) throw Error("unbound variable '" + name + "'");
            assign[slot] = pool.keep(it->second);
        }
        std::vector<Id> pinned;
        for (const auto& [name, val] : pins) {
            Id s = slot_of_block_var(name);
            pin[s] = pool.keep(val);
            pinned.push_back(s);
        }
        std::sort(pinned.begin(), pinned.end());
        for (std::size_t i = 0; i < nodes.size(); ++i) {
            bool hit = false;
            for (Id s : pinned) hit = hit || intersects(nodes[i].inside, s);
            no_memo[i] = hit ? 1 : 0;
        }
        TV v = eval3(root);
        if (v == TV::U) throw Error("internal: formula undetermined after evaluation");
        return v == TV::T;
    }
};

GuidedChecker::GuidedChecker(const L::Formula& f, const EvalConfig& cfg) : impl_(std::make_unique<Impl>(f, cfg)) {}
GuidedChecker::~GuidedChecker() = default;
GuidedChecker::GuidedChecker(GuidedChecker&&) noexcept = default;
GuidedChecker& GuidedChecker::operator=(GuidedChecker&&) noexcept = default;

const L::Formula& GuidedChecker::formula() const { return impl_->source; }

std::size_t GuidedChecker::memo_size() const {
    std::size_t n = 0;
    for (const auto& m : impl_->memo) n += m.size();
    return n;
}

bool GuidedChecker::holds(const Assignment& free, const Assignment& pins) { return impl_->run(free, pins); }

namespace {

// First values (family order) for `names`, one variable at a time, keeping
// run(free, pins) == want.
Bindings greedy_pins(GuidedChecker& chk, const Assignment& free, Assignment& pins,
                     const std::vector<std::string>& names, const std::vector<const std::vector<Ordinal>*>& fams,
                     bool want) {
    Bindings out;
    for (std::size_t i = 0; i < names.size(); ++i) {
        bool found = false;
        for (const auto& val : *fams[i]) {
            pins[names[i]] = val;
            if (chk.holds(free, pins) == want) {
                out.emplace_back(names[i], val);
                found = true;
                break;
            }
        }
        if (!found) throw Error("internal: no consistent value for '" + names[i] + "'");
    }
    return out;
}

}  // namespace

Verdict GuidedChecker::check(const Assignment& free) {
    Impl& im = *impl_;
    Verdict v;
    v.prefix = L::prefix_class(L::is_prenex(im.source) ? im.source : L::prenex(im.source));
    v.holds = holds(free);
    if (im.blocks.empty()) return v;

    auto fams_of = [&](const Impl::Block& b) {
        std::vector<const std::vector<Ordinal>*> out;
        for (const auto& n : b.names) out.push_back(&im.cfg->family(im.cfg->family_for(n)).elements);
        return out;
    };
    const auto& first = im.blocks.front();
    Assignment pins;
    if (v.holds) {
        if (first.exists) v.witnesses = greedy_pins(*this, free, pins, first.names, fams_of(first), true);
        return v;
    }
    if (!first.exists) {
        v.counterexample = greedy_pins(*this, free, pins, first.names, fams_of(first), false);
        return v;
    }
    v.uniform = false;
    if (im.blocks.size() < 2) {
        v.note = "no existential choice satisfies the formula; no universal block to refute";
        return v;
    }
    // existential choice: first one satisfying the conjuncts that do not
    // mention later blocks
    L::Formula matrix = im.nnf_form;
    while (L::is_quantifier(matrix->kind)) matrix = matrix->body();
    std::set<std::string> later;
    for (std::size_t i = 1; i < im.blocks.size(); ++i) later.insert(im.blocks[i].names.begin(), im.blocks[i].names.end());
    std::vector<L::Formula> premise;
    auto consider = [&](const L::Formula& c) {
        for (const auto& n : L::free_vars(c))
            if (later.count(n)) return;
        premise.push_back(c);
    };
    if (matrix->kind == L::Kind::And)
        for (const auto& c : matrix->children) consider(c);
    else
        consider(matrix);
    L::Formula pf = premise.empty() ? L::eq(L::cst(L::Constant::One), L::cst(L::Constant::One)) : L::land(premise);
    GuidedChecker pre(L::exists(first.names, pf), *im.cfg);
    if (!pre.holds(free)) {
        v.note = "no existential choice satisfies the universal-free conjuncts";
        return v;
    }
    v.context = greedy_pins(pre, free, pins, first.names, fams_of(first), true);
    v.counterexample = greedy_pins(*this, free, pins, im.blocks[1].names, fams_of(im.blocks[1]), false);
    v.note = "counterexample refers to the first existential choice satisfying the universal-free conjuncts";
    return v;
}

Verdict check_guided(const L::Formula& f, const Assignment& a, const EvalConfig& cfg) {
    GuidedChecker chk(f, cfg);
    return chk.check(a);
}

}  // namespace ordlab
