#include <doctest.h>

#include <cstdlib>
#include <functional>

#include "ordlab/config.hpp"
#include "ordlab/encoders.hpp"
#include "ordlab/evaluator.hpp"

using namespace ordlab;
using namespace ordlab::logic;

namespace {
Ordinal O(const char* s) { return parse_ordinal(s); }
Formula F(const char* s) { return parse_formula(s); }

EvalConfig small_config() {
    return parse_config(
        "family.small = explicit 0; 1; 2; w; w+1; w^2\n"
        "family.nat = naturals 3\n"
        "bind.default.* = small\n"
        "bind.nats.* = nat\n");
}

// Plain nested-loop truth over the families, no caching or pruning.
bool naive(const Formula& f, Assignment a, const EvalConfig& cfg) {
    switch (f->kind) {
    case Kind::Eq:
    case Kind::Neq:
        return eval_qf(f, a);
    case Kind::Not:
        return !naive(f->body(), a, cfg);
    case Kind::And:
        for (const auto& c : f->children)
            if (!naive(c, a, cfg)) return false;
        return true;
    case Kind::Or:
        for (const auto& c : f->children)
            if (naive(c, a, cfg)) return true;
        return false;
    case Kind::Implies:
        return !naive(f->children[0], a, cfg) || naive(f->children[1], a, cfg);
    default: {
        bool ex = f->kind == Kind::Exists;
        std::function<bool(std::size_t)> rec = [&](std::size_t i) -> bool {
            if (i == f->vars.size()) return naive(f->body(), a, cfg);
            for (const auto& v : cfg.family(cfg.family_for(f->vars[i])).elements) {
                a[f->vars[i]] = v;
                if (rec(i + 1) == ex) return ex;
            }
            return !ex;
        };
        return rec(0);
    }
    }
}
}  // namespace

TEST_CASE("eval_term and eval_qf") {
    CHECK(eval_term(parse_term("(* (c w+1) (c w))"), {}) == O("w^2"));
    CHECK(eval_term(parse_term("(c 1)"), {}) == Ordinal(1));
    CHECK(eval_term(parse_term("(* x x)"), {{"x", O("w+1")}}) == O("w^2+w+1"));
    CHECK(eval_qf(enc::theta(), {{"x", pow(O("w+1"), 2)}}));
    CHECK_FALSE(eval_qf(F("(!= x x)"), {{"x", O("w^w")}}));
    CHECK_THROWS(eval_term(parse_term("y"), {}));
    CHECK(eval_qf(F("(=> (= x (c 0)) (= (* x y) x))"), {{"x", 0}, {"y", 5}}));
}

TEST_CASE("enumerate_domain") {
    DomainParams p;
    p.max_depth = 1;
    p.terms = 1;
    p.coeff = 2;
    p.seed = 1;
    CHECK(enumerate_domain(p, 1000) == std::vector<Ordinal>{0, 1, 2, O("w"), O("w*2")});
    p.terms = 0;
    CHECK(enumerate_domain(p, 1000) == std::vector<Ordinal>{0});
    auto d1 = enumerate_domain(DomainParams{}, 100000);
    CHECK(d1.size() == 376);
    for (std::size_t i = 1; i < d1.size(); ++i) CHECK(d1[i - 1] < d1[i]);
    CHECK_THROWS(enumerate_domain(DomainParams{}, 100));
}

TEST_CASE("guided verdicts agree with naive evaluation") {
    EvalConfig cfg = small_config();
    const char* fs[] = {
        "(exists (x) (= x x))",
        "(forall (x) (exists (y) (= (* x y) (* y x))))",
        "(exists (y) (forall (x) (= (* x y) y)))",
        "(forall (x y) (or (= (* x y) (* y x)) (!= x y)))",
        "(exists (x) (and (!= x (c 1)) (= (* x x) (* x (c w)))))",
        "(forall (x) (=> (= (* x (c w)) (c w)) (exists (y) (= (* y x) (c w)))))",
        "(and (exists (x) (= (* x x) z)) (forall (y) (!= (* y z) (c w+1))))",
        "(or (forall (x) (= x z)) (exists (x y) (and (!= x y) (= (* x y) z))))",
    };
    const Ordinal zs[] = {0, 1, 2, O("w"), O("w^2"), O("w+1"), O("w*2")};
    for (const char* s : fs) {
        Formula f = F(s);
        GuidedChecker c(f, cfg);
        GuidedChecker cp(prenex(f), cfg);
        for (const auto& z : zs) {
            bool want = naive(f, {{"z", z}}, cfg);
            CHECK_MESSAGE(c.holds({{"z", z}}) == want, s);
            CHECK_MESSAGE(cp.holds({{"z", z}}) == want, s);
        }
    }
}

TEST_CASE("verdict details") {
    EvalConfig cfg = small_config();
    Verdict v = check_guided(F("(exists (x) (= x x))"), {}, cfg);
    CHECK(v.holds);
    CHECK(verdict_name(v) == "HoldsInFamilies");
    CHECK(v.evidence() == "sound");
    REQUIRE(v.witnesses.size() == 1);
    CHECK(v.witnesses[0].second == Ordinal(0));

    v = check_guided(F("(forall (x) (= (* x (c w)) (c w)))"), {}, cfg);
    CHECK_FALSE(v.holds);
    CHECK(verdict_name(v) == "FailsInFamilies");
    CHECK(v.evidence() == "sound");
    REQUIRE(v.counterexample.size() == 1);
    CHECK(v.counterexample[0].second == Ordinal(0));

    v = check_guided(F("(= x x)"), {{"x", 3}}, cfg);
    CHECK(v.evidence() == "exact");

    v = check_guided(F("(exists (y) (forall (x) (= (* x y) y)))"), {}, cfg);
    CHECK(v.holds);
    CHECK(v.evidence() == "restricted");
    CHECK(v.witnesses[0].second == Ordinal(0));

    v = check_guided(F("(exists (y) (forall (x) (and (= y (c 1)) (= (* x y) y))))"), {}, cfg);
    CHECK_FALSE(v.holds);
    CHECK_FALSE(v.uniform);
    REQUIRE(v.context.size() == 1);
    CHECK(v.context[0].second == Ordinal(1));
    REQUIRE(v.counterexample.size() == 1);
    CHECK(v.counterexample[0].second == Ordinal(0));

    CHECK_THROWS(check_guided(F("(exists (x) (= x y))"), {}, cfg));
}

TEST_CASE("config") {
    EvalConfig cfg = small_config();
    CHECK(cfg.family_for("x") == "small");
    cfg.profile = "nats";
    CHECK(cfg.family_for("x_3") == "nat");
    CHECK(cfg.family("nat").elements.size() == 4);
    EvalConfig cyc = parse_config("family.a = union b\nfamily.b = union a\n");
    CHECK_THROWS(cyc.family("a"));
    CHECK_THROWS(parse_config("nonsense"));
    CHECK_THROWS(parse_config("domain.depth = 2"));
    EvalConfig capped = parse_config("max_family = 3\nfamily.n = naturals 10\n");
    if (!std::getenv("ORDLAB_MAX_FAMILY")) CHECK_THROWS(capped.family("n"));
    EvalConfig unbound = parse_config("family.n = naturals 1\nbind.p.x = n\n");
    CHECK_THROWS(unbound.family_for("y"));

    EvalConfig def = default_config();
    CHECK(def.family("d1").elements.size() == 376);
    CHECK(def.family("pow64").elements.size() == 65);
    def.profile = "lcm";
    CHECK(def.family_for("zx_2") == "comm64");
    CHECK(def.family_for("v_1") == "pow64");
    def.profile = "elim_lcm";
    CHECK(def.family_for("z3") == "zwit");
    CHECK(def.family_for("zx") == "comm64");
    auto words = def.family("words").elements;
    CHECK(words.size() == 1 + 3 + 9 + 27 + 81);
}

TEST_CASE("semantic oracle") {
    using enc::Predicate;
    CHECK(semantic_oracle(Predicate::Omega, O("w")));
    CHECK_FALSE(semantic_oracle(Predicate::Omega, O("w^w")));
    CHECK_FALSE(semantic_oracle(Predicate::Prime, O("w+2")));
    CHECK(semantic_oracle(Predicate::Zero, 0));
    CHECK(semantic_oracle(Predicate::LimPrime, O("w^w")));
    CHECK_FALSE(semantic_oracle(Predicate::LimPrime, O("w^(w*2)")));
    CHECK(semantic_oracle(Predicate::OmegaSquarePlusOne, O("w^2+1")));
}

TEST_CASE("memo persists across calls") {
    EvalConfig cfg = default_config();
    cfg.profile = "lcm";
    GuidedChecker c(enc::lcm_formula(), cfg);
    const Ordinal w1 = O("w+1");
    CHECK(c.holds({{"x", pow(w1, 2)}, {"y", pow(w1, 3)}, {"z", pow(w1, 6)}}));
    std::size_t m = c.memo_size();
    CHECK(m > 0);
    CHECK(c.holds({{"x", pow(w1, 2)}, {"y", pow(w1, 3)}, {"z", pow(w1, 6)}}));
    CHECK(c.memo_size() == m);
}
