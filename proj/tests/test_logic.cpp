#include <doctest.h>

#include "ordlab/encoders.hpp"
#include "ordlab/logic.hpp"

using namespace ordlab;
using namespace ordlab::logic;

namespace {
Formula P(const char* s) { return parse_formula(s); }
std::string cls(const Formula& f) { return to_string(prefix_class(f)); }
}  // namespace

TEST_CASE("parse and print formulas") {
    Formula f = P("(= (* x (c w+1)) (* (c w+1) x))");
    REQUIRE(f->kind == Kind::Eq);
    CHECK(f->lhs->kind == TermNode::Kind::Prod);
    CHECK(f->lhs->left->name == "x");
    CHECK(f->lhs->right->constant == Constant::OmegaPlusOne);
    CHECK(f->rhs->left->constant == Constant::OmegaPlusOne);
    CHECK(print_formula(f) == "(= (* x (c w+1)) (* (c w+1) x))");

    Formula t = enc::theta();
    CHECK(print_formula(P(print_formula(t).c_str())) == print_formula(t));
    CHECK_THROWS_AS(P("(exists (x) (bad"), ParseError);
    CHECK_THROWS_AS(P("(= x (c 7))"), ParseError);
    CHECK_THROWS_AS(P("(frobnicate x)"), ParseError);
    for (const char* s : {"(forall (x y) (or (!= x y) (= (* x y) (* y x))))",
                          "(=> (not (= x (c 0))) (exists (z) (= (* z z) x)))",
                          "(and (= x (c 1)) (= (c w) (c w2+1)))"})
        CHECK(print_formula(P(s)) == s);
}

TEST_CASE("substitution and free variables") {
    CHECK(print_formula(substitute(P("(= x y)"), "x", cst(Constant::Omega))) == "(= (c w) y)");
    CHECK(free_vars(P("(exists (x) (= x y))")) == std::set<std::string>{"y"});
    Formula shadow = P("(exists (x) (= x y))");
    CHECK(print_formula(substitute(shadow, "x", cst(Constant::One))) == print_formula(shadow));
    // capture avoidance: y must not be caught by the binder
    Formula s = substitute(P("(exists (x) (= x y))"), "y", var("x"));
    CHECK(free_vars(s) == std::set<std::string>{"x"});
}

TEST_CASE("name supply") {
    NameSupply ns({"x", "x_1"});
    CHECK(ns.fresh("x") == "x_2");
    CHECK(ns.fresh("y") == "y");
    CHECK(ns.fresh("y") == "y_1");
    CHECK(base_name("zx_12") == "zx");
    CHECK(base_name("v") == "v");
}

TEST_CASE("prenex") {
    Formula qf = P("(and (= x y) (!= x (c 1)))");
    CHECK(prenex(qf) == qf);
    Formula ex = P("(and (exists (x) (= x y)) (exists (z) (= z y)))");
    Formula pe = prenex(ex);
    CHECK(is_prenex(pe));
    CHECK(cls(pe) == "E^2");
    Formula un = P("(and (forall (x) (= (* x y) (* y x))) (forall (z) (!= z (c 0))))");
    Formula pu = prenex(un);
    CHECK(cls(pu) == "A^1");
    auto parts = split_prenex(pu);
    REQUIRE(parts.blocks.size() == 1);
    CHECK(parts.blocks[0].vars == std::vector<std::string>{"x"});
    CHECK(free_vars(pu) == std::set<std::string>{"y"});

    Formula alt = P("(forall (x) (=> (exists (y) (= x (* y y))) (exists (z) (= x (* z z z)))))");
    Formula pa = prenex(alt);
    CHECK(is_prenex(pa));
    CHECK(cls(pa) == "A^2 E^1");
    CHECK(free_vars(pa).empty());
}

TEST_CASE("nnf") {
    Formula f = nnf(P("(not (and (= x y) (forall (z) (= z x))))"));
    CHECK(print_formula(f) == "(or (!= x y) (exists (z) (!= z x)))");
    CHECK(print_formula(nnf(P("(=> (= x y) (= y x))"))) == "(or (!= x y) (= y x))");
}

TEST_CASE("prefix classes") {
    CHECK(cls(enc::lcm_formula()) == "E^4 A^6");
    CHECK(cls(enc::mult_formula()) == "E^15 A^6");
    CHECK(cls(P("(= x x)")) == "QF");
    CHECK(prefix_class(P("(= x x)")).entries.empty());
    PrefixClass pc = parse_prefix_class("E^4 A^6");
    CHECK(pc.count(Quant::Exists) == 4);
    CHECK(pc.count(Quant::Forall) == 6);
    CHECK(pc.alternations() == 1);
    CHECK(parse_prefix_class("QF").entries.empty());
    CHECK(to_string(parse_prefix_class("A^2 E^1")) == "A^2 E^1");
}

TEST_CASE("constants") {
    CHECK(constant_value(Constant::OmegaSquarePlusOne) == parse_ordinal("w^2+1"));
    CHECK(constant_symbol(Constant::OmegaSquarePlusOne) == "w2+1");
    CHECK(contains_constant(P("(= x (c 1))")));
    CHECK_FALSE(contains_constant(P("(= x y)")));
    Formula r = replace_constants(P("(= (* x (c w)) (c 1))"), {{Constant::Omega, "b"}, {Constant::One, "a"}});
    CHECK(print_formula(r) == "(= (* x b) a)");
}
