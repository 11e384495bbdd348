#include <doctest.h>

#include "oracle.hpp"
#include "ordlab/config.hpp"
#include "ordlab/factorization.hpp"

using namespace ordlab;

namespace {
Ordinal O(const char* s) { return parse_ordinal(s); }
}  // namespace

TEST_CASE("classify_prime") {
    auto k = classify_prime(7);
    REQUIRE(k);
    CHECK(std::get<NaturalPrime>(*k).p == 7);
    k = classify_prime(O("w^w"));
    REQUIRE(k);
    CHECK(std::get<LimitPrime>(*k).xi == Ordinal(1));
    k = classify_prime(O("w^2+1"));
    REQUIRE(k);
    CHECK(std::get<SuccessorPrime>(*k).mu == Ordinal(2));
    CHECK_FALSE(classify_prime(O("w+2")));
    CHECK_FALSE(classify_prime(1));
    CHECK_FALSE(classify_prime(O("w^2")));
    CHECK(classify_prime(O("w")));
    CHECK_THROWS(classify_prime(0));
}

TEST_CASE("jacobsthal_factorize") {
    Factorization f = jacobsthal_factorize(O("w+2"));
    CHECK(f.limit_part.empty());
    CHECK(f.a0 == 2);
    REQUIRE(f.syllables.size() == 1);
    CHECK(f.syllables[0] == Syllable{1, 1});

    f = jacobsthal_factorize(O("w^(w+1)+w^w"));
    CHECK(f.limit_part == std::vector<LimitFactor>{{1, 1}});
    CHECK(f.a0 == 1);
    CHECK(f.syllables == std::vector<Syllable>{{1, 1}});

    f = jacobsthal_factorize(O("w^w"));
    CHECK(f.limit_part == std::vector<LimitFactor>{{1, 1}});
    CHECK(f.syllables.empty());

    CHECK(jacobsthal_factorize(1) == Factorization{});
    CHECK_THROWS(jacobsthal_factorize(0));
    CHECK(to_string(jacobsthal_factorize(O("w+2"))) == "2 (w+1)");
}

TEST_CASE("recompose") {
    Factorization f;
    f.limit_part = {{0, 2}};
    CHECK(recompose(f) == O("w^2"));
    Factorization g;
    g.syllables = {{1, 2}};
    CHECK(recompose(g) == O("w*2+1"));
    CHECK(recompose(Factorization{}) == Ordinal(1));
    CHECK(parse_factorization(to_string(g)) == g);
}

TEST_CASE("max_successor_right_factor") {
    CHECK(max_successor_right_factor(O("w^(w+1)+w^w")) == O("w+1"));
    CHECK(max_successor_right_factor(O("w^2")) == Ordinal(1));
    CHECK(max_successor_right_factor(O("w+2")) == O("w+2"));
}

TEST_CASE("product_of_factorizations") {
    auto fw1 = jacobsthal_factorize(O("w+1"));
    CHECK(product_of_factorizations(fw1, jacobsthal_factorize(O("w"))) == jacobsthal_factorize(O("w^2")));
    CHECK(product_of_factorizations(fw1, fw1) == jacobsthal_factorize(O("w^2+w+1")));
    auto a = jacobsthal_factorize(O("w^w*3+w^2+5"));
    CHECK(product_of_factorizations(jacobsthal_factorize(1), a) == a);
}

TEST_CASE("commute and common roots") {
    CHECK(commute(O("w^2+w"), O("w^3+w^2")));
    CHECK_FALSE(commute(O("w+1"), O("w^2+1")));
    CHECK(commute(O("w*5+3"), O("w*5+3")));

    const Ordinal w1 = O("w+1");
    auto r = successor_common_root(pow(w1, 2), pow(w1, 3), 6);
    REQUIRE(r.status == RootStatus::Found);
    CHECK(r.root->root == w1);
    CHECK(r.root->j == 2);
    CHECK(r.root->n == 3);
    CHECK(successor_common_root(w1, O("w^2+1"), 6).status == RootStatus::NotCommuting);
    r = successor_common_root(O("w^3*2+1"), O("w^3*2+1"), 6);
    REQUIRE(r.status == RootStatus::Found);
    CHECK(r.root->j == 1);
    CHECK(successor_common_root(pow(w1, 2), pow(w1, 9), 6).status == RootStatus::BoundExceeded);
    // (w*2+1)^2 = w*2 (w*2+1) ... root is w*2+1, not w+1
    Ordinal u = O("w*2+1");
    r = successor_common_root(pow(u, 2), pow(u, 3), 6);
    REQUIRE(r.status == RootStatus::Found);
    CHECK(pow(r.root->root, r.root->j) == pow(u, 2));
    CHECK(pow(r.root->root, r.root->n) == pow(u, 3));
}

TEST_CASE("lemma8_solution_set") {
    auto s = lemma8_solution_set(0, 1);
    CHECK(s == std::vector<Ordinal>{1, O("w^2+1")});
    s = lemma8_solution_set(1, 2);
    REQUIRE(s.size() == 3);
    Ordinal g = mul(O("w+1"), O("w^2+1"));
    CHECK(s[1] == g);
    CHECK(s[2] == mul(g, g));
    for (const auto& z : s) CHECK(mul(z, g) == mul(g, z));
    CHECK(mul(O("w+1"), O("w^2+1")) != mul(O("w^2+1"), O("w+1")));
}

TEST_CASE("primes have exactly two right divisors in the domain") {
    auto dom = enumerate_domain(DomainParams{}, 100000);
    int checked = 0;
    for (const auto& a : dom) {
        if (a.is_zero() || !classify_prime(a)) continue;
        ++checked;
        int divisors = 0;
        for (const auto& b : dom)
            for (const auto& c : dom)
                if (mul(c, b) == a) {
                    ++divisors;
                    break;
                }
        CHECK_MESSAGE(divisors == 2, to_string(a));
    }
    CHECK(checked >= 5);
}

TEST_CASE("round trip and product law on the domain") {
    auto dom = enumerate_domain(DomainParams{}, 100000);
    for (const auto& a : dom) {
        if (a.is_zero()) continue;
        auto f = jacobsthal_factorize(a);
        CHECK(is_valid(f));
        CHECK(recompose(f) == a);
    }
    std::mt19937_64 rng(11);
    std::vector<Ordinal> nz;
    for (const auto& a : dom)
        if (!a.is_zero()) nz.push_back(a);
    auto xs = oracle::sample(nz, 500, rng), ys = oracle::sample(nz, 500, rng);
    for (std::size_t i = 0; i < xs.size(); ++i)
        CHECK(product_of_factorizations(jacobsthal_factorize(xs[i]), jacobsthal_factorize(ys[i])) ==
              jacobsthal_factorize(mul(xs[i], ys[i])));
}
