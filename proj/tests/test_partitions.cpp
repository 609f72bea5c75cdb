#include <doctest.h>

#include "fixtures.hpp"
#include "ppart/error.hpp"
#include "ppart/partitions.hpp"
#include "ppart/slide.hpp"
#include "ppart/verify.hpp"

using namespace ppart;

TEST_CASE("enumeration of forced partitions") {
    CHECK(enumerate_partitions(Poset::chain(2), {1, 1}) ==
          std::vector<PPartition>{{1, 1}});
    // descent 2 < 1 forces f(2) < f(1) <= 2
    Poset desc = Poset::from_covers(2, {{2, 1}});
    CHECK(enumerate_partitions(desc, {2, 2}) == std::vector<PPartition>{{2, 1}});
    CHECK(enumerate_partitions(desc, {1, 1}).empty());
}

TEST_CASE("enumeration matches the definition-level enumeration") {
    Rng rng(31);
    for (int t = 0; t < 40; ++t) {
        Poset P = random_poset(rng, rng.range(1, 5));
        Restriction rho(static_cast<std::size_t>(P.order()));
        for (auto& v : rho) v = rng.range(1, P.order() + 2);
        CHECK(enumerate_partitions(P, rho) == enumerate_partitions_naive(P, rho));
    }
}

TEST_CASE("the three element example counts fifteen partitions") {
    auto all = enumerate_partitions(fx::triangle(), fx::triangle_bounds());
    CHECK(all.size() == 15);
    // the count also equals the monomial count of the slide expansion
    SlideExpansion e = expand_flagged(fx::triangle(), fx::triangle_bounds());
    CHECK(e.to_polynomial(4).coefficient_sum() == 15);
    for (const auto& f : all) {
        CHECK(f[2] < f[0]); // 3 < 1 is a descent
        CHECK(f[0] <= 4);
        CHECK(f[1] <= 3);
        CHECK(f[2] <= 2);
    }
}

TEST_CASE("weight composition counts values") {
    CHECK(weight_composition({1, 1, 2}, 3) == WeakComposition{2, 1, 0});
    CHECK_THROWS_AS((void)weight_composition({1, 4}, 3), error);
    // total weight is the number of elements
    CHECK(part_sum(weight_composition({2, 5, 1, 3, 3}, 6)) == 5);
}

TEST_CASE("weights dominate the weight of the tightened bound") {
    Poset P = fx::order7();
    Restriction rho = fx::order7_bounds();
    Restriction bar = max_restriction(P, rho);
    int nvars = 6;
    WeakComposition floor = weight_composition(bar, nvars);
    for (const auto& f : enumerate_partitions(P, rho))
        CHECK(dominates(weight_composition(f, nvars), floor));
}

TEST_CASE("generating polynomial of the zigzag chain") {
    // chain 2 < 3 < 1 with bounds 2, 3, 4 along the chain
    IntPolynomial poly = generating_polynomial(fx::zigzag3(), fx::zigzag3_bounds());
    IntPolynomial expect(4);
    // exponents of x_{f(1)} x_{f(2)} x_{f(3)}
    expect.add_term({2, 1, 0, 0}, 1);
    expect.add_term({2, 0, 1, 0}, 1);
    expect.add_term({2, 0, 0, 1}, 1);
    expect.add_term({1, 1, 1, 0}, 1);
    expect.add_term({1, 1, 0, 1}, 1);
    expect.add_term({1, 0, 1, 1}, 1);
    expect.add_term({0, 2, 1, 0}, 1);
    expect.add_term({0, 2, 0, 1}, 1);
    expect.add_term({0, 1, 1, 1}, 1);
    CHECK(poly == expect);
    CHECK(poly.term_count() == 9);
}

TEST_CASE("generating polynomial is zero exactly when infeasible") {
    CHECK(generating_polynomial(Poset::chain(2), {0, 5}).is_zero());
    CHECK(generating_polynomial(fx::order7(), {4, 2, 3, 2, 6, 2, 1}).is_zero());
    CHECK_FALSE(generating_polynomial(fx::order7(), fx::order7_bounds()).is_zero());
}

TEST_CASE("every monomial has total degree equal to the order") {
    IntPolynomial poly = generating_polynomial(fx::order7(), fx::order7_bounds());
    for (const auto& [e, c] : poly.terms()) CHECK(part_sum(e) == 7);
}

TEST_CASE("fundamental decomposition holds on the worked examples") {
    CHECK(check_fundamental_decomposition(Poset::chain(4), {2, 3, 3, 4}));
    CHECK(check_fundamental_decomposition(fx::order7(),
                                          Restriction(7, 4)));
    Poset tri = fx::triangle();
    CHECK(tri.linear_extensions().size() == 3);
    CHECK(check_fundamental_decomposition(tri, fx::triangle_bounds()));
}

TEST_CASE("the generating polynomial is additive over linear extensions") {
    Poset P = fx::triangle();
    Restriction rho = fx::triangle_bounds();
    IntPolynomial sum(1);
    for (const auto& L : P.linear_extensions())
        sum += generating_polynomial(Poset::from_linear(L), rho);
    CHECK(sum == generating_polynomial(P, rho));
}
