#include <algorithm>
#include <doctest.h>
#include <numeric>

#include "fixtures.hpp"
#include "ppart/descent.hpp"
#include "ppart/error.hpp"
#include "ppart/verify.hpp"

using namespace ppart;

TEST_CASE("descent composition splits at label drops") {
    CHECK(descent_composition(fx::long_order()) == StrongComposition{2, 4, 3});
    CHECK(descent_composition({1, 2, 3, 4}) == StrongComposition{4});
    CHECK(descent_composition({4, 3, 2, 1}) == StrongComposition{1, 1, 1, 1});
    CHECK(descent_composition({}) == StrongComposition{});
}

TEST_CASE("reduced and weak descent compositions of the nine element order") {
    LinearOrder L = fx::long_order();
    Restriction rho = fx::long_order_bounds();
    CHECK(reduced_descent(L, rho) == WeakComposition{0, 2, 4, 0, 0, 3});
    CHECK(weak_descent(L, rho) == WeakComposition{0, 2, 2, 0, 2, 1, 0, 2});

    ChainDecomposition cd = descent_chains(L, rho);
    REQUIRE(cd.chains.size() == 3);
    CHECK(cd.chains[0] == std::vector<int>{2, 5});
    CHECK(cd.chains[1] == std::vector<int>{1, 4, 6, 7});
    CHECK(cd.chains[2] == std::vector<int>{3, 8, 9});
    CHECK(cd.anchors == std::vector<int>{2, 3, 6});

    ChainDecomposition wd = bound_chains(L, rho);
    REQUIRE(wd.chains.size() == 5);
    CHECK(wd.chains[2] == std::vector<int>{6, 7});
    CHECK(wd.anchors == std::vector<int>{2, 3, 5, 6, 8});
}

TEST_CASE("single element and constant-bound orders") {
    CHECK(reduced_descent({1}, {4}) == WeakComposition{0, 0, 0, 1});
    // constant tightened bound: a single chain for both notions
    LinearOrder inc{1, 2, 3};
    CHECK(reduced_descent(inc, {3, 3, 3}) == weak_descent(inc, {3, 3, 3}));
    CHECK(reduced_descent(inc, {3, 3, 3}) == WeakComposition{0, 0, 3});
}

TEST_CASE("infeasible bounds are rejected") {
    // descent 2 < 1 with both bounds 1 leaves no room
    CHECK_THROWS_AS((void)reduced_descent({2, 1}, {1, 1}), error);
    try {
        (void)weak_descent({2, 1}, {1, 1});
    } catch (const error& e) {
        CHECK(e.code() == errc::infeasible);
    }
}

TEST_CASE("flattening the reduced descents gives the descent composition") {
    Rng rng(41);
    for (int p = 1; p <= 5; ++p) {
        LinearOrder L(static_cast<std::size_t>(p));
        std::iota(L.begin(), L.end(), 1);
        do {
            for (int t = 0; t < 2; ++t) {
                Restriction rho(static_cast<std::size_t>(p));
                for (auto& v : rho) v = rng.range(1, p + 2);
                if (!is_feasible(Poset::from_linear(L), rho)) continue;
                WeakComposition rd = reduced_descent(L, rho);
                WeakComposition wd = weak_descent(L, rho);
                CHECK(flatten(rd) == descent_composition(L));
                CHECK(refines(flatten(wd), flatten(rd)));
                CHECK(dominates(rd, wd));
                CHECK(part_sum(rd) == p);
                CHECK(part_sum(wd) == p);
            }
        } while (std::next_permutation(L.begin(), L.end()));
    }
}

TEST_CASE("reduced equals weak exactly when ascents keep the bound constant") {
    LinearOrder L = fx::long_order();
    Restriction rho = fx::long_order_bounds();
    CHECK(reduced_descent(L, rho) != weak_descent(L, rho)); // ascent 1 < 4 raises the bound? no: 4 < 6 does

    // constant flag on one ascending run
    LinearOrder inc{1, 2, 3, 4};
    Restriction flat{5, 5, 5, 5};
    CHECK(reduced_descent(inc, flat) == weak_descent(inc, flat));
}
