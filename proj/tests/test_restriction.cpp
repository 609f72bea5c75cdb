#include <algorithm>
#include <doctest.h>

#include "fixtures.hpp"
#include "ppart/error.hpp"
#include "ppart/restriction.hpp"
#include "ppart/verify.hpp"

using namespace ppart;

namespace {

// Independent oracle: enumerate every strictly label-decreasing chain from i
// to j directly from the relation and take the longest.
int longest_decreasing_chain(const Poset& P, int i, int j) {
    if (i == j) return 0;
    int best = -1;
    auto rec = [&](auto&& self, int u, int len) -> void {
        if (u == j) {
            best = std::max(best, len);
            return;
        }
        for (int v = 1; v <= P.order(); ++v)
            if (v < u && P.precedes(u, v)) self(self, v, len + 1);
    };
    rec(rec, i, 0);
    return best < 0 ? 0 : best;
}

} // namespace

TEST_CASE("descent distance on the seven element example") {
    Poset P = fx::order7();
    CHECK(descent_distance(P, 7, 7) == 0);
    CHECK(descent_distance(P, 7, 2) == 2); // 7 < 4 < 2 with labels decreasing
    CHECK(descent_distance(P, 7, 5) == 1);
    CHECK(descent_distance(P, 1, 5) == 0); // comparable but no decreasing chain
    CHECK(descent_distance(P, 1, 2) == 0);
    CHECK_THROWS_AS((void)descent_distance(P, 3, 7), error);
    try {
        (void)descent_distance(P, 3, 7);
    } catch (const error& e) {
        CHECK(e.code() == errc::not_comparable);
    }
}

TEST_CASE("descent distance agrees with chain enumeration") {
    Rng rng(7);
    std::vector<Poset> samples{fx::order7(), fx::order7_flagged(), Poset::chain(5)};
    for (int t = 0; t < 20; ++t) samples.push_back(random_poset(rng, rng.range(2, 7)));
    for (const Poset& P : samples)
        for (int i = 1; i <= P.order(); ++i)
            for (int j = 1; j <= P.order(); ++j)
                if (P.leq(i, j)) CHECK(descent_distance(P, i, j) == longest_decreasing_chain(P, i, j));
}

TEST_CASE("tightened bounds on the worked examples") {
    CHECK(max_restriction(Poset::antichain(4), {3, 1, 4, 1}) == Restriction{3, 1, 4, 1});
    CHECK(max_restriction(fx::order7(), fx::order7_bounds()) == Restriction{2, 6, 2, 3, 2, 3, 1});

    LinearOrder L = fx::long_order();
    Restriction bar = max_restriction(Poset::from_linear(L), fx::long_order_bounds());
    std::vector<int> along;
    for (int label : L) along.push_back(bar[static_cast<std::size_t>(label) - 1]);
    CHECK(along == std::vector<int>{2, 2, 3, 3, 5, 5, 6, 8, 8});
}

TEST_CASE("tightening is idempotent, dominated by the input, and chain-monotone") {
    Rng rng(11);
    for (int t = 0; t < 40; ++t) {
        Poset P = random_poset(rng, rng.range(1, 6));
        Restriction rho(static_cast<std::size_t>(P.order()));
        for (auto& v : rho) v = rng.range(-1, P.order() + 2);
        Restriction bar = max_restriction(P, rho);
        CHECK(max_restriction(P, bar) == bar);
        for (int i = 1; i <= P.order(); ++i) {
            CHECK(bar[static_cast<std::size_t>(i) - 1] <= rho[static_cast<std::size_t>(i) - 1]);
            for (int j = 1; j <= P.order(); ++j)
                if (P.leq(i, j))
                    CHECK(bar[static_cast<std::size_t>(i) - 1] <=
                          bar[static_cast<std::size_t>(j) - 1] - descent_distance(P, i, j));
        }
    }
}

TEST_CASE("tightening is the pointwise maximum of the partition set") {
    Rng rng(13);
    for (int t = 0; t < 30; ++t) {
        Poset P = random_poset(rng, rng.range(1, 5));
        Restriction rho(static_cast<std::size_t>(P.order()));
        for (auto& v : rho) v = rng.range(1, P.order() + 2);
        auto naive = enumerate_partitions_naive(P, rho);
        Restriction bar = max_restriction(P, rho);
        CHECK(is_feasible(P, rho) == !naive.empty());
        if (naive.empty()) continue;
        Restriction high(static_cast<std::size_t>(P.order()), 0);
        for (const auto& f : naive)
            for (std::size_t k = 0; k < f.size(); ++k) high[k] = std::max(high[k], f[k]);
        CHECK(high == bar);
        CHECK(enumerate_partitions_naive(P, bar) == naive);
    }
}

TEST_CASE("tightened bounds weakly increase along a linear order") {
    Rng rng(17);
    for (int t = 0; t < 30; ++t) {
        int p = rng.range(1, 7);
        Poset P = random_poset(rng, p);
        LinearOrder L = P.topological_order();
        Poset chain = Poset::from_linear(L);
        Restriction rho(static_cast<std::size_t>(p));
        for (auto& v : rho) v = rng.range(1, p + 2);
        Restriction bar = max_restriction(chain, rho);
        for (std::size_t k = 0; k + 1 < L.size(); ++k)
            CHECK(bar[static_cast<std::size_t>(L[k]) - 1] <=
                  bar[static_cast<std::size_t>(L[k + 1]) - 1]);
    }
}

TEST_CASE("feasibility detects forced collisions") {
    CHECK_FALSE(is_feasible(Poset::chain(2), {0, 0}));
    // capping the top element at 2 leaves no room under the forced strict steps
    CHECK_FALSE(is_feasible(fx::order7(), {4, 2, 3, 2, 6, 2, 1}));
    CHECK(is_feasible(fx::order7(), fx::order7_bounds()));
}

TEST_CASE("flag predicate") {
    CHECK(is_flag(fx::order7_flagged(), fx::order7_flagged_bounds()));
    CHECK(is_flag(fx::triangle(), fx::triangle_bounds()));
    CHECK(is_flag(fx::vee(), fx::vee_bounds()));
    CHECK_FALSE(is_flag(fx::zigzag3(), fx::zigzag3_bounds())); // ascending cover 2 < 3 changes value
    CHECK_FALSE(is_flag(Poset::antichain(2), {1, 0}));
    CHECK_THROWS_AS((void)is_flag(Poset::antichain(2), {1}), error);
}

TEST_CASE("well-labelled predicate") {
    CHECK(is_well_labelled(fx::order7_well(), fx::order7_well_bounds()));
    CHECK_FALSE(is_well_labelled(fx::vee(), fx::vee_bounds()));
    CHECK(is_well_labelled(Poset::antichain(1), {5}));
    CHECK(is_well_labelled(fx::triangle(), fx::triangle_bounds()));
    CHECK_FALSE(is_well_labelled(fx::order7_flagged(), fx::order7_flagged_bounds()));
}

TEST_CASE("component decomposition of the flagged example") {
    ComponentDecomposition cd = flag_components(fx::order7_flagged(), fx::order7_flagged_bounds());
    REQUIRE(cd.components.size() == 4);
    CHECK(cd.components[0] == std::vector<int>{1, 2, 5});
    CHECK(cd.components[1] == std::vector<int>{3, 6});
    CHECK(cd.components[2] == std::vector<int>{4});
    CHECK(cd.components[3] == std::vector<int>{7});
    CHECK(cd.values == std::vector<int>{4, 4, 2, 2});
    CHECK_THROWS_AS((void)flag_components(fx::zigzag3(), fx::zigzag3_bounds()), error);
}

TEST_CASE("well labelling permutation on the worked example") {
    Relabeling pi = well_label_permutation(fx::order7_flagged(), fx::order7_flagged_bounds());
    CHECK(pi.perm == std::vector<int>{1, 2, 5, 3, 6, 4, 7});

    Poset Q = fx::order7_flagged().relabeled(pi);
    Restriction sigma = compose(fx::order7_flagged_bounds(), pi);
    CHECK(Q == fx::order7_well());
    CHECK(sigma == fx::order7_well_bounds());
    CHECK(is_flag(Q, sigma));
    CHECK(is_well_labelled(Q, sigma));
}

TEST_CASE("well labelling a flagged chain is the identity") {
    Poset chain = Poset::chain(4);
    Restriction rho{3, 3, 3, 3};
    CHECK(well_label_permutation(chain, rho) == Relabeling::identity(4));
}

TEST_CASE("well labelling works when components wrap around each other") {
    // two ascending components joined by descending covers both ways; the
    // flag value is forced equal on both
    Poset P = Poset::from_covers(6, {{4, 5}, {1, 5}, {3, 6}, {2, 6}, {4, 3}, {2, 1}});
    Restriction rho{3, 3, 3, 3, 3, 3};
    REQUIRE(is_flag(P, rho));
    Relabeling pi = well_label_permutation(P, rho);
    Poset Q = P.relabeled(pi);
    Restriction sigma = compose(rho, pi);
    CHECK(is_flag(Q, sigma));
    CHECK(is_well_labelled(Q, sigma));
}

TEST_CASE("well labelling preserves structure on random flags") {
    Rng rng(23);
    for (int t = 0; t < 40; ++t) {
        Poset P = random_poset(rng, rng.range(1, 6));
        Restriction rho = random_flag(rng, P);
        REQUIRE(is_flag(P, rho));

        // flags are constant on each ascending component
        ComponentDecomposition cd = flag_components(P, rho);
        CHECK(std::is_sorted(cd.values.rbegin(), cd.values.rend()));
        for (std::size_t k = 0; k < cd.components.size(); ++k)
            for (int label : cd.components[k])
                CHECK(rho[static_cast<std::size_t>(label) - 1] == cd.values[k]);

        Relabeling pi = well_label_permutation(P, rho);
        Poset Q = P.relabeled(pi);
        Restriction sigma = compose(rho, pi);
        CHECK(is_flag(Q, sigma));
        CHECK(is_well_labelled(Q, sigma));
        CHECK(generating_polynomial(P, rho) == generating_polynomial(Q, sigma));
    }
}
