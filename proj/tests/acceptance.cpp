// Acceptance suite: golden identities plus exhaustive and randomised
// property checks, one pass/fail line per criterion. Exits with the number
// of failed criteria. All comparisons are exact integer equality.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <string>

#include "fixtures.hpp"
#include "ppart/descent.hpp"
#include "ppart/io.hpp"
#include "ppart/partitions.hpp"
#include "ppart/schur.hpp"
#include "ppart/slide.hpp"
#include "ppart/verify.hpp"

using namespace ppart;

namespace {

int failures = 0;
std::string failed_names;

void report(const std::string& name, bool ok, const std::string& extra = "") {
    std::printf("%s  %s%s%s\n", ok ? "PASS" : "FAIL", name.c_str(), extra.empty() ? "" : " -- ",
                extra.c_str());
    if (!ok) {
        ++failures;
        failed_names += (failed_names.empty() ? "" : ", ") + name.substr(0, name.find(' '));
    }
}

void criterion(const std::string& name, const std::function<bool()>& body) {
    bool ok = false;
    std::string extra;
    try {
        ok = body();
    } catch (const std::exception& e) {
        extra = e.what();
    }
    report(name, ok, extra);
}

bool suite(const VerifyResult& r) {
    if (!r.ok) std::fputs(r.detail.c_str(), stdout);
    return r.ok;
}

IntPolynomial from_terms(int nvars, std::vector<std::pair<Exponents, std::int64_t>> terms) {
    IntPolynomial poly(nvars);
    for (auto& [e, c] : terms) poly.add_term(e, c);
    return poly;
}

SlideExpansion from_keys(std::vector<std::pair<WeakComposition, std::int64_t>> terms) {
    SlideExpansion e;
    for (auto& [k, c] : terms) e.add(k, c);
    return e;
}

} // namespace

int main() {
    auto start = std::chrono::steady_clock::now();

    criterion("1a descent composition of the nine-element order is (2,4,3)", [] {
        return descent_composition(fx::long_order()) == StrongComposition{2, 4, 3};
    });

    criterion("1b tightened bounds of the seven-element order are (2,6,2,3,2,3,1)", [] {
        return max_restriction(fx::order7(), fx::order7_bounds()) ==
               Restriction{2, 6, 2, 3, 2, 3, 1};
    });

    criterion("1c reduced and weak descent compositions of the nine-element order", [] {
        return reduced_descent(fx::long_order(), fx::long_order_bounds()) ==
                   WeakComposition{0, 2, 4, 0, 0, 3} &&
               weak_descent(fx::long_order(), fx::long_order_bounds()) ==
                   WeakComposition{0, 2, 2, 0, 2, 1, 0, 2};
    });

    criterion("1d fundamental and slide basis elements list their monomials", [] {
        IntPolynomial f32 = from_terms(3, {{{0, 3, 2}, 1},
                                           {{3, 0, 2}, 1},
                                           {{3, 2, 0}, 1},
                                           {{3, 1, 1}, 1},
                                           {{1, 2, 2}, 1},
                                           {{2, 1, 2}, 1}});
        IntPolynomial s302 = from_terms(3, {{{3, 0, 2}, 1}, {{3, 2, 0}, 1}, {{3, 1, 1}, 1}});
        return fundamental_polynomial({3, 2}, 3) == f32 && slide_polynomial({3, 0, 2}, 3) == s302;
    });

    criterion("1e nine-monomial chain polynomial and its signed expansion", [] {
        IntPolynomial poly = generating_polynomial(fx::zigzag3(), fx::zigzag3_bounds());
        IntPolynomial expect = from_terms(4, {{{2, 1, 0, 0}, 1},
                                              {{2, 0, 1, 0}, 1},
                                              {{2, 0, 0, 1}, 1},
                                              {{1, 1, 1, 0}, 1},
                                              {{1, 1, 0, 1}, 1},
                                              {{1, 0, 1, 1}, 1},
                                              {{0, 2, 1, 0}, 1},
                                              {{0, 2, 0, 1}, 1},
                                              {{0, 1, 1, 1}, 1}});
        SlideExpansion signed_expect =
            from_keys({{{0, 2, 0, 1}, 1}, {{0, 1, 1, 1}, 1}, {{1, 1, 0, 1}, -1}});
        return poly == expect && expand_general(poly) == signed_expect;
    });

    criterion("1f three-element flagged pair expands into three slide terms", [] {
        return expand_flagged(fx::triangle(), fx::triangle_bounds()) ==
               from_keys({{{0, 1, 2}, 1}, {{0, 1, 1, 1}, 1}, {{0, 2, 0, 1}, 1}});
    });

    criterion("1g product of two slide elements lists six terms via both routes", [] {
        SlideExpansion expect = from_keys({{{0, 2, 2}, 1},
                                           {{1, 2, 1}, 1},
                                           {{0, 3, 1}, 1},
                                           {{1, 3, 0}, 1},
                                           {{2, 2, 0}, 1},
                                           {{0, 4, 0}, 1}});
        return slide_product_poset({0, 0, 2}, {0, 2, 0}) == expect &&
               slide_product_bump({0, 0, 2}, {0, 2, 0}) == expect;
    });

    criterion("1h flagged tableau polynomial keeps four of five standard fillings", [] {
        SlideExpansion e = flagged_schur_expansion({3, 2}, {2, 6});
        SlideExpansion expect = from_keys({{{0, 3, 0, 0, 0, 2}, 1},
                                           {{2, 2, 0, 0, 0, 1}, 1},
                                           {{1, 3, 0, 0, 0, 1}, 1},
                                           {{2, 3}, 1}});
        return e == expect && standard_tableaux({3, 2}).size() == 5 && e.coefficient_sum() == 4;
    });

    criterion("1i shuffle of two two-letter runs puts coefficient 2 on (2,2)", [] {
        SlideExpansion e = slide_product_poset({0, 0, 0, 0, 2}, {0, 0, 0, 0, 2});
        std::map<StrongComposition, std::int64_t> tally;
        for (const auto& [k, c] : e.terms()) tally[flatten(k)] += c;
        std::map<StrongComposition, std::int64_t> expect{
            {{4}, 1}, {{2, 2}, 2}, {{3, 1}, 1}, {{1, 3}, 1}, {{1, 2, 1}, 1}};
        return tally == expect;
    });

    {
        // Asserted exactly as specified. The drawn order is pinned by the
        // other golden data (maximal elements, descent distances, tightened
        // bounds, the documented extension), and its measured extension
        // count differs; the failure is reported rather than repaired.
        std::size_t measured = fx::order7().linear_extensions().size();
        report("1j seven-element order has exactly 18 linear extensions", measured == 18,
               "measured " + std::to_string(measured));
    }

    criterion("1k well-labelling permutation is (1,2,5,3,6,4,7)", [] {
        return well_label_permutation(fx::order7_flagged(), fx::order7_flagged_bounds()).perm ==
               std::vector<int>{1, 2, 5, 3, 6, 4, 7};
    });

    criterion("2 partition sets split over linear extensions for every order up to 5", [] {
        return suite(verify_fundamental(5, 1));
    });

    criterion("3 positivity and exactness of 500 random flagged expansions up to order 6", [] {
        return suite(verify_positivity(6, 500, 1));
    });

    criterion("4 descent lemma suite over all linear orders up to 6", [] {
        return suite(verify_lemmas(6, 1));
    });

    criterion("5 three-way product agreement for indices with total weight up to 6", [] {
        return suite(verify_product(6));
    });

    criterion("6 tableau oracle, symmetry and expansions for shapes up to 6 cells", [] {
        return suite(verify_schur(6));
    });

    criterion("7 prefixing weight-many zeros reaches the stable limit", [] {
        for (int x = 0; x <= 4; ++x)
            for (int y = 0; x + y <= 4; ++y)
                for (int z = 0; x + y + z <= 4; ++z) {
                    WeakComposition a = trimmed({x, y, z});
                    if (!check_stable_limit(a, part_sum(a))) return false;
                }
        return true;
    });

    auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - start)
                       .count();
    if (failures)
        std::printf("FAILED: %d criterion(s) failed (%s), %lld ms total\n", failures,
                    failed_names.c_str(), static_cast<long long>(elapsed));
    else
        std::printf("OK: all criteria passed, %lld ms total\n", static_cast<long long>(elapsed));
    return failures;
}
