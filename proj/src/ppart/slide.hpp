#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "ppart/composition.hpp"
#include "ppart/polynomial.hpp"
#include "ppart/poset.hpp"
#include "ppart/restriction.hpp"

namespace ppart {

// Integer combination of slide basis elements, keyed by weak composition.
// Keys are canonical: trailing zeros trimmed, so the same basis element
// never appears twice under different ambient lengths.
class SlideExpansion {
public:
    void add(WeakComposition key, std::int64_t c);
    std::int64_t coefficient(const WeakComposition& key) const;
    const std::map<WeakComposition, std::int64_t>& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    bool all_positive() const;
    std::int64_t coefficient_sum() const;
    int max_key_length() const;

    SlideExpansion& operator+=(const SlideExpansion& o);
    bool operator==(const SlideExpansion&) const = default;

    // Sum of coefficient * slide polynomial over all keys, in nvars
    // variables (nvars >= max_key_length()).
    IntPolynomial to_polynomial(int nvars) const;

    // Terms by descending degree, then reverse-lexicographic, largest first.
    std::vector<std::pair<WeakComposition, std::int64_t>> sorted_terms() const;

private:
    std::map<WeakComposition, std::int64_t> terms_;
};

// Sum of x^b over weak compositions b of length nvars that dominate a and
// whose flattening refines the flattening of a. All coefficients 1.
IntPolynomial slide_polynomial(const WeakComposition& a, int nvars);

// Sum of x^b over weak compositions b of length nvars whose flattening
// refines alpha.
IntPolynomial fundamental_polynomial(const StrongComposition& alpha, int nvars);

// Positive slide expansion of the generating polynomial of a flagged pair:
// relabel to a well-labelled pair, then one reduced-descent term per
// feasible linear extension. Requires is_flag.
SlideExpansion expand_flagged(const Poset& P, const Restriction& rho);

// Signed slide expansion of an arbitrary polynomial by triangular
// elimination: repeatedly peel the reverse-lexicographically smallest
// exponent in each degree component. Exact round trip.
SlideExpansion expand_general(const IntPolynomial& poly);

// Linear order plus flag whose generating polynomial is the slide basis
// element of a: descending blocks of sizes flatten(a), the j-th block bounded
// by the index of the j-th nonzero part.
std::pair<Poset, Restriction> realize_slide(const WeakComposition& a);

// Product of two slide basis elements, two independent routes.
SlideExpansion slide_product_poset(const WeakComposition& a, const WeakComposition& b);
SlideExpansion slide_product_bump(const WeakComposition& a, const WeakComposition& b);

// True when the slide polynomial of a prefixed with m zeros equals the
// fundamental polynomial of flatten(a) in m + len(a) variables.
bool check_stable_limit(const WeakComposition& a, int m);

} // namespace ppart
