#pragma once

#include <cstdint>
#include <map>
#include <vector>

namespace ppart {

using Exponents = std::vector<int>;

// Sparse multivariate polynomial with exact integer coefficients. Every
// stored exponent vector has length nvars and a nonzero coefficient.
// Comparisons and arithmetic pad to a common variable count, so trailing
// unused variables never matter.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(int nvars);
    static IntPolynomial constant(int nvars, std::int64_t c);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    std::int64_t coefficient(const Exponents& e) const;
    std::int64_t coefficient_sum() const; // monomial count when all coefficients are 1

    void add_term(const Exponents& e, std::int64_t c);

    IntPolynomial& operator+=(const IntPolynomial& o);
    IntPolynomial& operator-=(const IntPolynomial& o);
    friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
    friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);

    bool operator==(const IntPolynomial& o) const;

    IntPolynomial with_nvars(int n) const; // n >= nvars

    // Exchange variables k and k+1 (1-based); used for symmetry checks.
    IntPolynomial with_swapped_variables(int k) const;

    const std::map<Exponents, std::int64_t>& terms() const { return terms_; }

    // Terms in reverse-lexicographic order on exponents, largest first;
    // mixed degrees are listed by descending total degree.
    std::vector<std::pair<Exponents, std::int64_t>> sorted_terms() const;

private:
    int nvars_ = 0;
    std::map<Exponents, std::int64_t> terms_;
};

} // namespace ppart
