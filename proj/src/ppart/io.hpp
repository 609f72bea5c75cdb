#pragma once

#include <optional>
#include <string>

#include "ppart/polynomial.hpp"
#include "ppart/poset.hpp"
#include "ppart/restriction.hpp"
#include "ppart/slide.hpp"

namespace ppart {

struct Instance {
    Poset poset;
    std::optional<Restriction> rho;
};

// Accepts either the line format
//   p=<int>
//   cover i j
//   rho i v
// (blank lines and '#' comments allowed, duplicate covers rejected, rho
// either absent or given once for every label) or a JSON object
//   {"p": int, "covers": [[i,j],...], "rho": [v1..vp]}.
Instance parse_instance(const std::string& text);

// Lines "coeff e1 ... en", reverse-lexicographically largest exponent first;
// "0" for the zero polynomial.
std::string format_polynomial_text(const IntPolynomial& poly);
std::string format_polynomial_json(const IntPolynomial& poly);

// Lines "coeff F(c1,...,ck)", reverse-lexicographically largest index first;
// "0" for the empty expansion.
std::string format_expansion_text(const SlideExpansion& e);
std::string format_expansion_json(const SlideExpansion& e);

} // namespace ppart
