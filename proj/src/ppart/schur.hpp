#pragma once

#include <vector>

#include "ppart/polynomial.hpp"
#include "ppart/poset.hpp"
#include "ppart/restriction.hpp"
#include "ppart/slide.hpp"

namespace ppart {

// Weakly decreasing positive row lengths.
using Shape = std::vector<int>;

// Weakly increasing positive per-row bounds, one per row.
using Flag = std::vector<int>;

// Entries of a filling, row by row, matching a Shape.
struct Tableau {
    std::vector<std::vector<int>> rows;
    bool operator==(const Tableau&) const = default;
};

void require_shape(const Shape& shape);

// Label of the cell in the given 1-based row and column: rows are labelled
// from the last (shortest) row down to the first, left to right, so that
// row steps are ascending covers and column steps descending ones.
int shape_cell_label(const Shape& shape, int row, int col);

// Poset on the cells of the shape whose partitions are exactly the
// semistandard fillings: weak increase along rows, strict increase down
// columns.
Poset shape_poset(const Shape& shape);

// Bounds constant on each row: the cell in row i is bounded by flag[i-1].
Restriction flag_restriction(const Shape& shape, const Flag& flag);

// Generating polynomial of the shape poset under the flag bounds; equals the
// row-bounded semistandard tableau generating polynomial.
IntPolynomial flagged_schur(const Shape& shape, const Flag& flag);

// All standard fillings (1..n once each, rows and columns increasing),
// deterministically ordered.
std::vector<Tableau> standard_tableaux(const Shape& shape);

// The linear extension induced by a standard filling: position t holds the
// label of the cell containing t.
LinearOrder tableau_extension(const Shape& shape, const Tableau& T);

// One reduced-descent slide term per standard filling whose tightened
// bounds stay positive; the monomial expansion equals flagged_schur.
SlideExpansion flagged_schur_expansion(const Shape& shape, const Flag& flag);

// Direct enumeration of semistandard fillings with per-row entry bounds,
// independent of the poset machinery. Bounds need not be weakly increasing.
IntPolynomial ssyt_polynomial(const Shape& shape, const std::vector<int>& row_bounds);

} // namespace ppart
