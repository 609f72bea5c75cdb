#pragma once

// Shared worked examples: a seven-element order in three labelings, a small
// three-element pair, and a nine-element linear order with bounds.

#include <utility>
#include <vector>

#include "ppart/poset.hpp"
#include "ppart/restriction.hpp"

namespace fx {

// Seven elements, two maximal elements (2 and 5), minimal elements 3 and 7.
inline ppart::Poset order7() {
    return ppart::Poset::from_covers(
        7, {{1, 5}, {1, 2}, {3, 4}, {4, 6}, {6, 2}, {7, 1}, {7, 4}});
}

inline ppart::Restriction order7_bounds() { return {4, 6, 2, 3, 2, 3, 3}; }

// Same diagram with labels 3 and 4 exchanged; the bounds make it a flag
// (constant on each ascending component) but not well-labelled.
inline ppart::Poset order7_flagged() {
    return ppart::Poset::from_covers(
        7, {{1, 5}, {1, 2}, {4, 3}, {3, 6}, {6, 2}, {7, 1}, {7, 3}});
}

inline ppart::Restriction order7_flagged_bounds() { return {4, 4, 4, 2, 4, 4, 2}; }

// The well-labelled relabeling of the pair above.
inline ppart::Poset order7_well() {
    return ppart::Poset::from_covers(
        7, {{1, 3}, {1, 2}, {6, 4}, {4, 5}, {5, 2}, {7, 1}, {7, 4}});
}

inline ppart::Restriction order7_well_bounds() { return {4, 4, 4, 4, 4, 2, 2}; }

// Three elements, single cover 3 < 1, element 2 isolated; bounds (4,3,2).
// Flagged and well-labelled.
inline ppart::Poset triangle() { return ppart::Poset::from_covers(3, {{3, 1}}); }
inline ppart::Restriction triangle_bounds() { return {4, 3, 2}; }

// Three elements, 2 < 1 and 3 < 1; bounds (4,2,3). Flagged but not
// well-labelled (2, 3 incomparable with the smaller label bound lower).
inline ppart::Poset vee() { return ppart::Poset::from_covers(3, {{2, 1}, {3, 1}}); }
inline ppart::Restriction vee_bounds() { return {4, 2, 3}; }

// Chain 2 < 3 < 1 with bounds 2, 3, 4 along the chain: feasible but not a
// flag; its slide expansion is signed.
inline ppart::Poset zigzag3() { return ppart::Poset::from_covers(3, {{2, 3}, {3, 1}}); }
inline ppart::Restriction zigzag3_bounds() { return {4, 2, 3}; } // by natural label

// Nine-element linear order 2,5,1,4,6,7,3,8,9 with bounds listed along the
// order: 2,3,4,3,6,8,6,8,8.
inline ppart::LinearOrder long_order() { return {2, 5, 1, 4, 6, 7, 3, 8, 9}; }

inline ppart::Restriction bounds_in_order(const ppart::LinearOrder& L,
                                          const std::vector<int>& along) {
    ppart::Restriction rho(L.size(), 0);
    for (std::size_t t = 0; t < L.size(); ++t)
        rho[static_cast<std::size_t>(L[t]) - 1] = along[t];
    return rho;
}

inline ppart::Restriction long_order_bounds() {
    return bounds_in_order(long_order(), {2, 3, 4, 3, 6, 8, 6, 8, 8});
}

} // namespace fx
