#pragma once

#include <vector>

namespace ppart {

// Weak compositions may contain zero parts, strong compositions may not.
// Both are finite integer sequences; indexing is 1-based in the math and
// 0-based in the vectors.
using WeakComposition = std::vector<int>;
using StrongComposition = std::vector<int>;

// Removes zero parts, keeping the order of the rest.
StrongComposition flatten(const WeakComposition& a);

// True when every prefix sum of `coarse` occurs among the prefix sums of
// `fine` and both have the same total.
bool refines(const StrongComposition& fine, const StrongComposition& coarse);

// Dominance: every prefix sum of b is >= the matching prefix sum of a.
// Shorter input is padded with zeros.
bool dominates(const WeakComposition& b, const WeakComposition& a);

// Reverse lexicographic order: a < b when, at the last position where the
// zero-padded vectors differ, a has the larger entry. On equal-sum vectors
// this total order extends dominance (b strictly dominating a forces b > a).
bool revlex_less(const WeakComposition& a, const WeakComposition& b);

// Drops trailing zeros.
WeakComposition trimmed(WeakComposition a);

// Extends with trailing zeros to length n (n >= a.size()).
WeakComposition padded(WeakComposition a, int n);

int part_sum(const WeakComposition& a);

} // namespace ppart
