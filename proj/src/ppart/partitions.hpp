#pragma once

#include <vector>

#include "ppart/composition.hpp"
#include "ppart/polynomial.hpp"
#include "ppart/poset.hpp"
#include "ppart/restriction.hpp"

namespace ppart {

// Order-preserving map into the positive integers: values[i-1] = f(i).
// Covers i < j require f(i) <= f(j), strictly when i > j as integers, and
// f(i) never exceeds the restriction.
using PPartition = std::vector<int>;

// The full partition set of (P, rho), sorted lexicographically by values.
// Empty when infeasible.
std::vector<PPartition> enumerate_partitions(const Poset& P, const Restriction& rho);

// c[r-1] = number of elements mapped to r; requires all values <= nvars.
WeakComposition weight_composition(const PPartition& f, int nvars);

// Sum over the partition set of the monomial x_{f(1)} ... x_{f(p)},
// in max(1, max entry of the tightened restriction) variables.
IntPolynomial generating_polynomial(const Poset& P, const Restriction& rho);

// Checks that the partition set is the disjoint union of the partition sets
// of the linear extensions. Returns true; raises decomposition with a
// witness map on any mismatch.
bool check_fundamental_decomposition(const Poset& P, const Restriction& rho);

} // namespace ppart
