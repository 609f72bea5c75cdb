#pragma once

#include <vector>

#include "ppart/poset.hpp"

namespace ppart {

// Per-element integer upper bound, indexed by natural label:
// bounds[i-1] is the bound for label i. Entries may be non-positive
// (the partition set is then empty).
using Restriction = std::vector<int>;

// Connected components of the ascending-cover graph together with the
// (constant) bound value on each, indexed so the values weakly decrease.
// Components that reach each other through the order (possible for a flag,
// and then necessarily of equal value) are merged into one entry.
struct ComponentDecomposition {
    std::vector<std::vector<int>> components; // each sorted ascending
    std::vector<int> values;
};

void require_restriction(const Poset& P, const Restriction& rho);

// Longest chain i = c0 < c1 < ... < ck = j in the order whose labels
// strictly decrease; 0 when i == j or no such chain exists.
int descent_distance(const Poset& P, int i, int j);

// Pointwise-largest restriction with the same partition set:
// bar(i) = min(rho(i), min over covers i<j of bar(j) - [i > j]).
// Idempotent; equals the pointwise maximum of the partition set when
// that set is non-empty.
Restriction max_restriction(const Poset& P, const Restriction& rho);

// True iff the partition set is non-empty, i.e. max_restriction >= 1 everywhere.
bool is_feasible(const Poset& P, const Restriction& rho);

// Positive everywhere, constant across ascending covers, weakly increasing
// across descending covers.
bool is_flag(const Poset& P, const Restriction& rho);

// Flag-style cover conditions plus: i, j incomparable with i < j forces
// rho(i) >= rho(j).
bool is_well_labelled(const Poset& P, const Restriction& rho);

// Requires is_flag. Components ordered greedily: among components maximal in
// the induced order (mutually-reachable cycles counted as one level), take
// the largest value, breaking ties by smallest minimum label.
ComponentDecomposition flag_components(const Poset& P, const Restriction& rho);

// Permutation pi such that (P relabeled by pi, rho o pi) is a well-labelled
// flag with the same generating polynomial. Requires is_flag.
Relabeling well_label_permutation(const Poset& P, const Restriction& rho);

// (rho o pi)(i) = rho(pi(i)).
Restriction compose(const Restriction& rho, const Relabeling& pi);

} // namespace ppart
