#pragma once

#include <vector>

#include "ppart/composition.hpp"
#include "ppart/poset.hpp"
#include "ppart/restriction.hpp"

namespace ppart {

// Maximal ascending runs of a linear order, each with the tightened bound
// at its first element. Concatenating the chains gives back the order and
// the anchors strictly increase.
struct ChainDecomposition {
    std::vector<std::vector<int>> chains;
    std::vector<int> anchors;
};

// Run lengths of the maximal ascending runs (break wherever the next label
// is smaller). A strong composition of p.
StrongComposition descent_composition(const LinearOrder& L);

// max_restriction specialised to a linear order; result by natural label.
Restriction linear_max_restriction(const LinearOrder& L, const Restriction& rho);

// Break at descents / at every strict increase of the tightened bound.
// Both require feasibility.
ChainDecomposition descent_chains(const LinearOrder& L, const Restriction& rho);
ChainDecomposition bound_chains(const LinearOrder& L, const Restriction& rho);

// Weak composition with the run length of each chain placed at its anchor
// index; length = last anchor. reduced_descent breaks only at descents,
// weak_descent also wherever the tightened bound strictly increases.
WeakComposition reduced_descent(const LinearOrder& L, const Restriction& rho);
WeakComposition weak_descent(const LinearOrder& L, const Restriction& rho);

} // namespace ppart
