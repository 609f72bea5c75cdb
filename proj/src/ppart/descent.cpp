#include "ppart/descent.hpp"

#include <algorithm>

#include "ppart/error.hpp"

namespace ppart {

StrongComposition descent_composition(const LinearOrder& L) {
    StrongComposition out;
    int run = 0;
    for (std::size_t t = 0; t < L.size(); ++t) {
        ++run;
        if (t + 1 == L.size() || L[t] > L[t + 1]) {
            out.push_back(run);
            run = 0;
        }
    }
    return out;
}

Restriction linear_max_restriction(const LinearOrder& L, const Restriction& rho) {
    if (L.size() != rho.size()) fail(errc::size_mismatch, "order and restriction sizes differ");
    Restriction bar = rho;
    for (std::size_t t = L.size(); t-- > 1;) {
        int lo = L[t - 1], hi = L[t];
        int& v = bar[static_cast<std::size_t>(lo) - 1];
        v = std::min(v, bar[static_cast<std::size_t>(hi) - 1] - (lo > hi ? 1 : 0));
    }
    return bar;
}

namespace {

ChainDecomposition split_chains(const LinearOrder& L, const Restriction& rho, bool at_bound_increase) {
    Restriction bar = linear_max_restriction(L, rho);
    for (int v : bar)
        if (v < 1) fail(errc::infeasible, "tightened restriction has an entry below 1");

    ChainDecomposition out;
    std::vector<int> chain;
    auto bound = [&](int label) { return bar[static_cast<std::size_t>(label) - 1]; };
    for (std::size_t t = 0; t < L.size(); ++t) {
        if (chain.empty()) out.anchors.push_back(bound(L[t]));
        chain.push_back(L[t]);
        bool brk = false;
        if (t + 1 < L.size())
            brk = at_bound_increase ? bound(L[t]) < bound(L[t + 1]) : L[t] > L[t + 1];
        if (t + 1 == L.size() || brk) {
            out.chains.push_back(chain);
            chain.clear();
        }
    }
    return out;
}

WeakComposition chains_to_composition(const ChainDecomposition& cd) {
    WeakComposition out;
    if (!cd.anchors.empty()) out.assign(static_cast<std::size_t>(cd.anchors.back()), 0);
    for (std::size_t s = 0; s < cd.chains.size(); ++s)
        out[static_cast<std::size_t>(cd.anchors[s]) - 1] = static_cast<int>(cd.chains[s].size());
    return out;
}

} // namespace

ChainDecomposition descent_chains(const LinearOrder& L, const Restriction& rho) {
    return split_chains(L, rho, false);
}

ChainDecomposition bound_chains(const LinearOrder& L, const Restriction& rho) {
    return split_chains(L, rho, true);
}

WeakComposition reduced_descent(const LinearOrder& L, const Restriction& rho) {
    return chains_to_composition(descent_chains(L, rho));
}

WeakComposition weak_descent(const LinearOrder& L, const Restriction& rho) {
    return chains_to_composition(bound_chains(L, rho));
}

} // namespace ppart
