#include "ppart/partitions.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <string>

#include "ppart/error.hpp"

namespace ppart {

std::vector<PPartition> enumerate_partitions(const Poset& P, const Restriction& rho) {
    Restriction bar = max_restriction(P, rho);
    std::vector<PPartition> out;
    if (std::any_of(bar.begin(), bar.end(), [](int v) { return v < 1; })) return out;

    int p = P.order();
    LinearOrder topo = P.topological_order();
    PPartition f(static_cast<std::size_t>(p), 0);

    // Assign along a linear extension. The tightened bounds make every
    // branch completable, so there is no dead backtracking.
    auto rec = [&](auto&& self, int t) -> void {
        if (t == p) {
            out.push_back(f);
            return;
        }
        int e = topo[static_cast<std::size_t>(t)];
        int lo = 1;
        for (int u : P.lower_covers(e))
            lo = std::max(lo, f[static_cast<std::size_t>(u) - 1] + (u > e ? 1 : 0));
        for (int v = lo; v <= bar[static_cast<std::size_t>(e) - 1]; ++v) {
            f[static_cast<std::size_t>(e) - 1] = v;
            self(self, t + 1);
        }
        f[static_cast<std::size_t>(e) - 1] = 0;
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end());
    return out;
}

WeakComposition weight_composition(const PPartition& f, int nvars) {
    WeakComposition c(static_cast<std::size_t>(nvars), 0);
    for (int v : f) {
        if (v < 1 || v > nvars)
            fail(errc::out_of_range, "partition value " + std::to_string(v) +
                                         " outside 1.." + std::to_string(nvars));
        ++c[static_cast<std::size_t>(v) - 1];
    }
    return c;
}

IntPolynomial generating_polynomial(const Poset& P, const Restriction& rho) {
    Restriction bar = max_restriction(P, rho);
    int nvars = 1;
    for (int v : bar) nvars = std::max(nvars, v);
    IntPolynomial poly(nvars);
    for (const PPartition& f : enumerate_partitions(P, rho))
        poly.add_term(weight_composition(f, nvars), 1);
    return poly;
}

namespace {

std::string witness_string(const PPartition& f, long long count) {
    std::ostringstream os;
    os << "value vector (";
    for (std::size_t k = 0; k < f.size(); ++k) os << (k ? "," : "") << f[k];
    os << ") appears in " << count << " linear extensions";
    return os.str();
}

} // namespace

bool check_fundamental_decomposition(const Poset& P, const Restriction& rho) {
    std::vector<PPartition> whole = enumerate_partitions(P, rho);
    std::map<PPartition, long long> counts;
    for (const LinearOrder& L : P.linear_extensions())
        for (const PPartition& f : enumerate_partitions(Poset::from_linear(L), rho)) ++counts[f];
    for (const PPartition& f : whole) {
        auto it = counts.find(f);
        long long c = it == counts.end() ? 0 : it->second;
        if (c != 1) fail(errc::decomposition, witness_string(f, c));
        counts.erase(it);
    }
    if (!counts.empty())
        fail(errc::decomposition,
             witness_string(counts.begin()->first, counts.begin()->second) +
                 " but not in the whole set");
    return true;
}

} // namespace ppart
