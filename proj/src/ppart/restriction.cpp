#include "ppart/restriction.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "ppart/error.hpp"

namespace ppart {

void require_restriction(const Poset& P, const Restriction& rho) {
    if (static_cast<int>(rho.size()) != P.order())
        fail(errc::size_mismatch, "restriction has " + std::to_string(rho.size()) +
                                      " entries for a poset of order " + std::to_string(P.order()));
}

int descent_distance(const Poset& P, int i, int j) {
    if (!P.leq(i, j))
        fail(errc::not_comparable, std::to_string(i) + " is not below " + std::to_string(j));
    if (i == j) return 0;
    int p = P.order();
    // best[u]: longest label-decreasing chain u -> j, or -1 if none.
    std::vector<int> best(static_cast<std::size_t>(p) + 1, -2);
    auto rec = [&](auto&& self, int u) -> int {
        if (u == j) return 0;
        int& memo = best[static_cast<std::size_t>(u)];
        if (memo != -2) return memo;
        memo = -1;
        for (int v = 1; v <= p; ++v) {
            if (v >= u || !P.precedes(u, v)) continue; // need u > v and u < v in the order
            int tail = self(self, v);
            if (tail >= 0) memo = std::max(memo, 1 + tail);
        }
        return memo;
    };
    int d = rec(rec, i);
    return d < 0 ? 0 : d;
}

Restriction max_restriction(const Poset& P, const Restriction& rho) {
    require_restriction(P, rho);
    Restriction bar = rho;
    LinearOrder topo = P.topological_order();
    for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
        int i = *it;
        int& v = bar[static_cast<std::size_t>(i) - 1];
        for (int j : P.upper_covers(i))
            v = std::min(v, bar[static_cast<std::size_t>(j) - 1] - (i > j ? 1 : 0));
    }
    return bar;
}

bool is_feasible(const Poset& P, const Restriction& rho) {
    Restriction bar = max_restriction(P, rho);
    return std::all_of(bar.begin(), bar.end(), [](int v) { return v >= 1; });
}

bool is_flag(const Poset& P, const Restriction& rho) {
    require_restriction(P, rho);
    for (int v : rho)
        if (v <= 0) return false;
    for (auto [i, j] : P.covers()) {
        int ri = rho[static_cast<std::size_t>(i) - 1];
        int rj = rho[static_cast<std::size_t>(j) - 1];
        if (i < j ? ri != rj : ri > rj) return false;
    }
    return true;
}

bool is_well_labelled(const Poset& P, const Restriction& rho) {
    require_restriction(P, rho);
    for (auto [i, j] : P.covers()) {
        int ri = rho[static_cast<std::size_t>(i) - 1];
        int rj = rho[static_cast<std::size_t>(j) - 1];
        if (i < j ? ri < rj : ri > rj) return false;
    }
    for (int i = 1; i <= P.order(); ++i)
        for (int j = i + 1; j <= P.order(); ++j)
            if (!P.comparable(i, j) &&
                rho[static_cast<std::size_t>(i) - 1] < rho[static_cast<std::size_t>(j) - 1])
                return false;
    return true;
}

ComponentDecomposition flag_components(const Poset& P, const Restriction& rho) {
    if (!is_flag(P, rho)) fail(errc::not_a_flag, "restriction is not a flag for this poset");
    int p = P.order();

    // Union ascending covers.
    std::vector<int> parent(static_cast<std::size_t>(p) + 1);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    };
    for (auto [i, j] : P.covers())
        if (i < j) parent[static_cast<std::size_t>(find(i))] = find(j);

    std::vector<int> root_index(static_cast<std::size_t>(p) + 1, -1);
    std::vector<std::vector<int>> members;
    for (int i = 1; i <= p; ++i) {
        int r = find(i);
        if (root_index[static_cast<std::size_t>(r)] < 0) {
            root_index[static_cast<std::size_t>(r)] = static_cast<int>(members.size());
            members.emplace_back();
        }
        members[static_cast<std::size_t>(root_index[static_cast<std::size_t>(r)])].push_back(i);
    }
    int nc = static_cast<int>(members.size());

    // Reachability between components, induced by the order.
    std::vector<std::uint8_t> reach(static_cast<std::size_t>(nc) * static_cast<std::size_t>(nc), 0);
    auto rat = [nc](int a, int b) {
        return static_cast<std::size_t>(a) * static_cast<std::size_t>(nc) + static_cast<std::size_t>(b);
    };
    auto comp_of = [&](int label) { return root_index[static_cast<std::size_t>(find(label))]; };
    for (int i = 1; i <= p; ++i)
        for (int j = 1; j <= p; ++j)
            if (P.precedes(i, j) && comp_of(i) != comp_of(j)) reach[rat(comp_of(i), comp_of(j))] = 1;
    for (int k = 0; k < nc; ++k)
        for (int a = 0; a < nc; ++a)
            if (reach[rat(a, k)])
                for (int b = 0; b < nc; ++b)
                    if (reach[rat(k, b)]) reach[rat(a, b)] = 1;

    // Components that reach one another must share one block: keeping them
    // apart would turn some descending cover between them into an ascending
    // one after relabelling, changing the partition set. The flag forces a
    // single value on such a cycle, so merging is harmless.
    std::vector<int> group(static_cast<std::size_t>(nc), -1);
    std::vector<std::vector<int>> grouped;   // merged label sets, ascending
    std::vector<int> group_min(static_cast<std::size_t>(nc), 0);
    for (int c = 0; c < nc; ++c) {
        if (group[static_cast<std::size_t>(c)] >= 0) continue;
        int g = static_cast<int>(grouped.size());
        grouped.emplace_back();
        for (int d = c; d < nc; ++d)
            if (d == c || (reach[rat(c, d)] && reach[rat(d, c)])) {
                group[static_cast<std::size_t>(d)] = g;
                grouped[static_cast<std::size_t>(g)].insert(
                    grouped[static_cast<std::size_t>(g)].end(),
                    members[static_cast<std::size_t>(d)].begin(),
                    members[static_cast<std::size_t>(d)].end());
            }
        std::sort(grouped[static_cast<std::size_t>(g)].begin(),
                  grouped[static_cast<std::size_t>(g)].end());
    }
    int ng = static_cast<int>(grouped.size());
    std::vector<std::uint8_t> greach(static_cast<std::size_t>(ng) * static_cast<std::size_t>(ng), 0);
    for (int a = 0; a < nc; ++a)
        for (int b = 0; b < nc; ++b)
            if (reach[rat(a, b)] && group[static_cast<std::size_t>(a)] != group[static_cast<std::size_t>(b)])
                greach[static_cast<std::size_t>(group[static_cast<std::size_t>(a)]) *
                           static_cast<std::size_t>(ng) +
                       static_cast<std::size_t>(group[static_cast<std::size_t>(b)])] = 1;

    // Greedy: take a maximal remaining block with the largest value,
    // breaking ties by smallest minimum label.
    auto value_of = [&](int g) {
        return rho[static_cast<std::size_t>(grouped[static_cast<std::size_t>(g)][0]) - 1];
    };
    std::vector<char> taken(static_cast<std::size_t>(ng), 0);
    ComponentDecomposition out;
    for (int step = 0; step < ng; ++step) {
        int pick = -1;
        for (int g = 0; g < ng; ++g) {
            if (taken[static_cast<std::size_t>(g)]) continue;
            bool maximal = true;
            for (int h = 0; h < ng && maximal; ++h)
                if (h != g && !taken[static_cast<std::size_t>(h)] &&
                    greach[static_cast<std::size_t>(g) * static_cast<std::size_t>(ng) +
                           static_cast<std::size_t>(h)])
                    maximal = false;
            if (!maximal) continue;
            if (pick < 0 || value_of(g) > value_of(pick) ||
                (value_of(g) == value_of(pick) &&
                 grouped[static_cast<std::size_t>(g)][0] < grouped[static_cast<std::size_t>(pick)][0]))
                pick = g;
        }
        taken[static_cast<std::size_t>(pick)] = 1;
        out.components.push_back(grouped[static_cast<std::size_t>(pick)]);
        out.values.push_back(value_of(pick));
    }
    return out;
}

Relabeling well_label_permutation(const Poset& P, const Restriction& rho) {
    ComponentDecomposition cd = flag_components(P, rho);
    std::vector<int> one_line;
    one_line.reserve(static_cast<std::size_t>(P.order()));
    for (const auto& block : cd.components)
        for (int label : block) one_line.push_back(label);
    return Relabeling::from_one_line(std::move(one_line));
}

Restriction compose(const Restriction& rho, const Relabeling& pi) {
    if (rho.size() != pi.perm.size())
        fail(errc::size_mismatch, "restriction and permutation sizes differ");
    Restriction out(rho.size());
    for (int i = 1; i <= pi.size(); ++i)
        out[static_cast<std::size_t>(i) - 1] = rho[static_cast<std::size_t>(pi.apply(i)) - 1];
    return out;
}

} // namespace ppart
