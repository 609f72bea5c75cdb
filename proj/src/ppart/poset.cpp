#include "ppart/poset.hpp"

#include <algorithm>
#include <string>

#include "ppart/error.hpp"

namespace ppart {

Relabeling Relabeling::from_one_line(std::vector<int> one_line) {
    int p = static_cast<int>(one_line.size());
    std::vector<int> inverse(one_line.size(), 0);
    std::vector<char> seen(one_line.size(), 0);
    for (int i = 1; i <= p; ++i) {
        int v = one_line[static_cast<std::size_t>(i) - 1];
        if (v < 1 || v > p || seen[static_cast<std::size_t>(v) - 1])
            fail(errc::size_mismatch, "not a permutation of 1..p");
        seen[static_cast<std::size_t>(v) - 1] = 1;
        inverse[static_cast<std::size_t>(v) - 1] = i;
    }
    return Relabeling{std::move(one_line), std::move(inverse)};
}

Relabeling Relabeling::identity(int p) {
    std::vector<int> id(static_cast<std::size_t>(p));
    for (int i = 0; i < p; ++i) id[static_cast<std::size_t>(i)] = i + 1;
    return Relabeling{id, id};
}

Poset::Poset(int p, std::vector<std::uint8_t> lt) : p_(p), lt_(std::move(lt)) {
    rebuild_covers();
}

void Poset::require_label(int i) const {
    if (i < 1 || i > p_)
        fail(errc::out_of_range, "label " + std::to_string(i) + " outside 1.." + std::to_string(p_));
}

Poset Poset::from_covers(int p, const std::vector<std::pair<int, int>>& relations) {
    if (p < 0) fail(errc::invalid_argument, "negative order");
    std::vector<std::uint8_t> lt(static_cast<std::size_t>(p) * static_cast<std::size_t>(p), 0);
    auto at = [p](int i, int j) {
        return static_cast<std::size_t>(i - 1) * static_cast<std::size_t>(p) +
               static_cast<std::size_t>(j - 1);
    };
    for (auto [i, j] : relations) {
        if (i < 1 || i > p || j < 1 || j > p)
            fail(errc::out_of_range, "cover label outside 1.." + std::to_string(p));
        if (i == j) fail(errc::cycle, "relation " + std::to_string(i) + " < itself");
        lt[at(i, j)] = 1;
    }
    // Floyd-Warshall closure of the strict relation.
    for (int k = 1; k <= p; ++k)
        for (int i = 1; i <= p; ++i) {
            if (!lt[at(i, k)]) continue;
            for (int j = 1; j <= p; ++j)
                if (lt[at(k, j)]) lt[at(i, j)] = 1;
        }
    for (int i = 1; i <= p; ++i)
        for (int j = i + 1; j <= p; ++j)
            if (lt[at(i, j)] && lt[at(j, i)])
                fail(errc::cycle, "relation contains a cycle through " + std::to_string(i) +
                                      " and " + std::to_string(j));
    return Poset(p, std::move(lt));
}

Poset Poset::chain(int p) {
    std::vector<std::pair<int, int>> covers;
    for (int i = 1; i < p; ++i) covers.emplace_back(i, i + 1);
    return from_covers(p, covers);
}

Poset Poset::antichain(int p) { return from_covers(p, {}); }

Poset Poset::from_linear(const LinearOrder& seq) {
    Relabeling::from_one_line(seq); // validates
    std::vector<std::pair<int, int>> covers;
    for (std::size_t t = 0; t + 1 < seq.size(); ++t) covers.emplace_back(seq[t], seq[t + 1]);
    return from_covers(static_cast<int>(seq.size()), covers);
}

void Poset::rebuild_covers() {
    covers_.clear();
    up_.assign(static_cast<std::size_t>(p_) + 1, {});
    down_.assign(static_cast<std::size_t>(p_) + 1, {});
    for (int i = 1; i <= p_; ++i)
        for (int j = 1; j <= p_; ++j) {
            if (!lt_[at(i, j)]) continue;
            bool direct = true;
            for (int k = 1; k <= p_ && direct; ++k)
                if (lt_[at(i, k)] && lt_[at(k, j)]) direct = false;
            if (direct) {
                covers_.emplace_back(i, j);
                up_[static_cast<std::size_t>(i)].push_back(j);
                down_[static_cast<std::size_t>(j)].push_back(i);
            }
        }
    std::sort(covers_.begin(), covers_.end());
}

bool Poset::precedes(int i, int j) const {
    require_label(i);
    require_label(j);
    return lt_[at(i, j)] != 0;
}

const std::vector<int>& Poset::upper_covers(int i) const {
    require_label(i);
    return up_[static_cast<std::size_t>(i)];
}

const std::vector<int>& Poset::lower_covers(int i) const {
    require_label(i);
    return down_[static_cast<std::size_t>(i)];
}

std::vector<LinearOrder> Poset::linear_extensions() const {
    std::vector<LinearOrder> out;
    LinearOrder cur;
    cur.reserve(static_cast<std::size_t>(p_));
    std::vector<int> missing(static_cast<std::size_t>(p_) + 1, 0); // unplaced lower covers
    std::vector<char> used(static_cast<std::size_t>(p_) + 1, 0);
    for (int j = 1; j <= p_; ++j)
        missing[static_cast<std::size_t>(j)] = static_cast<int>(down_[static_cast<std::size_t>(j)].size());

    auto rec = [&](auto&& self) -> void {
        if (static_cast<int>(cur.size()) == p_) {
            out.push_back(cur);
            return;
        }
        for (int i = 1; i <= p_; ++i) { // ascending labels give lexicographic output
            if (used[static_cast<std::size_t>(i)] || missing[static_cast<std::size_t>(i)] != 0)
                continue;
            used[static_cast<std::size_t>(i)] = 1;
            cur.push_back(i);
            for (int j : up_[static_cast<std::size_t>(i)]) --missing[static_cast<std::size_t>(j)];
            self(self);
            for (int j : up_[static_cast<std::size_t>(i)]) ++missing[static_cast<std::size_t>(j)];
            cur.pop_back();
            used[static_cast<std::size_t>(i)] = 0;
        }
    };
    rec(rec);
    return out;
}

LinearOrder Poset::topological_order() const {
    LinearOrder out;
    out.reserve(static_cast<std::size_t>(p_));
    std::vector<int> missing(static_cast<std::size_t>(p_) + 1, 0);
    std::vector<char> used(static_cast<std::size_t>(p_) + 1, 0);
    for (int j = 1; j <= p_; ++j)
        missing[static_cast<std::size_t>(j)] = static_cast<int>(down_[static_cast<std::size_t>(j)].size());
    while (static_cast<int>(out.size()) < p_) {
        for (int i = 1; i <= p_; ++i) {
            if (used[static_cast<std::size_t>(i)] || missing[static_cast<std::size_t>(i)] != 0)
                continue;
            used[static_cast<std::size_t>(i)] = 1;
            out.push_back(i);
            for (int j : up_[static_cast<std::size_t>(i)]) --missing[static_cast<std::size_t>(j)];
            break;
        }
    }
    return out;
}

std::optional<std::pair<int, int>> Poset::incomparable_pair() const {
    for (int i = 1; i <= p_; ++i)
        for (int j = i + 1; j <= p_; ++j)
            if (!comparable(i, j)) return std::make_pair(i, j);
    return std::nullopt;
}

Poset Poset::with_relation(int i, int j) const {
    require_label(i);
    require_label(j);
    if (comparable(i, j))
        fail(errc::comparable, std::to_string(i) + " and " + std::to_string(j) +
                                   " are already comparable");
    std::vector<std::uint8_t> lt = lt_;
    // One closure step suffices: both sides are already transitively closed.
    for (int a = 1; a <= p_; ++a)
        for (int b = 1; b <= p_; ++b)
            if (leq(a, i) && leq(j, b)) lt[at(a, b)] = 1;
    return Poset(p_, std::move(lt));
}

Poset Poset::relabeled(const Relabeling& pi) const {
    if (pi.size() != p_) fail(errc::size_mismatch, "permutation size differs from poset order");
    std::vector<std::uint8_t> lt(lt_.size(), 0);
    for (int i = 1; i <= p_; ++i)
        for (int j = 1; j <= p_; ++j)
            if (lt_[at(pi.apply(i), pi.apply(j))]) lt[at(i, j)] = 1;
    return Poset(p_, std::move(lt));
}

bool Poset::operator==(const Poset& other) const {
    return p_ == other.p_ && lt_ == other.lt_;
}

Poset disjoint_union(const Poset& a, const Poset& b) {
    int p = a.order() + b.order();
    std::vector<std::pair<int, int>> covers = a.covers();
    for (auto [i, j] : b.covers()) covers.emplace_back(i + a.order(), j + a.order());
    return Poset::from_covers(p, covers);
}

} // namespace ppart
