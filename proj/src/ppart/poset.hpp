#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace ppart {

// Permutation of [p] together with its inverse. perm[i-1] = pi(i).
struct Relabeling {
    std::vector<int> perm;
    std::vector<int> inverse;

    static Relabeling from_one_line(std::vector<int> one_line);
    static Relabeling identity(int p);

    int size() const { return static_cast<int>(perm.size()); }
    int apply(int i) const { return perm[static_cast<std::size_t>(i) - 1]; }
    int apply_inverse(int i) const { return inverse[static_cast<std::size_t>(i) - 1]; }
    Relabeling inverted() const { return Relabeling{inverse, perm}; }
    bool operator==(const Relabeling&) const = default;
};

// A linear order on [p]: the labels listed from bottom to top.
using LinearOrder = std::vector<int>;

// Partial order on the labels 1..p. The label values carry meaning: a cover
// i < j (in the order) with i > j (as integers) is a descent and forces
// strict inequalities on partitions. Immutable after construction; covers()
// is always the transitive reduction, no matter what relations were fed in.
class Poset {
public:
    static Poset from_covers(int p, const std::vector<std::pair<int, int>>& relations);
    static Poset chain(int p);     // 1 < 2 < ... < p
    static Poset antichain(int p); // no relations
    static Poset from_linear(const LinearOrder& seq);

    int order() const { return p_; }
    bool precedes(int i, int j) const; // strict i < j in the order
    bool leq(int i, int j) const { return i == j || precedes(i, j); }
    bool comparable(int i, int j) const { return leq(i, j) || leq(j, i); }

    const std::vector<std::pair<int, int>>& covers() const { return covers_; }
    const std::vector<int>& upper_covers(int i) const;
    const std::vector<int>& lower_covers(int i) const;

    // All linear extensions, sorted lexicographically by sequence.
    std::vector<LinearOrder> linear_extensions() const;

    // One linear extension (the lexicographically smallest).
    LinearOrder topological_order() const;

    // Lexicographically smallest pair (i, j), i < j, with i and j
    // incomparable; empty when the order is total.
    std::optional<std::pair<int, int>> incomparable_pair() const;

    // Transitive closure of this order plus i < j. Requires i, j incomparable;
    // in the result i is covered by j.
    Poset with_relation(int i, int j) const;

    // Poset Q with i <_Q j iff pi(i) <_P pi(j).
    Poset relabeled(const Relabeling& pi) const;

    bool operator==(const Poset& other) const;

private:
    Poset(int p, std::vector<std::uint8_t> lt);
    void rebuild_covers();
    void require_label(int i) const;
    std::size_t at(int i, int j) const {
        return static_cast<std::size_t>(i - 1) * static_cast<std::size_t>(p_) +
               static_cast<std::size_t>(j - 1);
    }

    int p_ = 0;
    std::vector<std::uint8_t> lt_; // strict relation matrix
    std::vector<std::pair<int, int>> covers_;
    std::vector<std::vector<int>> up_, down_; // cover neighbourhoods per label

    friend Poset disjoint_union(const Poset& a, const Poset& b);
};

// Poset on [|a|+|b|]: a unchanged, b's labels shifted up by |a|, no
// relations across the two parts.
Poset disjoint_union(const Poset& a, const Poset& b);

} // namespace ppart
