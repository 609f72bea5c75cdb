#include "ppart/composition.hpp"

#include <algorithm>
#include <numeric>

#include "ppart/error.hpp"

namespace ppart {

StrongComposition flatten(const WeakComposition& a) {
    StrongComposition out;
    out.reserve(a.size());
    for (int part : a)
        if (part != 0) out.push_back(part);
    return out;
}

bool refines(const StrongComposition& fine, const StrongComposition& coarse) {
    // Walk the parts of `fine`, requiring the running sum to hit every
    // prefix sum of `coarse` exactly.
    std::size_t j = 0;
    long long acc = 0, target = 0;
    for (int part : fine) {
        acc += part;
        if (j < coarse.size()) {
            if (acc > target + coarse[j]) return false;
            if (acc == target + coarse[j]) {
                target += coarse[j];
                ++j;
            }
        } else {
            return false; // fine has extra mass beyond coarse's total
        }
    }
    return j == coarse.size() && acc == target;
}

bool dominates(const WeakComposition& b, const WeakComposition& a) {
    std::size_t n = std::max(a.size(), b.size());
    long long sb = 0, sa = 0;
    for (std::size_t k = 0; k < n; ++k) {
        sb += k < b.size() ? b[k] : 0;
        sa += k < a.size() ? a[k] : 0;
        if (sb < sa) return false;
    }
    return true;
}

bool revlex_less(const WeakComposition& a, const WeakComposition& b) {
    std::size_t n = std::max(a.size(), b.size());
    for (std::size_t k = n; k-- > 0;) {
        int av = k < a.size() ? a[k] : 0;
        int bv = k < b.size() ? b[k] : 0;
        if (av != bv) return av > bv;
    }
    return false;
}

WeakComposition trimmed(WeakComposition a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

WeakComposition padded(WeakComposition a, int n) {
    if (static_cast<int>(a.size()) > n)
        fail(errc::length, "composition longer than requested padding");
    a.resize(static_cast<std::size_t>(n), 0);
    return a;
}

int part_sum(const WeakComposition& a) {
    return std::accumulate(a.begin(), a.end(), 0);
}

} // namespace ppart
