#include "ppart/slide.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <string>

#include "ppart/descent.hpp"
#include "ppart/error.hpp"

namespace ppart {

void SlideExpansion::add(WeakComposition key, std::int64_t c) {
    if (c == 0) return;
    key = trimmed(std::move(key));
    for (int part : key)
        if (part < 0) fail(errc::invalid_argument, "negative part in slide index");
    auto [it, inserted] = terms_.emplace(std::move(key), c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

std::int64_t SlideExpansion::coefficient(const WeakComposition& key) const {
    auto it = terms_.find(trimmed(key));
    return it == terms_.end() ? 0 : it->second;
}

bool SlideExpansion::all_positive() const {
    for (const auto& [k, c] : terms_)
        if (c <= 0) return false;
    return true;
}

std::int64_t SlideExpansion::coefficient_sum() const {
    std::int64_t s = 0;
    for (const auto& [k, c] : terms_) s += c;
    return s;
}

int SlideExpansion::max_key_length() const {
    std::size_t n = 0;
    for (const auto& [k, c] : terms_) n = std::max(n, k.size());
    return static_cast<int>(n);
}

SlideExpansion& SlideExpansion::operator+=(const SlideExpansion& o) {
    for (const auto& [k, c] : o.terms_) add(k, c);
    return *this;
}

IntPolynomial SlideExpansion::to_polynomial(int nvars) const {
    IntPolynomial out(nvars);
    for (const auto& [key, c] : terms_) {
        IntPolynomial basis = slide_polynomial(key, nvars);
        for (const auto& [e, one] : basis.terms()) out.add_term(e, c * one);
    }
    return out;
}

std::vector<std::pair<WeakComposition, std::int64_t>> SlideExpansion::sorted_terms() const {
    std::vector<std::pair<WeakComposition, std::int64_t>> out(terms_.begin(), terms_.end());
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
        int dx = part_sum(x.first), dy = part_sum(y.first);
        if (dx != dy) return dx > dy;
        return revlex_less(y.first, x.first);
    });
    return out;
}

namespace {

// All strong compositions refining alpha (split every part independently).
std::vector<StrongComposition> refinements(const StrongComposition& alpha) {
    std::vector<StrongComposition> out{{}};
    for (int part : alpha) {
        std::vector<StrongComposition> splits;
        StrongComposition cur;
        std::function<void(int)> split = [&](int rem) {
            if (rem == 0) {
                splits.push_back(cur);
                return;
            }
            for (int first = 1; first <= rem; ++first) {
                cur.push_back(first);
                split(rem - first);
                cur.pop_back();
            }
        };
        split(part);
        std::vector<StrongComposition> next;
        next.reserve(out.size() * splits.size());
        for (const auto& prefix : out)
            for (const auto& tail : splits) {
                StrongComposition joined = prefix;
                joined.insert(joined.end(), tail.begin(), tail.end());
                next.push_back(std::move(joined));
            }
        out = std::move(next);
    }
    return out;
}

// Monomials x^b with flat(b) refining alpha and b dominating floor, in n
// variables. Placement limits enforce dominance exactly, so every emitted
// vector is a support element.
void add_support(IntPolynomial& poly, const StrongComposition& alpha, const WeakComposition& floor,
                 int n) {
    std::vector<long long> floor_prefix(static_cast<std::size_t>(n) + 1, 0);
    for (int x = 1; x <= n; ++x)
        floor_prefix[static_cast<std::size_t>(x)] =
            floor_prefix[static_cast<std::size_t>(x) - 1] +
            (x <= static_cast<int>(floor.size()) ? floor[static_cast<std::size_t>(x) - 1] : 0);

    for (const StrongComposition& beta : refinements(alpha)) {
        int r = static_cast<int>(beta.size());
        Exponents b(static_cast<std::size_t>(n), 0);
        std::function<void(int, int, long long)> place = [&](int k, int min_pos, long long placed) {
            if (k == r) {
                poly.add_term(b, 1);
                return;
            }
            // Part k+1 may sit at slot s only if the floor's prefix sums up
            // to s-1 are already covered by the mass placed so far.
            int limit = min_pos - 1;
            while (limit + 1 <= n && floor_prefix[static_cast<std::size_t>(limit)] <= placed)
                ++limit;
            limit = std::min(limit, n - (r - k - 1)); // leave room for later parts
            for (int s = min_pos; s <= limit; ++s) {
                b[static_cast<std::size_t>(s) - 1] = beta[static_cast<std::size_t>(k)];
                place(k + 1, s + 1, placed + beta[static_cast<std::size_t>(k)]);
                b[static_cast<std::size_t>(s) - 1] = 0;
            }
        };
        place(0, 1, 0);
    }
}

} // namespace

IntPolynomial slide_polynomial(const WeakComposition& a, int nvars) {
    WeakComposition key = trimmed(a);
    if (static_cast<int>(key.size()) > nvars)
        fail(errc::length, "slide index longer than the variable count");
    for (int part : key)
        if (part < 0) fail(errc::invalid_argument, "negative part in slide index");
    IntPolynomial poly(nvars);
    add_support(poly, flatten(key), padded(key, nvars), nvars);
    return poly;
}

IntPolynomial fundamental_polynomial(const StrongComposition& alpha, int nvars) {
    for (int part : alpha)
        if (part < 1) fail(errc::invalid_argument, "fundamental index must have positive parts");
    IntPolynomial poly(nvars); // zero when the parts outnumber the variables
    add_support(poly, alpha, WeakComposition(static_cast<std::size_t>(nvars), 0), nvars);
    return poly;
}

SlideExpansion expand_flagged(const Poset& P, const Restriction& rho) {
    if (!is_flag(P, rho)) fail(errc::not_a_flag, "restriction is not a flag for this poset");
    Relabeling pi = well_label_permutation(P, rho);
    Poset Q = P.relabeled(pi);
    Restriction sigma = compose(rho, pi);
    SlideExpansion out;
    for (const LinearOrder& L : Q.linear_extensions()) {
        try {
            out.add(reduced_descent(L, sigma), 1);
        } catch (const error& e) {
            if (e.code() != errc::infeasible) throw; // infeasible extensions contribute zero
        }
    }
    return out;
}

SlideExpansion expand_general(const IntPolynomial& poly) {
    std::map<int, IntPolynomial> by_degree;
    for (const auto& [e, c] : poly.terms()) {
        auto [it, inserted] = by_degree.try_emplace(part_sum(e), poly.nvars());
        it->second.add_term(e, c);
    }
    SlideExpansion out;
    for (auto& [degree, part] : by_degree) {
        while (!part.is_zero()) {
            const Exponents* pivot = nullptr;
            for (const auto& [e, c] : part.terms())
                if (!pivot || revlex_less(e, *pivot)) pivot = &e;
            WeakComposition key = trimmed(*pivot);
            std::int64_t c = part.coefficient(*pivot);
            out.add(key, c);
            IntPolynomial basis = slide_polynomial(key, poly.nvars());
            for (const auto& [e, one] : basis.terms()) part.add_term(e, -c);
        }
    }
    return out;
}

std::pair<Poset, Restriction> realize_slide(const WeakComposition& a) {
    WeakComposition key = trimmed(a);
    StrongComposition alpha = flatten(key);
    int p = part_sum(key);
    LinearOrder seq;
    seq.reserve(static_cast<std::size_t>(p));
    Restriction rho(static_cast<std::size_t>(p), 0);
    int placed = 0;
    std::size_t j = 0;
    for (std::size_t idx = 0; idx < key.size(); ++idx) {
        if (key[idx] == 0) continue;
        int size = alpha[j++];
        int hi = p - placed, lo = hi - size + 1;
        for (int label = lo; label <= hi; ++label) {
            seq.push_back(label);
            rho[static_cast<std::size_t>(label) - 1] = static_cast<int>(idx) + 1;
        }
        placed += size;
    }
    return {Poset::from_linear(seq), rho};
}

SlideExpansion slide_product_poset(const WeakComposition& a, const WeakComposition& b) {
    auto [pa, ra] = realize_slide(a);
    auto [pb, rb] = realize_slide(b);
    Poset both = disjoint_union(pa, pb);
    Restriction rho = ra;
    rho.insert(rho.end(), rb.begin(), rb.end());
    return expand_flagged(both, rho);
}

namespace {

struct TaggedLetter {
    int letter;
    bool from_first;
};

// Letter codes of Def-style shuffle words: part i of the first factor is an
// odd letter, of the second an even one, both decreasing in i so that later
// parts read as descents.
std::vector<TaggedLetter> shuffle_word(const WeakComposition& padded_comp, int n, bool first) {
    std::vector<TaggedLetter> word;
    for (int i = 1; i <= n; ++i)
        for (int rep = 0; rep < padded_comp[static_cast<std::size_t>(i) - 1]; ++rep)
            word.push_back({2 * (n - i) + (first ? 1 : 2), first});
    return word;
}

struct RunCounts {
    std::vector<int> sizes;       // letters per run
    std::vector<int> from_first;  // letters of the first word per run
    std::vector<int> from_second;
};

RunCounts run_counts(const std::vector<TaggedLetter>& word) {
    RunCounts rc;
    for (std::size_t t = 0; t < word.size(); ++t) {
        bool fresh = t == 0 || word[t - 1].letter > word[t].letter;
        if (fresh) {
            rc.sizes.push_back(0);
            rc.from_first.push_back(0);
            rc.from_second.push_back(0);
        }
        ++rc.sizes.back();
        ++(word[t].from_first ? rc.from_first.back() : rc.from_second.back());
    }
    return rc;
}

} // namespace

SlideExpansion slide_product_bump(const WeakComposition& a, const WeakComposition& b) {
    WeakComposition at = trimmed(a), bt = trimmed(b);
    int n = static_cast<int>(std::max(at.size(), bt.size()));
    WeakComposition ap = padded(at, n), bp = padded(bt, n);
    std::vector<TaggedLetter> wa = shuffle_word(ap, n, true);
    std::vector<TaggedLetter> wb = shuffle_word(bp, n, false);

    SlideExpansion out;
    std::vector<TaggedLetter> cur;
    cur.reserve(wa.size() + wb.size());

    auto process = [&](const std::vector<TaggedLetter>& word) {
        RunCounts rc = run_counts(word);
        if (!dominates(rc.from_first, ap) || !dominates(rc.from_second, bp)) return;
        int r = static_cast<int>(rc.sizes.size());
        // Dominance over both factors forces every letter into the first n
        // runs, so a qualifying word has at most n of them.
        if (r > n) fail(errc::bump_not_unique, "qualifying shuffle with more runs than slots");

        // Spread the runs over n slots (zeros elsewhere); keep assignments
        // whose per-slot origin counts still dominate both factors.
        std::vector<WeakComposition> valid;
        WeakComposition slots(static_cast<std::size_t>(n), 0);
        WeakComposition slots_first(static_cast<std::size_t>(n), 0);
        WeakComposition slots_second(static_cast<std::size_t>(n), 0);
        std::function<void(int, int)> choose = [&](int k, int min_slot) {
            if (k == r) {
                if (dominates(slots_first, ap) && dominates(slots_second, bp))
                    valid.push_back(slots);
                return;
            }
            for (int s = min_slot; s <= n - (r - k - 1); ++s) {
                std::size_t z = static_cast<std::size_t>(s) - 1;
                slots[z] = rc.sizes[static_cast<std::size_t>(k)];
                slots_first[z] = rc.from_first[static_cast<std::size_t>(k)];
                slots_second[z] = rc.from_second[static_cast<std::size_t>(k)];
                choose(k + 1, s + 1);
                slots[z] = slots_first[z] = slots_second[z] = 0;
            }
        };
        choose(0, 1);

        const WeakComposition* best = nullptr;
        for (const auto& c : valid)
            if (!best || dominates(*best, c)) best = &c;
        for (const auto& c : valid)
            if (!dominates(c, *best)) {
                std::ostringstream os;
                os << "no unique dominance-minimal padding for a shuffle of (";
                for (std::size_t k = 0; k < ap.size(); ++k) os << (k ? "," : "") << ap[k];
                os << ") and (";
                for (std::size_t k = 0; k < bp.size(); ++k) os << (k ? "," : "") << bp[k];
                os << ")";
                fail(errc::bump_not_unique, os.str());
            }
        out.add(trimmed(*best), 1);
    };

    std::function<void(std::size_t, std::size_t)> shuffle = [&](std::size_t ia, std::size_t ib) {
        if (ia == wa.size() && ib == wb.size()) {
            process(cur);
            return;
        }
        if (ia < wa.size()) {
            cur.push_back(wa[ia]);
            shuffle(ia + 1, ib);
            cur.pop_back();
        }
        if (ib < wb.size()) {
            cur.push_back(wb[ib]);
            shuffle(ia, ib + 1);
            cur.pop_back();
        }
    };
    shuffle(0, 0);
    return out;
}

bool check_stable_limit(const WeakComposition& a, int m) {
    if (m < 0) fail(errc::invalid_argument, "negative zero count");
    WeakComposition key(static_cast<std::size_t>(m), 0);
    WeakComposition tail = trimmed(a);
    key.insert(key.end(), tail.begin(), tail.end());
    int n = m + static_cast<int>(tail.size());
    // The limit statement substitutes zero for every variable past x_m, so
    // only the monomials supported on the first m variables are compared.
    IntPolynomial whole = slide_polynomial(key, n);
    IntPolynomial head(m);
    for (const auto& [e, c] : whole.terms()) {
        bool supported_low = true;
        for (int k = m; k < n && supported_low; ++k)
            if (e[static_cast<std::size_t>(k)] != 0) supported_low = false;
        if (supported_low)
            head.add_term(Exponents(e.begin(), e.begin() + m), c);
    }
    return head == fundamental_polynomial(flatten(tail), m);
}

} // namespace ppart
