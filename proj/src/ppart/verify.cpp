#include "ppart/verify.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "ppart/descent.hpp"
#include "ppart/error.hpp"
#include "ppart/schur.hpp"
#include "ppart/slide.hpp"

namespace ppart {

std::uint64_t Rng::next() {
    // splitmix64
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

int Rng::below(int n) { return static_cast<int>(next() % static_cast<std::uint64_t>(n)); }

int Rng::range(int lo, int hi) { return lo + below(hi - lo + 1); }

std::vector<Poset> all_posets(int p) {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 1; i <= p; ++i)
        for (int j = i + 1; j <= p; ++j) pairs.emplace_back(i, j);
    std::vector<Poset> out;
    std::vector<int> state(pairs.size(), 0); // 0 none, 1 i<j, 2 j<i
    std::vector<std::uint8_t> rel(static_cast<std::size_t>(p) * static_cast<std::size_t>(p));
    auto at = [p](int i, int j) {
        return static_cast<std::size_t>(i - 1) * static_cast<std::size_t>(p) +
               static_cast<std::size_t>(j - 1);
    };
    while (true) {
        std::fill(rel.begin(), rel.end(), 0);
        std::vector<std::pair<int, int>> relations;
        for (std::size_t k = 0; k < pairs.size(); ++k) {
            if (state[k] == 1) relations.push_back(pairs[k]);
            if (state[k] == 2) relations.emplace_back(pairs[k].second, pairs[k].first);
        }
        for (auto [i, j] : relations) rel[at(i, j)] = 1;
        bool transitive = true;
        for (int a = 1; a <= p && transitive; ++a)
            for (int b = 1; b <= p && transitive; ++b) {
                if (!rel[at(a, b)]) continue;
                for (int c = 1; c <= p; ++c)
                    if (rel[at(b, c)] && !rel[at(a, c)]) {
                        transitive = false;
                        break;
                    }
            }
        if (transitive) out.push_back(Poset::from_covers(p, relations));
        // advance base-3 odometer
        std::size_t k = 0;
        while (k < state.size() && state[k] == 2) state[k++] = 0;
        if (k == state.size()) break;
        ++state[k];
    }
    return out;
}

Poset random_poset(Rng& rng, int p) {
    std::vector<int> order(static_cast<std::size_t>(p));
    std::iota(order.begin(), order.end(), 1);
    for (int k = p - 1; k > 0; --k)
        std::swap(order[static_cast<std::size_t>(k)], order[static_cast<std::size_t>(rng.below(k + 1))]);
    std::vector<int> position(static_cast<std::size_t>(p) + 1, 0);
    for (int k = 0; k < p; ++k) position[static_cast<std::size_t>(order[static_cast<std::size_t>(k)])] = k;
    std::vector<std::pair<int, int>> relations;
    for (int i = 1; i <= p; ++i)
        for (int j = i + 1; j <= p; ++j) {
            if (rng.below(3) != 0) continue;
            if (position[static_cast<std::size_t>(i)] < position[static_cast<std::size_t>(j)])
                relations.emplace_back(i, j);
            else
                relations.emplace_back(j, i);
        }
    return Poset::from_covers(p, relations);
}

Restriction random_flag(Rng& rng, const Poset& P) {
    int p = P.order();
    // Components of the ascending-cover graph.
    std::vector<int> parent(static_cast<std::size_t>(p) + 1);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
        return x;
    };
    for (auto [i, j] : P.covers())
        if (i < j) parent[static_cast<std::size_t>(find(i))] = find(j);

    std::vector<int> comp(static_cast<std::size_t>(p) + 1, -1);
    int nc = 0;
    for (int i = 1; i <= p; ++i) {
        int r = find(i);
        if (comp[static_cast<std::size_t>(r)] < 0) comp[static_cast<std::size_t>(r)] = nc++;
        comp[static_cast<std::size_t>(i)] = comp[static_cast<std::size_t>(r)];
    }

    // Reachability between components; mutually reachable ones share a value.
    std::vector<std::uint8_t> reach(static_cast<std::size_t>(nc) * static_cast<std::size_t>(nc), 0);
    auto rat = [nc](int a, int b) {
        return static_cast<std::size_t>(a) * static_cast<std::size_t>(nc) + static_cast<std::size_t>(b);
    };
    for (auto [i, j] : P.covers())
        if (i > j && comp[static_cast<std::size_t>(i)] != comp[static_cast<std::size_t>(j)])
            reach[rat(comp[static_cast<std::size_t>(i)], comp[static_cast<std::size_t>(j)])] = 1;
    for (int k = 0; k < nc; ++k)
        for (int a = 0; a < nc; ++a)
            if (reach[rat(a, k)])
                for (int b = 0; b < nc; ++b)
                    if (reach[rat(k, b)]) reach[rat(a, b)] = 1;

    std::vector<int> value(static_cast<std::size_t>(nc), 0);
    std::vector<char> done(static_cast<std::size_t>(nc), 0);
    for (int step = 0; step < nc; ++step) {
        // pick an unassigned component whose strict predecessors are done
        int pick = -1;
        for (int c = 0; c < nc && pick < 0; ++c) {
            if (done[static_cast<std::size_t>(c)]) continue;
            bool ready = true;
            for (int d = 0; d < nc && ready; ++d)
                if (!done[static_cast<std::size_t>(d)] && d != c && reach[rat(d, c)] &&
                    !reach[rat(c, d)])
                    ready = false;
            if (ready) pick = c;
        }
        int base = 0;
        for (int d = 0; d < nc; ++d)
            if (done[static_cast<std::size_t>(d)] && reach[rat(d, pick)])
                base = std::max(base, value[static_cast<std::size_t>(d)]);
        int v = base == 0 ? rng.range(1, 3) : base + rng.below(3);
        // mutually reachable components get the identical value
        for (int d = 0; d < nc; ++d)
            if (d == pick || (reach[rat(d, pick)] && reach[rat(pick, d)])) {
                value[static_cast<std::size_t>(d)] = v;
                done[static_cast<std::size_t>(d)] = 1;
            }
    }

    Restriction rho(static_cast<std::size_t>(p));
    for (int i = 1; i <= p; ++i)
        rho[static_cast<std::size_t>(i) - 1] = value[static_cast<std::size_t>(comp[static_cast<std::size_t>(i)])];
    return rho;
}

std::vector<PPartition> enumerate_partitions_naive(const Poset& P, const Restriction& rho) {
    require_restriction(P, rho);
    int p = P.order();
    LinearOrder topo = P.topological_order();
    std::vector<PPartition> out;
    PPartition f(static_cast<std::size_t>(p), 0);
    auto rec = [&](auto&& self, int t) -> void {
        if (t == p) {
            out.push_back(f);
            return;
        }
        int e = topo[static_cast<std::size_t>(t)];
        int lo = 1;
        for (int u : P.lower_covers(e))
            lo = std::max(lo, f[static_cast<std::size_t>(u) - 1] + (u > e ? 1 : 0));
        for (int v = lo; v <= rho[static_cast<std::size_t>(e) - 1]; ++v) {
            f[static_cast<std::size_t>(e) - 1] = v;
            self(self, t + 1);
        }
        f[static_cast<std::size_t>(e) - 1] = 0;
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end());
    return out;
}

IntPolynomial generating_polynomial_naive(const Poset& P, const Restriction& rho) {
    int nvars = 1;
    for (int v : rho) nvars = std::max(nvars, v);
    IntPolynomial poly(nvars);
    for (const PPartition& f : enumerate_partitions_naive(P, rho))
        poly.add_term(weight_composition(f, nvars), 1);
    return poly;
}

bool is_symmetric(const IntPolynomial& poly) {
    for (int k = 1; k + 1 <= poly.nvars(); ++k)
        if (!(poly.with_swapped_variables(k) == poly)) return false;
    return true;
}

namespace {

struct Scorecard {
    VerifyResult r;
    static constexpr int max_witnesses = 5;

    void check(bool ok, const std::string& what) {
        ++r.cases;
        if (ok) return;
        ++r.violations;
        r.ok = false;
        if (r.violations <= max_witnesses) r.detail += "violation: " + what + "\n";
    }
    void note(const std::string& line) { r.detail += line + "\n"; }
};

std::string show(const std::vector<int>& v) {
    std::ostringstream os;
    os << '(';
    for (std::size_t k = 0; k < v.size(); ++k) os << (k ? "," : "") << v[k];
    os << ')';
    return os.str();
}

std::string show_poset(const Poset& P) {
    std::ostringstream os;
    os << "p=" << P.order() << " covers";
    for (auto [i, j] : P.covers()) os << ' ' << i << '<' << j;
    return os.str();
}

Restriction random_restriction(Rng& rng, int p) {
    Restriction rho(static_cast<std::size_t>(p));
    for (int i = 0; i < p; ++i) rho[static_cast<std::size_t>(i)] = rng.range(1, p + 2);
    return rho;
}

std::vector<WeakComposition> compositions_up_to(int max_len, int max_sum) {
    std::set<WeakComposition> seen;
    std::vector<int> parts(static_cast<std::size_t>(max_len), 0);
    auto rec = [&](auto&& self, int k, int left) -> void {
        if (k == max_len) {
            seen.insert(trimmed(parts));
            return;
        }
        for (int v = 0; v <= left; ++v) {
            parts[static_cast<std::size_t>(k)] = v;
            self(self, k + 1, left - v);
        }
        parts[static_cast<std::size_t>(k)] = 0;
    };
    rec(rec, 0, max_sum);
    return {seen.begin(), seen.end()};
}

std::vector<Shape> shapes_up_to(int max_sum) {
    std::vector<Shape> out;
    Shape cur;
    auto rec = [&](auto&& self, int left, int cap) -> void {
        if (!cur.empty()) out.push_back(cur);
        for (int part = std::min(cap, left); part >= 1; --part) {
            cur.push_back(part);
            self(self, left - part, part);
            cur.pop_back();
        }
    };
    rec(rec, max_sum, max_sum);
    return out;
}

} // namespace

VerifyResult verify_fundamental(int size, std::uint64_t seed) {
    Scorecard sc;
    Rng rng(seed);
    static const long long known_counts[] = {1, 1, 3, 19, 219, 4231};
    for (int p = 1; p <= size; ++p) {
        std::vector<Poset> posets = all_posets(p);
        if (p < static_cast<int>(std::size(known_counts)))
            sc.check(static_cast<long long>(posets.size()) == known_counts[p],
                     "wrong labelled poset count at p=" + std::to_string(p));
        std::ostringstream line;
        line << "p=" << p << ": " << posets.size() << " posets, 3 restrictions each";
        sc.note(line.str());
        for (const Poset& P : posets)
            for (int t = 0; t < 3; ++t) {
                Restriction rho = random_restriction(rng, p);
                try {
                    check_fundamental_decomposition(P, rho);
                    sc.check(true, "");
                } catch (const error& e) {
                    sc.check(false, std::string(e.what()) + " [" + show_poset(P) + " rho=" +
                                        show(rho) + "]");
                }
            }
    }
    return sc.r;
}

VerifyResult verify_positivity(int size, int trials, std::uint64_t seed) {
    Scorecard sc;
    Rng rng(seed);
    for (int t = 0; t < trials; ++t) {
        int p = rng.range(1, size);
        Poset P = random_poset(rng, p);
        Restriction rho = random_flag(rng, P);
        std::string tag = show_poset(P) + " rho=" + show(rho);
        SlideExpansion e = expand_flagged(P, rho);
        sc.check(e.all_positive(), "negative slide coefficient for " + tag);
        IntPolynomial direct = generating_polynomial(P, rho);
        int nv = std::max({1, e.max_key_length(), direct.nvars()});
        sc.check(e.to_polynomial(nv) == direct, "slide expansion does not expand back for " + tag);
    }
    sc.note("flagged pairs tried: " + std::to_string(trials));
    return sc.r;
}

VerifyResult verify_product(int size) {
    Scorecard sc;
    std::vector<WeakComposition> comps = compositions_up_to(3, size);
    long long pairs = 0;
    for (const auto& a : comps)
        for (const auto& b : comps) {
            if (part_sum(a) + part_sum(b) > size) continue;
            ++pairs;
            std::string tag = show(a) + " * " + show(b);
            SlideExpansion via_poset = slide_product_poset(a, b);
            try {
                SlideExpansion via_bump = slide_product_bump(a, b);
                sc.check(via_bump == via_poset, "shuffle and extension routes differ for " + tag);
            } catch (const error& e) {
                sc.check(false, std::string(e.what()) + " for " + tag);
            }
            int n = std::max({1, static_cast<int>(trimmed(a).size()),
                              static_cast<int>(trimmed(b).size())});
            SlideExpansion via_monomials =
                expand_general(slide_polynomial(a, n) * slide_polynomial(b, n));
            sc.check(via_monomials == via_poset,
                     "monomial-route expansion differs for " + tag);
        }
    sc.note("pairs tried: " + std::to_string(pairs));
    return sc.r;
}

VerifyResult verify_schur(int size) {
    Scorecard sc;
    long long flags_tried = 0;
    for (const Shape& shape : shapes_up_to(size)) {
        int rows = static_cast<int>(shape.size());
        for (int n = 1; n <= 4; ++n) {
            Flag uniform(static_cast<std::size_t>(rows), n);
            IntPolynomial viaposet = flagged_schur(shape, uniform);
            IntPolynomial direct = ssyt_polynomial(shape, uniform);
            sc.check(viaposet == direct,
                     "tableau oracle mismatch for shape " + show(shape) + " n=" + std::to_string(n));
            sc.check(is_symmetric(direct.with_nvars(std::max(direct.nvars(), n))),
                     "uniform-bound polynomial not symmetric for shape " + show(shape));
        }
        // all weakly increasing flags bounded by 6
        Flag flag(static_cast<std::size_t>(rows), 0);
        auto rec = [&](auto&& self, int i, int lo) -> void {
            if (i == rows) {
                ++flags_tried;
                std::string tag = "shape " + show(shape) + " flag " + show(flag);
                IntPolynomial viaposet = flagged_schur(shape, flag);
                sc.check(viaposet == ssyt_polynomial(shape, flag),
                         "tableau oracle mismatch for " + tag);
                Poset P = shape_poset(shape);
                Restriction rho = flag_restriction(shape, flag);
                sc.check(is_flag(P, rho) && is_well_labelled(P, rho),
                         "shape bounds not a well-labelled flag for " + tag);
                SlideExpansion e = flagged_schur_expansion(shape, flag);
                sc.check(e.all_positive(), "negative coefficient for " + tag);
                int nv = std::max({1, e.max_key_length(), viaposet.nvars()});
                sc.check(e.to_polynomial(nv) == viaposet, "expansion mismatch for " + tag);
                return;
            }
            for (int b = lo; b <= 6; ++b) {
                flag[static_cast<std::size_t>(i)] = b;
                self(self, i + 1, b);
            }
        };
        rec(rec, 0, 1);
    }
    sc.note("flags tried: " + std::to_string(flags_tried));
    return sc.r;
}

VerifyResult verify_lemmas(int size, std::uint64_t seed) {
    Scorecard sc;
    Rng rng(seed);
    long long orders = 0;
    for (int p = 1; p <= size; ++p) {
        LinearOrder L(static_cast<std::size_t>(p));
        std::iota(L.begin(), L.end(), 1);
        do {
            ++orders;
            Poset P = Poset::from_linear(L);
            for (int t = 0; t < 2; ++t) {
                Restriction rho = random_restriction(rng, p);
                std::string tag = "L=" + show(L) + " rho=" + show(rho);
                Restriction bar = max_restriction(P, rho);
                std::vector<PPartition> naive = enumerate_partitions_naive(P, rho);

                sc.check(is_feasible(P, rho) == !naive.empty(),
                         "feasibility disagrees with enumeration for " + tag);
                IntPolynomial pruned = generating_polynomial(P, rho);
                sc.check(pruned == generating_polynomial_naive(P, rho),
                         "tightened enumeration differs from definition for " + tag);
                if (is_feasible(P, rho))
                    sc.check(pruned == generating_polynomial_naive(P, bar),
                             "tightening changed the polynomial for " + tag);

                if (!is_feasible(P, rho)) continue;
                WeakComposition rd = reduced_descent(L, rho);
                WeakComposition wd = weak_descent(L, rho);
                sc.check(refines(flatten(wd), flatten(rd)),
                         "weak descents do not refine reduced descents for " + tag);
                sc.check(dominates(rd, wd), "reduced descents do not dominate for " + tag);

                bool equal = rd == wd;
                bool constant_on_ascents = true;
                for (std::size_t k = 0; k + 1 < L.size(); ++k)
                    if (L[k] < L[k + 1] &&
                        bar[static_cast<std::size_t>(L[k]) - 1] !=
                            bar[static_cast<std::size_t>(L[k + 1]) - 1])
                        constant_on_ascents = false;
                sc.check(equal == constant_on_ascents,
                         "single-slide criterion fails for " + tag);
                if (equal) {
                    int nv = 1;
                    for (int v : bar) nv = std::max(nv, v);
                    sc.check(pruned == slide_polynomial(rd, nv),
                             "generating polynomial is not the slide element for " + tag);
                }
            }
        } while (std::next_permutation(L.begin(), L.end()));
    }
    // realization round trips
    for (const WeakComposition& a : compositions_up_to(3, size)) {
        auto [L, rho] = realize_slide(a);
        std::string tag = "index " + show(a);
        sc.check(is_flag(L, rho) && is_well_labelled(L, rho),
                 "realization is not a well-labelled flag for " + tag);
        int n = std::max(1, static_cast<int>(trimmed(a).size()));
        sc.check(generating_polynomial(L, rho) == slide_polynomial(a, n),
                 "realization does not generate the slide element for " + tag);
    }
    sc.note("linear orders tried: " + std::to_string(orders) + ", 2 restrictions each");
    return sc.r;
}

VerifyResult run_suite(const std::string& name, int size, std::uint64_t seed) {
    if (name == "fundamental") return verify_fundamental(size, seed);
    if (name == "positivity") return verify_positivity(size, 500, seed);
    if (name == "product") return verify_product(size);
    if (name == "schur") return verify_schur(size);
    if (name == "lemmas") return verify_lemmas(size, seed);
    fail(errc::invalid_argument, "unknown suite '" + name +
                                     "' (expected fundamental, positivity, product, schur, lemmas)");
}

} // namespace ppart
