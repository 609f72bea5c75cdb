#include "ppart/polynomial.hpp"

#include <algorithm>
#include <numeric>

#include "ppart/composition.hpp"
#include "ppart/error.hpp"

namespace ppart {

IntPolynomial::IntPolynomial(int nvars) : nvars_(nvars) {
    if (nvars < 0) fail(errc::invalid_argument, "negative variable count");
}

IntPolynomial IntPolynomial::constant(int nvars, std::int64_t c) {
    IntPolynomial out(nvars);
    out.add_term(Exponents(static_cast<std::size_t>(nvars), 0), c);
    return out;
}

std::int64_t IntPolynomial::coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? 0 : it->second;
}

std::int64_t IntPolynomial::coefficient_sum() const {
    std::int64_t s = 0;
    for (const auto& [e, c] : terms_) s += c;
    return s;
}

void IntPolynomial::add_term(const Exponents& e, std::int64_t c) {
    if (static_cast<int>(e.size()) != nvars_)
        fail(errc::length, "exponent vector length differs from variable count");
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

IntPolynomial IntPolynomial::with_nvars(int n) const {
    if (n < nvars_) fail(errc::length, "cannot shrink variable count");
    if (n == nvars_) return *this;
    IntPolynomial out(n);
    for (const auto& [e, c] : terms_) out.add_term(padded(e, n), c);
    return out;
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& o) {
    if (o.nvars_ > nvars_) *this = with_nvars(o.nvars_);
    for (const auto& [e, c] : o.terms_) add_term(padded(e, nvars_), c);
    return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& o) {
    if (o.nvars_ > nvars_) *this = with_nvars(o.nvars_);
    for (const auto& [e, c] : o.terms_) add_term(padded(e, nvars_), -c);
    return *this;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    int n = std::max(a.nvars_, b.nvars_);
    IntPolynomial left = a.with_nvars(n), right = b.with_nvars(n), out(n);
    Exponents e(static_cast<std::size_t>(n));
    for (const auto& [ea, ca] : left.terms_)
        for (const auto& [eb, cb] : right.terms_) {
            for (int k = 0; k < n; ++k)
                e[static_cast<std::size_t>(k)] =
                    ea[static_cast<std::size_t>(k)] + eb[static_cast<std::size_t>(k)];
            out.add_term(e, ca * cb);
        }
    return out;
}

bool IntPolynomial::operator==(const IntPolynomial& o) const {
    int n = std::max(nvars_, o.nvars_);
    return with_nvars(n).terms_ == o.with_nvars(n).terms_;
}

IntPolynomial IntPolynomial::with_swapped_variables(int k) const {
    if (k < 1 || k + 1 > nvars_) fail(errc::out_of_range, "variable index out of range");
    IntPolynomial out(nvars_);
    for (const auto& [e, c] : terms_) {
        Exponents swapped = e;
        std::swap(swapped[static_cast<std::size_t>(k) - 1], swapped[static_cast<std::size_t>(k)]);
        out.add_term(swapped, c);
    }
    return out;
}

std::vector<std::pair<Exponents, std::int64_t>> IntPolynomial::sorted_terms() const {
    std::vector<std::pair<Exponents, std::int64_t>> out(terms_.begin(), terms_.end());
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
        int dx = part_sum(x.first), dy = part_sum(y.first);
        if (dx != dy) return dx > dy;
        return revlex_less(y.first, x.first); // larger first
    });
    return out;
}

} // namespace ppart
