#include "ppart/schur.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "ppart/descent.hpp"
#include "ppart/error.hpp"
#include "ppart/partitions.hpp"

namespace ppart {

void require_shape(const Shape& shape) {
    for (std::size_t i = 0; i < shape.size(); ++i) {
        if (shape[i] < 1) fail(errc::invalid_argument, "shape rows must be positive");
        if (i > 0 && shape[i] > shape[i - 1])
            fail(errc::invalid_argument, "shape rows must weakly decrease");
    }
}

int shape_cell_label(const Shape& shape, int row, int col) {
    int below = 0; // cells in later rows
    for (std::size_t k = static_cast<std::size_t>(row); k < shape.size(); ++k) below += shape[k];
    return below + col;
}

Poset shape_poset(const Shape& shape) {
    require_shape(shape);
    int p = std::accumulate(shape.begin(), shape.end(), 0);
    std::vector<std::pair<int, int>> covers;
    int rows = static_cast<int>(shape.size());
    for (int i = 1; i <= rows; ++i) {
        int len = shape[static_cast<std::size_t>(i) - 1];
        for (int c = 1; c < len; ++c)
            covers.emplace_back(shape_cell_label(shape, i, c), shape_cell_label(shape, i, c + 1));
        if (i < rows)
            for (int c = 1; c <= shape[static_cast<std::size_t>(i)]; ++c)
                covers.emplace_back(shape_cell_label(shape, i, c),
                                    shape_cell_label(shape, i + 1, c));
    }
    return Poset::from_covers(p, covers);
}

Restriction flag_restriction(const Shape& shape, const Flag& flag) {
    require_shape(shape);
    if (flag.size() != shape.size())
        fail(errc::size_mismatch, "flag has " + std::to_string(flag.size()) + " entries for " +
                                      std::to_string(shape.size()) + " rows");
    for (std::size_t i = 0; i < flag.size(); ++i) {
        if (flag[i] < 1) fail(errc::invalid_argument, "flag entries must be positive");
        if (i > 0 && flag[i] < flag[i - 1])
            fail(errc::invalid_argument, "flag entries must weakly increase");
    }
    int p = std::accumulate(shape.begin(), shape.end(), 0);
    Restriction rho(static_cast<std::size_t>(p), 0);
    for (int i = 1; i <= static_cast<int>(shape.size()); ++i)
        for (int c = 1; c <= shape[static_cast<std::size_t>(i) - 1]; ++c)
            rho[static_cast<std::size_t>(shape_cell_label(shape, i, c)) - 1] =
                flag[static_cast<std::size_t>(i) - 1];
    return rho;
}

IntPolynomial flagged_schur(const Shape& shape, const Flag& flag) {
    return generating_polynomial(shape_poset(shape), flag_restriction(shape, flag));
}

std::vector<Tableau> standard_tableaux(const Shape& shape) {
    require_shape(shape);
    int p = std::accumulate(shape.begin(), shape.end(), 0);
    int rows = static_cast<int>(shape.size());
    std::vector<Tableau> out;
    Tableau cur;
    cur.rows.assign(static_cast<std::size_t>(rows), {});

    auto rec = [&](auto&& self, int next) -> void {
        if (next > p) {
            out.push_back(cur);
            return;
        }
        for (int i = 0; i < rows; ++i) {
            std::size_t filled = cur.rows[static_cast<std::size_t>(i)].size();
            if (static_cast<int>(filled) >= shape[static_cast<std::size_t>(i)]) continue;
            if (i > 0 && cur.rows[static_cast<std::size_t>(i) - 1].size() <= filled)
                continue; // cell above must already be filled
            cur.rows[static_cast<std::size_t>(i)].push_back(next);
            self(self, next + 1);
            cur.rows[static_cast<std::size_t>(i)].pop_back();
        }
    };
    rec(rec, 1);
    return out;
}

LinearOrder tableau_extension(const Shape& shape, const Tableau& T) {
    int p = std::accumulate(shape.begin(), shape.end(), 0);
    LinearOrder seq(static_cast<std::size_t>(p), 0);
    for (int i = 1; i <= static_cast<int>(T.rows.size()); ++i)
        for (int c = 1; c <= static_cast<int>(T.rows[static_cast<std::size_t>(i) - 1].size()); ++c) {
            int entry = T.rows[static_cast<std::size_t>(i) - 1][static_cast<std::size_t>(c) - 1];
            seq[static_cast<std::size_t>(entry) - 1] = shape_cell_label(shape, i, c);
        }
    return seq;
}

SlideExpansion flagged_schur_expansion(const Shape& shape, const Flag& flag) {
    Restriction rho = flag_restriction(shape, flag);
    SlideExpansion out;
    for (const Tableau& T : standard_tableaux(shape)) {
        try {
            out.add(reduced_descent(tableau_extension(shape, T), rho), 1);
        } catch (const error& e) {
            if (e.code() != errc::infeasible) throw;
        }
    }
    return out;
}

IntPolynomial ssyt_polynomial(const Shape& shape, const std::vector<int>& row_bounds) {
    require_shape(shape);
    if (row_bounds.size() != shape.size())
        fail(errc::size_mismatch, "one bound per row required");
    int nvars = 1;
    for (int b : row_bounds) nvars = std::max(nvars, b);
    IntPolynomial poly(nvars);

    int rows = static_cast<int>(shape.size());
    std::vector<std::vector<int>> fill(static_cast<std::size_t>(rows));
    for (int i = 0; i < rows; ++i)
        fill[static_cast<std::size_t>(i)].assign(static_cast<std::size_t>(shape[static_cast<std::size_t>(i)]), 0);
    Exponents exps(static_cast<std::size_t>(nvars), 0);

    // Row-major fill: weak increase to the left neighbour, strict to the one
    // above, entry within the row bound.
    auto rec = [&](auto&& self, int i, int c) -> void {
        if (i == rows) {
            poly.add_term(exps, 1);
            return;
        }
        int next_i = i, next_c = c + 1;
        if (next_c >= shape[static_cast<std::size_t>(i)]) {
            next_i = i + 1;
            next_c = 0;
        }
        int lo = 1;
        if (c > 0) lo = std::max(lo, fill[static_cast<std::size_t>(i)][static_cast<std::size_t>(c) - 1]);
        if (i > 0) lo = std::max(lo, fill[static_cast<std::size_t>(i) - 1][static_cast<std::size_t>(c)] + 1);
        for (int v = lo; v <= row_bounds[static_cast<std::size_t>(i)]; ++v) {
            fill[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] = v;
            ++exps[static_cast<std::size_t>(v) - 1];
            self(self, next_i, next_c);
            --exps[static_cast<std::size_t>(v) - 1];
        }
        fill[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] = 0;
    };
    rec(rec, 0, 0);
    return poly;
}

} // namespace ppart
