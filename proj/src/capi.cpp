// extern "C" surface over the core. Handles own plain core values; every
// entry point catches and converts exceptions, stashing the message in a
// thread-local slot for ppart_last_error.

#include "ppart.h"

#include <cstring>
#include <new>
#include <string>

#include "ppart/error.hpp"
#include "ppart/io.hpp"
#include "ppart/partitions.hpp"
#include "ppart/polynomial.hpp"
#include "ppart/poset.hpp"
#include "ppart/restriction.hpp"
#include "ppart/schur.hpp"
#include "ppart/slide.hpp"
#include "ppart/verify.hpp"

struct ppart_poset {
    ppart::Poset value;
};
struct ppart_instance {
    ppart_poset poset;
    std::optional<ppart::Restriction> bounds;
};
struct ppart_polynomial {
    ppart::IntPolynomial value;
    std::vector<std::pair<ppart::Exponents, std::int64_t>> ordered;
};
struct ppart_expansion {
    ppart::SlideExpansion value;
    std::vector<std::pair<ppart::WeakComposition, std::int64_t>> ordered;
};

namespace {

thread_local std::string g_last_error;

ppart_status to_status(ppart::errc code) {
    using ppart::errc;
    switch (code) {
        case errc::cycle: return PPART_ERR_CYCLE;
        case errc::out_of_range: return PPART_ERR_RANGE;
        case errc::comparable: return PPART_ERR_COMPARABLE;
        case errc::not_comparable: return PPART_ERR_NOT_COMPARABLE;
        case errc::size_mismatch: return PPART_ERR_SIZE_MISMATCH;
        case errc::not_a_flag: return PPART_ERR_NOT_A_FLAG;
        case errc::infeasible: return PPART_ERR_INFEASIBLE;
        case errc::length: return PPART_ERR_LENGTH;
        case errc::bump_not_unique: return PPART_ERR_BUMP_NOT_UNIQUE;
        case errc::decomposition: return PPART_ERR_DECOMPOSITION;
        case errc::parse: return PPART_ERR_PARSE;
        case errc::invalid_argument: return PPART_ERR_ARGUMENT;
    }
    return PPART_ERR_INTERNAL;
}

template <typename F>
ppart_status guarded(F&& body) {
    try {
        return body();
    } catch (const ppart::error& e) {
        g_last_error = e.what();
        return to_status(e.code());
    } catch (const std::bad_alloc&) {
        g_last_error = "out of memory";
        return PPART_ERR_NOMEM;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return PPART_ERR_INTERNAL;
    }
}

ppart_status bad_argument(const char* what) {
    g_last_error = what;
    return PPART_ERR_ARGUMENT;
}

ppart::Restriction to_restriction(const ppart::Poset& P, const int32_t* bounds, int32_t nbounds) {
    if (nbounds != P.order() || (nbounds > 0 && !bounds))
        ppart::fail(ppart::errc::size_mismatch, "expected one bound per poset element");
    return ppart::Restriction(bounds, bounds + nbounds);
}

ppart::WeakComposition to_composition(const int32_t* parts, int32_t len) {
    if (len < 0 || (len > 0 && !parts))
        ppart::fail(ppart::errc::invalid_argument, "null composition");
    return ppart::WeakComposition(parts, parts + len);
}

char* copy_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

ppart_polynomial* wrap(ppart::IntPolynomial poly) {
    auto* h = new ppart_polynomial{std::move(poly), {}};
    h->ordered = h->value.sorted_terms();
    return h;
}

ppart_expansion* wrap(ppart::SlideExpansion e) {
    auto* h = new ppart_expansion{std::move(e), {}};
    h->ordered = h->value.sorted_terms();
    return h;
}

} // namespace

extern "C" {

const char* ppart_status_name(ppart_status status) {
    switch (status) {
        case PPART_OK: return "ok";
        case PPART_ERR_ARGUMENT: return "invalid argument";
        case PPART_ERR_PARSE: return "parse error";
        case PPART_ERR_CYCLE: return "relation contains a cycle";
        case PPART_ERR_RANGE: return "label out of range";
        case PPART_ERR_COMPARABLE: return "elements already comparable";
        case PPART_ERR_NOT_COMPARABLE: return "elements not comparable";
        case PPART_ERR_SIZE_MISMATCH: return "size mismatch";
        case PPART_ERR_NOT_A_FLAG: return "restriction is not a flag";
        case PPART_ERR_INFEASIBLE: return "empty partition set";
        case PPART_ERR_LENGTH: return "length error";
        case PPART_ERR_BUMP_NOT_UNIQUE: return "bump minimum not unique";
        case PPART_ERR_DECOMPOSITION: return "decomposition mismatch";
        case PPART_ERR_VERIFY: return "verification failed";
        case PPART_ERR_NOMEM: return "out of memory";
        case PPART_ERR_INTERNAL: return "internal error";
    }
    return "unknown";
}

const char* ppart_last_error(void) { return g_last_error.c_str(); }

void ppart_string_free(char* s) { delete[] s; }

ppart_status ppart_poset_create(int32_t p, const int32_t* covers, int32_t ncovers,
                                ppart_poset** out) {
    if (!out) return bad_argument("null output");
    if (ncovers < 0 || (ncovers > 0 && !covers)) return bad_argument("null covers");
    return guarded([&] {
        std::vector<std::pair<int, int>> pairs;
        pairs.reserve(static_cast<std::size_t>(ncovers));
        for (int32_t k = 0; k < ncovers; ++k) pairs.emplace_back(covers[2 * k], covers[2 * k + 1]);
        *out = new ppart_poset{ppart::Poset::from_covers(p, pairs)};
        return PPART_OK;
    });
}

void ppart_poset_free(ppart_poset* poset) { delete poset; }

int32_t ppart_poset_order(const ppart_poset* poset) { return poset ? poset->value.order() : 0; }

int32_t ppart_poset_cover_count(const ppart_poset* poset) {
    return poset ? static_cast<int32_t>(poset->value.covers().size()) : 0;
}

ppart_status ppart_poset_cover(const ppart_poset* poset, int32_t index, int32_t* lower,
                               int32_t* upper) {
    if (!poset || !lower || !upper) return bad_argument("null argument");
    if (index < 0 || index >= static_cast<int32_t>(poset->value.covers().size()))
        return bad_argument("cover index out of range");
    auto [i, j] = poset->value.covers()[static_cast<std::size_t>(index)];
    *lower = i;
    *upper = j;
    return PPART_OK;
}

int32_t ppart_poset_leq(const ppart_poset* poset, int32_t i, int32_t j) {
    if (!poset) return 0;
    if (i < 1 || i > poset->value.order() || j < 1 || j > poset->value.order()) return 0;
    return poset->value.leq(i, j) ? 1 : 0;
}

int64_t ppart_poset_extension_count(const ppart_poset* poset) {
    if (!poset) return 0;
    return static_cast<int64_t>(poset->value.linear_extensions().size());
}

ppart_status ppart_instance_parse(const char* text, ppart_instance** out) {
    if (!text || !out) return bad_argument("null argument");
    return guarded([&] {
        ppart::Instance inst = ppart::parse_instance(text);
        *out = new ppart_instance{{std::move(inst.poset)}, std::move(inst.rho)};
        return PPART_OK;
    });
}

void ppart_instance_free(ppart_instance* instance) { delete instance; }

const ppart_poset* ppart_instance_poset(const ppart_instance* instance) {
    return instance ? &instance->poset : nullptr;
}

int32_t ppart_instance_has_bounds(const ppart_instance* instance) {
    return instance && instance->bounds ? 1 : 0;
}

ppart_status ppart_instance_bounds(const ppart_instance* instance, int32_t* out,
                                   int32_t capacity) {
    if (!instance || !out) return bad_argument("null argument");
    if (!instance->bounds) return bad_argument("instance carries no bounds");
    const auto& rho = *instance->bounds;
    if (capacity < static_cast<int32_t>(rho.size())) return bad_argument("capacity too small");
    for (std::size_t k = 0; k < rho.size(); ++k) out[k] = rho[k];
    return PPART_OK;
}

ppart_status ppart_partition_count(const ppart_poset* poset, const int32_t* bounds,
                                   int32_t nbounds, int64_t* out) {
    if (!poset || !out) return bad_argument("null argument");
    return guarded([&] {
        auto rho = to_restriction(poset->value, bounds, nbounds);
        *out = static_cast<int64_t>(ppart::enumerate_partitions(poset->value, rho).size());
        return PPART_OK;
    });
}

ppart_status ppart_generating_polynomial(const ppart_poset* poset, const int32_t* bounds,
                                         int32_t nbounds, ppart_polynomial** out) {
    if (!poset || !out) return bad_argument("null argument");
    return guarded([&] {
        auto rho = to_restriction(poset->value, bounds, nbounds);
        *out = wrap(ppart::generating_polynomial(poset->value, rho));
        return PPART_OK;
    });
}

ppart_status ppart_is_flag(const ppart_poset* poset, const int32_t* bounds, int32_t nbounds,
                           int32_t* out) {
    if (!poset || !out) return bad_argument("null argument");
    return guarded([&] {
        auto rho = to_restriction(poset->value, bounds, nbounds);
        *out = ppart::is_flag(poset->value, rho) ? 1 : 0;
        return PPART_OK;
    });
}

ppart_status ppart_expand_flagged(const ppart_poset* poset, const int32_t* bounds,
                                  int32_t nbounds, ppart_expansion** out) {
    if (!poset || !out) return bad_argument("null argument");
    return guarded([&] {
        auto rho = to_restriction(poset->value, bounds, nbounds);
        *out = wrap(ppart::expand_flagged(poset->value, rho));
        return PPART_OK;
    });
}

ppart_status ppart_expand_general(const ppart_polynomial* poly, ppart_expansion** out) {
    if (!poly || !out) return bad_argument("null argument");
    return guarded([&] {
        *out = wrap(ppart::expand_general(poly->value));
        return PPART_OK;
    });
}

ppart_status ppart_slide_polynomial(const int32_t* a, int32_t alen, int32_t nvars,
                                    ppart_polynomial** out) {
    if (!out) return bad_argument("null output");
    return guarded([&] {
        *out = wrap(ppart::slide_polynomial(to_composition(a, alen), nvars));
        return PPART_OK;
    });
}

ppart_status ppart_fundamental_polynomial(const int32_t* alpha, int32_t len, int32_t nvars,
                                          ppart_polynomial** out) {
    if (!out) return bad_argument("null output");
    return guarded([&] {
        *out = wrap(ppart::fundamental_polynomial(to_composition(alpha, len), nvars));
        return PPART_OK;
    });
}

ppart_status ppart_slide_product(const int32_t* a, int32_t alen, const int32_t* b, int32_t blen,
                                 int32_t method, ppart_expansion** out) {
    if (!out) return bad_argument("null output");
    if (method != 0 && method != 1) return bad_argument("method must be 0 or 1");
    return guarded([&] {
        auto ca = to_composition(a, alen), cb = to_composition(b, blen);
        *out = wrap(method == 0 ? ppart::slide_product_poset(ca, cb)
                                : ppart::slide_product_bump(ca, cb));
        return PPART_OK;
    });
}

ppart_status ppart_flagged_schur(const int32_t* shape, int32_t nrows, const int32_t* flag,
                                 int32_t nflag, ppart_polynomial** out) {
    if (!out) return bad_argument("null output");
    return guarded([&] {
        *out = wrap(ppart::flagged_schur(to_composition(shape, nrows),
                                         to_composition(flag, nflag)));
        return PPART_OK;
    });
}

ppart_status ppart_flagged_schur_expansion(const int32_t* shape, int32_t nrows,
                                           const int32_t* flag, int32_t nflag,
                                           ppart_expansion** out) {
    if (!out) return bad_argument("null output");
    return guarded([&] {
        *out = wrap(ppart::flagged_schur_expansion(to_composition(shape, nrows),
                                                   to_composition(flag, nflag)));
        return PPART_OK;
    });
}

void ppart_polynomial_free(ppart_polynomial* poly) { delete poly; }

int32_t ppart_polynomial_nvars(const ppart_polynomial* poly) {
    return poly ? poly->value.nvars() : 0;
}

int64_t ppart_polynomial_term_count(const ppart_polynomial* poly) {
    return poly ? static_cast<int64_t>(poly->ordered.size()) : 0;
}

ppart_status ppart_polynomial_term(const ppart_polynomial* poly, int64_t index, int64_t* coeff,
                                   int32_t* exponents, int32_t capacity) {
    if (!poly || !coeff || !exponents) return bad_argument("null argument");
    if (index < 0 || index >= static_cast<int64_t>(poly->ordered.size()))
        return bad_argument("term index out of range");
    const auto& [e, c] = poly->ordered[static_cast<std::size_t>(index)];
    if (capacity < static_cast<int32_t>(e.size())) return bad_argument("capacity too small");
    *coeff = c;
    for (std::size_t k = 0; k < e.size(); ++k) exponents[k] = e[k];
    return PPART_OK;
}

int32_t ppart_polynomial_equal(const ppart_polynomial* a, const ppart_polynomial* b) {
    if (!a || !b) return 0;
    return a->value == b->value ? 1 : 0;
}

ppart_status ppart_polynomial_mul(const ppart_polynomial* a, const ppart_polynomial* b,
                                  ppart_polynomial** out) {
    if (!a || !b || !out) return bad_argument("null argument");
    return guarded([&] {
        *out = wrap(a->value * b->value);
        return PPART_OK;
    });
}

ppart_status ppart_polynomial_format(const ppart_polynomial* poly, int32_t as_json, char** out) {
    if (!poly || !out) return bad_argument("null argument");
    return guarded([&] {
        *out = copy_string(as_json ? ppart::format_polynomial_json(poly->value)
                                   : ppart::format_polynomial_text(poly->value));
        return PPART_OK;
    });
}

void ppart_expansion_free(ppart_expansion* expansion) { delete expansion; }

int64_t ppart_expansion_term_count(const ppart_expansion* expansion) {
    return expansion ? static_cast<int64_t>(expansion->ordered.size()) : 0;
}

ppart_status ppart_expansion_term(const ppart_expansion* expansion, int64_t index,
                                  int64_t* coeff, int32_t* parts, int32_t capacity,
                                  int32_t* length) {
    if (!expansion || !coeff || !length) return bad_argument("null argument");
    if (index < 0 || index >= static_cast<int64_t>(expansion->ordered.size()))
        return bad_argument("term index out of range");
    const auto& [key, c] = expansion->ordered[static_cast<std::size_t>(index)];
    if (capacity < static_cast<int32_t>(key.size())) return bad_argument("capacity too small");
    if (!key.empty() && !parts) return bad_argument("null parts");
    *coeff = c;
    *length = static_cast<int32_t>(key.size());
    for (std::size_t k = 0; k < key.size(); ++k) parts[k] = key[k];
    return PPART_OK;
}

int32_t ppart_expansion_equal(const ppart_expansion* a, const ppart_expansion* b) {
    if (!a || !b) return 0;
    return a->value == b->value ? 1 : 0;
}

int32_t ppart_expansion_positive(const ppart_expansion* expansion) {
    return expansion && expansion->value.all_positive() ? 1 : 0;
}

ppart_status ppart_expansion_to_polynomial(const ppart_expansion* expansion, int32_t nvars,
                                           ppart_polynomial** out) {
    if (!expansion || !out) return bad_argument("null argument");
    return guarded([&] {
        int n = nvars > 0 ? nvars : std::max(1, expansion->value.max_key_length());
        *out = wrap(expansion->value.to_polynomial(n));
        return PPART_OK;
    });
}

ppart_status ppart_expansion_format(const ppart_expansion* expansion, int32_t as_json,
                                    char** out) {
    if (!expansion || !out) return bad_argument("null argument");
    return guarded([&] {
        *out = copy_string(as_json ? ppart::format_expansion_json(expansion->value)
                                   : ppart::format_expansion_text(expansion->value));
        return PPART_OK;
    });
}

ppart_status ppart_verify(const char* suite, int32_t size, uint64_t seed, char** report) {
    if (!suite || !report) return bad_argument("null argument");
    return guarded([&] {
        ppart::VerifyResult r = ppart::run_suite(suite, size, seed);
        std::string text = r.detail;
        text += "cases: " + std::to_string(r.cases) +
                ", violations: " + std::to_string(r.violations) + "\n";
        *report = copy_string(text);
        if (!r.ok) {
            g_last_error = "suite '" + std::string(suite) + "' reported violations";
            return PPART_ERR_VERIFY;
        }
        return PPART_OK;
    });
}

} // extern "C"
