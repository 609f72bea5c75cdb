/*
 * ppart -- partition generating polynomials over labelled posets and their
 * slide-basis expansions.
 *
 * C interface to the shared library. All objects are opaque handles created
 * and destroyed here; every fallible call returns a ppart_status and writes
 * its result through out-parameters. ppart_last_error() describes the most
 * recent failure on the calling thread.
 *
 * Conventions: poset labels are 1..p; a restriction ("bounds") is one
 * integer per label, indexed by label; weak compositions are arrays of
 * non-negative parts. Strings returned through char** are heap-allocated
 * and released with ppart_string_free.
 */

#ifndef PPART_H
#define PPART_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ppart_status {
    PPART_OK = 0,
    PPART_ERR_ARGUMENT,
    PPART_ERR_PARSE,
    PPART_ERR_CYCLE,
    PPART_ERR_RANGE,
    PPART_ERR_COMPARABLE,
    PPART_ERR_NOT_COMPARABLE,
    PPART_ERR_SIZE_MISMATCH,
    PPART_ERR_NOT_A_FLAG,
    PPART_ERR_INFEASIBLE,
    PPART_ERR_LENGTH,
    PPART_ERR_BUMP_NOT_UNIQUE,
    PPART_ERR_DECOMPOSITION,
    PPART_ERR_VERIFY,
    PPART_ERR_NOMEM,
    PPART_ERR_INTERNAL
} ppart_status;

typedef struct ppart_poset ppart_poset;
typedef struct ppart_instance ppart_instance;
typedef struct ppart_polynomial ppart_polynomial;
typedef struct ppart_expansion ppart_expansion;

const char* ppart_status_name(ppart_status status);
const char* ppart_last_error(void);
void ppart_string_free(char* s);

/* ---- posets ---------------------------------------------------------- */

/* covers: ncovers pairs, flattened as i1,j1,i2,j2,...; redundant relations
 * are fine, the stored covers are recomputed as the transitive reduction. */
ppart_status ppart_poset_create(int32_t p, const int32_t* covers, int32_t ncovers,
                                ppart_poset** out);
void ppart_poset_free(ppart_poset* poset);
int32_t ppart_poset_order(const ppart_poset* poset);
int32_t ppart_poset_cover_count(const ppart_poset* poset);
ppart_status ppart_poset_cover(const ppart_poset* poset, int32_t index, int32_t* lower,
                               int32_t* upper);
/* 1 when i is below or equal to j, else 0. */
int32_t ppart_poset_leq(const ppart_poset* poset, int32_t i, int32_t j);
int64_t ppart_poset_extension_count(const ppart_poset* poset);

/* ---- instance files --------------------------------------------------- */

/* Text ("p=<n>" / "cover i j" / "rho i v") or JSON
 * ({"p":n,"covers":[[i,j],...],"rho":[...]}), auto-detected. */
ppart_status ppart_instance_parse(const char* text, ppart_instance** out);
void ppart_instance_free(ppart_instance* instance);
const ppart_poset* ppart_instance_poset(const ppart_instance* instance);
int32_t ppart_instance_has_bounds(const ppart_instance* instance);
/* Writes p values; capacity must be at least the poset order. */
ppart_status ppart_instance_bounds(const ppart_instance* instance, int32_t* out,
                                   int32_t capacity);

/* ---- partitions and expansions ---------------------------------------- */

ppart_status ppart_partition_count(const ppart_poset* poset, const int32_t* bounds,
                                   int32_t nbounds, int64_t* out);
ppart_status ppart_generating_polynomial(const ppart_poset* poset, const int32_t* bounds,
                                         int32_t nbounds, ppart_polynomial** out);
ppart_status ppart_is_flag(const ppart_poset* poset, const int32_t* bounds, int32_t nbounds,
                           int32_t* out);
/* Positive slide expansion of a flagged pair (PPART_ERR_NOT_A_FLAG otherwise). */
ppart_status ppart_expand_flagged(const ppart_poset* poset, const int32_t* bounds,
                                  int32_t nbounds, ppart_expansion** out);
/* Signed slide expansion of an arbitrary polynomial. */
ppart_status ppart_expand_general(const ppart_polynomial* poly, ppart_expansion** out);

ppart_status ppart_slide_polynomial(const int32_t* a, int32_t alen, int32_t nvars,
                                    ppart_polynomial** out);
ppart_status ppart_fundamental_polynomial(const int32_t* alpha, int32_t len, int32_t nvars,
                                          ppart_polynomial** out);
/* method: 0 = linear-extension route, 1 = shuffle/bump route. */
ppart_status ppart_slide_product(const int32_t* a, int32_t alen, const int32_t* b, int32_t blen,
                                 int32_t method, ppart_expansion** out);

/* ---- flagged Schur ----------------------------------------------------- */

ppart_status ppart_flagged_schur(const int32_t* shape, int32_t nrows, const int32_t* flag,
                                 int32_t nflag, ppart_polynomial** out);
ppart_status ppart_flagged_schur_expansion(const int32_t* shape, int32_t nrows,
                                           const int32_t* flag, int32_t nflag,
                                           ppart_expansion** out);

/* ---- polynomial handles ------------------------------------------------ */

void ppart_polynomial_free(ppart_polynomial* poly);
int32_t ppart_polynomial_nvars(const ppart_polynomial* poly);
int64_t ppart_polynomial_term_count(const ppart_polynomial* poly);
/* Terms are indexed in display order (descending degree, then reverse-
 * lexicographic, largest first). exponents receives nvars values. */
ppart_status ppart_polynomial_term(const ppart_polynomial* poly, int64_t index, int64_t* coeff,
                                   int32_t* exponents, int32_t capacity);
int32_t ppart_polynomial_equal(const ppart_polynomial* a, const ppart_polynomial* b);
ppart_status ppart_polynomial_mul(const ppart_polynomial* a, const ppart_polynomial* b,
                                  ppart_polynomial** out);
ppart_status ppart_polynomial_format(const ppart_polynomial* poly, int32_t as_json, char** out);

/* ---- expansion handles -------------------------------------------------- */

void ppart_expansion_free(ppart_expansion* expansion);
int64_t ppart_expansion_term_count(const ppart_expansion* expansion);
/* parts receives the trimmed index; *length is set to its part count. */
ppart_status ppart_expansion_term(const ppart_expansion* expansion, int64_t index,
                                  int64_t* coeff, int32_t* parts, int32_t capacity,
                                  int32_t* length);
int32_t ppart_expansion_equal(const ppart_expansion* a, const ppart_expansion* b);
int32_t ppart_expansion_positive(const ppart_expansion* expansion);
/* nvars <= 0 picks the smallest variable count that fits every index. */
ppart_status ppart_expansion_to_polynomial(const ppart_expansion* expansion, int32_t nvars,
                                           ppart_polynomial** out);
ppart_status ppart_expansion_format(const ppart_expansion* expansion, int32_t as_json,
                                    char** out);

/* ---- property suites ----------------------------------------------------- */

/* suite: "fundamental", "positivity", "product", "schur" or "lemmas".
 * Returns PPART_OK with a report, or PPART_ERR_VERIFY when a property is
 * violated (the report then carries witnesses). */
ppart_status ppart_verify(const char* suite, int32_t size, uint64_t seed, char** report);

#ifdef __cplusplus
}
#endif

#endif /* PPART_H */
