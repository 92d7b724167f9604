#ifndef POLYAUT_H
#define POLYAUT_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum PolyautStatus {
  POLYAUT_STATUS_OK = 0,
  POLYAUT_STATUS_NULL_ARGUMENT = 1,
  POLYAUT_STATUS_INVALID_UTF8 = 2,
  POLYAUT_STATUS_PARSE_ERROR = 3,
  POLYAUT_STATUS_INVALID_ARGUMENT = 4,
  POLYAUT_STATUS_PRECONDITION_FAILED = 5,
  POLYAUT_STATUS_STEP_LIMIT_EXCEEDED = 6,
  POLYAUT_STATUS_PANIC = 7,
} PolyautStatus;

/**
 * Opaque polynomial map with 2 or 3 components.
 */
typedef struct PolyautMap PolyautMap;

/**
 * Opaque polynomial in `Q[x, y, z]`.
 */
typedef struct PolyautPoly PolyautPoly;

typedef struct PolyautCoordReport {
  bool is_coordinate;
  bool lnd_ok;
  bool unimodular_ok;
  size_t degree_bound;
} PolyautCoordReport;

/**
 * Message for the most recent failed call on this thread, or null. Valid
 * until the next call into this library on the same thread.
 */
const char *polyaut_last_error(void);

void polyaut_string_free(char *s);

enum PolyautStatus polyaut_poly_parse(const char *src, struct PolyautPoly **out);

/**
 * Canonical text of `p`; free with [`polyaut_string_free`]. Null on a null handle.
 */
char *polyaut_poly_to_string(const struct PolyautPoly *p);

bool polyaut_poly_equal(const struct PolyautPoly *a, const struct PolyautPoly *b);

void polyaut_poly_free(struct PolyautPoly *p);

enum PolyautStatus polyaut_map_parse(const char *src, struct PolyautMap **out);

char *polyaut_map_to_string(const struct PolyautMap *m);

size_t polyaut_map_arity(const struct PolyautMap *m);

/**
 * New handle for component `index` of `m`.
 */
enum PolyautStatus polyaut_map_component(const struct PolyautMap *m,
                                         size_t index,
                                         struct PolyautPoly **out);

void polyaut_map_free(struct PolyautMap *m);

/**
 * `out_i = f_i(g)`.
 */
enum PolyautStatus polyaut_map_compose(const struct PolyautMap *f,
                                       const struct PolyautMap *g,
                                       struct PolyautMap **out);

enum PolyautStatus polyaut_map_verify_inverse(const struct PolyautMap *f,
                                              const struct PolyautMap *g,
                                              bool *out);

/**
 * Builds `(f1, f2)` and its inverse `(g1, g2)`. `b` may be null, in which
 * case the inverse of `a` modulo `p` is computed.
 */
enum PolyautStatus polyaut_construct(const struct PolyautPoly *p,
                                     const struct PolyautPoly *a,
                                     const struct PolyautPoly *b,
                                     struct PolyautMap **forward,
                                     struct PolyautMap **inverse);

/**
 * Writes `true` to `is_tame` when the constructed map is tame, and the
 * `x`-degree of `a mod p` to `d1`.
 */
enum PolyautStatus polyaut_classify(const struct PolyautPoly *p,
                                    const struct PolyautPoly *a,
                                    bool *is_tame,
                                    int64_t *d1);

/**
 * Nagata's automorphism `(x - 2sy - s^2 z, y + sz, z)`, `s = xz + y^2`.
 */
enum PolyautStatus polyaut_nagata(struct PolyautMap **out);

/**
 * Coordinate test over `k[z]`, or over `k` when `over_k` is set.
 */
enum PolyautStatus polyaut_coord_test(const struct PolyautPoly *f,
                                      bool over_k,
                                      struct PolyautCoordReport *out);

/**
 * Whether `1` lies in the ideal generated by `gens[0..len]`.
 */
enum PolyautStatus polyaut_contains_one(const struct PolyautPoly *const *gens,
                                        size_t len,
                                        bool *out);

#endif  /* POLYAUT_H */
