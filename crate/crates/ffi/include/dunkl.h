#ifndef DUNKL_H
#define DUNKL_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum DunklStatus {
  DUNKL_STATUS_OK = 0,
  DUNKL_STATUS_NULL_POINTER = 1,
  DUNKL_STATUS_INVALID_UTF8 = 2,
  DUNKL_STATUS_PARSE = 3,
  DUNKL_STATUS_ROOT_SYSTEM = 4,
  DUNKL_STATUS_OPERATOR = 5,
  // A verification suite ran and found a nonzero defect.
  DUNKL_STATUS_CHECK_FAILED = 6,
  DUNKL_STATUS_PANIC = 7,
} DunklStatus;

typedef struct DunklContext DunklContext;

typedef struct DunklPolynomial DunklPolynomial;

typedef struct DunklRootSystem DunklRootSystem;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message for the most recent failure on this thread. The pointer stays
// valid until the next failing call on the same thread.
const char *dunkl_last_error_message(void);

void dunkl_string_free(char *s);

// Catalog system by name: `A1dim1`, `A3`, `B2`, `C4`, `D4`, ...
enum DunklStatus dunkl_root_system_from_name(const char *name, struct DunklRootSystem **out);

// System from `{"dim": N, "roots": [["1","0"], ...]}`.
enum DunklStatus dunkl_root_system_from_json(const char *json, struct DunklRootSystem **out);

void dunkl_root_system_free(struct DunklRootSystem *system);

enum DunklStatus dunkl_root_system_dim(const struct DunklRootSystem *system, size_t *out);

enum DunklStatus dunkl_root_system_root_count(const struct DunklRootSystem *system, size_t *out);

enum DunklStatus dunkl_root_system_orbit_count(const struct DunklRootSystem *system, size_t *out);

// Order of the reflection group; fails if it exceeds `max_order`.
enum DunklStatus dunkl_root_system_group_order(const struct DunklRootSystem *system,
                                               size_t max_order,
                                               size_t *out);

enum DunklStatus dunkl_polynomial_parse(const char *source,
                                        size_t dim,
                                        struct DunklPolynomial **out);

void dunkl_polynomial_free(struct DunklPolynomial *p);

// Canonical text form; release with [`dunkl_string_free`].
enum DunklStatus dunkl_polynomial_to_string(const struct DunklPolynomial *p, char **out);

// `{"dim": N, "terms": [{"exp": [...], "re": "...", "im": "..."}]}`.
enum DunklStatus dunkl_polynomial_to_json(const struct DunklPolynomial *p, char **out);

enum DunklStatus dunkl_polynomial_is_zero(const struct DunklPolynomial *p, bool *out);

// Builds an operator context. `kappa` uses the command-line syntax, e.g.
// `"short=1/2,long=2+i"` or `"all=1"`.
enum DunklStatus dunkl_context_new(const struct DunklRootSystem *system,
                                   const char *kappa,
                                   struct DunklContext **out);

void dunkl_context_free(struct DunklContext *ctx);

// Coordinate operator for 0-based index `j`.
enum DunklStatus dunkl_apply_coordinate(const struct DunklContext *ctx,
                                        const struct DunklPolynomial *p,
                                        size_t j,
                                        struct DunklPolynomial **out);

// Directional operator; `direction` is comma-separated, e.g. `"1,i"`.
enum DunklStatus dunkl_apply_direction(const struct DunklContext *ctx,
                                       const struct DunklPolynomial *p,
                                       const char *direction,
                                       struct DunklPolynomial **out);

enum DunklStatus dunkl_apply_laplacian(const struct DunklContext *ctx,
                                       const struct DunklPolynomial *p,
                                       struct DunklPolynomial **out);

// Difference quotient `(p(z) - p(z s_v)) / <z, v>` for a real root `v`.
enum DunklStatus dunkl_rho(const struct DunklPolynomial *p,
                           const char *root,
                           struct DunklPolynomial **out);

// `D_t D_u p - D_u D_t p`, which is always the zero polynomial.
enum DunklStatus dunkl_commutator(const struct DunklContext *ctx,
                                  const struct DunklPolynomial *p,
                                  const char *t,
                                  const char *u,
                                  struct DunklPolynomial **out);

// Runs a seeded suite (`commutativity`, `equivariance`, `lemma32`, `eq44`,
// `laplacian-formula`) and writes the JSON report to `report`. Returns
// `DUNKL_STATUS_CHECK_FAILED` with the report still written when a check
// fails.
enum DunklStatus dunkl_verify(const struct DunklRootSystem *system,
                              const char *suite,
                              uint64_t seed,
                              size_t trials,
                              char **report);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* DUNKL_H */
