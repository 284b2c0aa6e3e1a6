#ifndef NARAYANA_H
#define NARAYANA_H

/* C interface to the exact polynomial toolkit. All arithmetic is exact;
 * rationals cross this boundary as canonical strings ("p" or "p/q").
 * Every function that can fail returns a nara_status; on failure
 * nara_last_error() describes the problem for the calling thread. */

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum nara_status {
  NARA_OK = 0,
  NARA_EINVAL = 1,   /* malformed input: bad string, unknown name, null arg */
  NARA_EDOMAIN = 2,  /* structurally valid but out of the defined domain */
  NARA_ECAP = 3,     /* refinement budget exhausted before a decision */
  NARA_ENOMEM = 4,
  NARA_EINTERNAL = 5
} nara_status;

/* Opaque dense univariate polynomial over the rationals. */
typedef struct nara_poly nara_poly;

const char* nara_version(void);

/* Message for the most recent failure on this thread; never NULL. */
const char* nara_last_error(void);

/* Frees strings returned through char** out-parameters. */
void nara_string_free(char* s);

/* coeffs[k] is the coefficient of x^k as a rational string. */
nara_status nara_poly_from_coeffs(const char* const* coeffs, size_t count,
                                  nara_poly** out);

/* Family member constructor. family is one of A, B, D, rect, overline,
 * underline, F, bm, Q. Unused index parameters are ignored; alpha and beta
 * may be NULL (defaults 1 and 0) and only apply to family F. */
nara_status nara_family(const char* family, long n, long m, long t,
                        const char* alpha, const char* beta, nara_poly** out);

void nara_poly_free(nara_poly* p);

/* Degree, -1 for the zero polynomial. */
long nara_poly_degree(const nara_poly* p);

nara_status nara_poly_coeff(const nara_poly* p, long k, char** out);
nara_status nara_poly_to_string(const nara_poly* p, char** out);
nara_status nara_poly_eval(const nara_poly* p, const char* x, char** out);

nara_status nara_poly_add(const nara_poly* a, const nara_poly* b,
                          nara_poly** out);
nara_status nara_poly_sub(const nara_poly* a, const nara_poly* b,
                          nara_poly** out);
nara_status nara_poly_mul(const nara_poly* a, const nara_poly* b,
                          nara_poly** out);
nara_status nara_poly_derivative(const nara_poly* p, nara_poly** out);

/* *out = 1 when every complex zero of p is real, else 0. */
nara_status nara_is_real_rooted(const nara_poly* p, int* out);

/* Distinct real zeros of p over the whole line. */
nara_status nara_count_real_roots(const nara_poly* p, int* out);

/* Sign changes in the coefficient sequence (Descartes bound input). */
nara_status nara_sign_changes(const nara_poly* p, int* out);

/* JSON array of isolated real zeros, each either
 * {"type":"point","value":V,"multiplicity":M} or
 * {"type":"interval","lo":L,"hi":H,"multiplicity":M}. */
nara_status nara_isolate_roots(const nara_poly* p, char** json_out);

/* relation_out receives one of StrictlyInterlaces, Interlaces,
 * DoesNotInterlace, NotBothRealRooted (the zeros of g against those of f).
 * witness_out may be NULL; when given it receives the failing position or
 * the empty string. */
nara_status nara_interlaces(const nara_poly* g, const nara_poly* f,
                            char** relation_out, char** witness_out);

/* Applies the square-minus-neighbor-product operator up to `folds` times.
 * max_ok_fold receives the number of folds that stayed nonnegative. When a
 * negative entry appears, fail_fold/fail_index receive its position;
 * otherwise both are set to -1. Rejects polynomials with a negative
 * coefficient. */
nara_status nara_log_concave_folds(const nara_poly* p, int folds,
                                   int* max_ok_fold, int* fail_fold,
                                   int* fail_index);

/* Verifies one of the three-term identities exactly. identity is "f"
 * (t ignored, n >= 2, symbolic weights), "overline" or "underline"
 * (t >= 0, n >= 1). *verified is 1 when the residual is identically zero. */
nara_status nara_check_recurrence(const char* identity, long t, long n,
                                  int* verified);

/* Runs a full command from a JSON config (the same shape the CLI emits under
 * "config" in its reports). output receives the formatted report; exit_code
 * receives 0 when every required record is ok, 1 otherwise. */
nara_status nara_run_command(const char* config_json, char** output,
                             int* exit_code);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* NARAYANA_H */
