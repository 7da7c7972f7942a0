/* Exact Fox-calculus toolkit: C interface.
 *
 * All entry points return an fxc_status; results travel through out
 * parameters.  A context carries the last error message; objects are opaque
 * handles released with their matching _free function.  Strings returned
 * through char** are heap-allocated and released with fxc_string_free.
 * Handles are not thread-safe individually; distinct handles may be used
 * from distinct threads freely.
 */
#ifndef FOXCALC_H
#define FOXCALC_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum fxc_status {
  FXC_OK = 0,
  FXC_ERROR_INVALID_ARGUMENT = 1,  /* bad rank, index, modulus, ...        */
  FXC_ERROR_PARSE = 2,             /* malformed word or group text         */
  FXC_ERROR_NOT_FOUND = 3,         /* unknown catalog name                 */
  FXC_ERROR_DOMAIN = 4,            /* precondition violated (kernel, ...)  */
  FXC_ERROR_INTERNAL = 5           /* invariant failure inside the library */
} fxc_status;

typedef struct fxc_context fxc_context;
typedef struct fxc_word fxc_word;
typedef struct fxc_group fxc_group;

fxc_context* fxc_context_new(void);
void fxc_context_free(fxc_context* ctx);
/* message of the most recent failure on this context; empty string if none */
const char* fxc_context_last_error(const fxc_context* ctx);

void fxc_string_free(char* s);

/* ---- words ------------------------------------------------------------ */
/* Grammar: atoms "e", "x<i>", "(expr)", "[u,v]" (= u^-1 v^-1 u v); optional
 * "^<int>" on atoms; "*" between factors.  Rendering uses "x1^2*x2^-1"
 * syntax with the identity printed "e". */
fxc_status fxc_word_parse(fxc_context* ctx, int rank, const char* text,
                          fxc_word** out);
fxc_status fxc_word_render(fxc_context* ctx, const fxc_word* w, char** out);
fxc_status fxc_word_multiply(fxc_context* ctx, const fxc_word* a,
                             const fxc_word* b, fxc_word** out);
fxc_status fxc_word_invert(fxc_context* ctx, const fxc_word* a, fxc_word** out);
void fxc_word_free(fxc_word* w);

/* ---- finite groups ---------------------------------------------------- */
fxc_status fxc_group_builtin(fxc_context* ctx, const char* name,
                             fxc_group** out);
/* "order N" header, N rows of N indices, optional "name S" / "pgroup P" */
fxc_status fxc_group_load(fxc_context* ctx, const char* text, fxc_group** out);
fxc_status fxc_group_save(fxc_context* ctx, const fxc_group* g, char** out);
fxc_status fxc_group_order(fxc_context* ctx, const fxc_group* g, int* out);
void fxc_group_free(fxc_group* g);

/* ---- reports ----------------------------------------------------------
 * Each computes one task end to end and returns a printable report. */

/* canonical rendering of the Fox derivative D_k(word) */
fxc_status fxc_derive(fxc_context* ctx, int rank, int k, const char* word,
                      char** out);

/* built-in group names, orders, p-group tags; one line per group */
fxc_status fxc_catalog_list(fxc_context* ctx, char** out);

/* transversal and free Schreier generators of ker(images) */
fxc_status fxc_schreier(fxc_context* ctx, int rank, const fxc_group* g,
                        const int* images, char** out);

/* both sides of the derivative-vanishing membership equivalence; the
 * report line reads "criterion=IN|OUT member=IN|OUT verdict=AGREE|DISAGREE".
 * K is a strictly ascending list of n_k generator indices. */
fxc_status fxc_theorem2(fxc_context* ctx, int rank, const fxc_group* g,
                        const int* images, int d, const int* K, int n_k,
                        const char* word, char** out, int* disagree);

/* exhaustive equivalence sweep over homs x K-subsets x words */
fxc_status fxc_theorem2_sweep(fxc_context* ctx, int rank, const fxc_group* g,
                              int d, int maxlen, char** out,
                              long long* disagree);

/* one-relator nonvanishing certificate; kind: 0 = ZeroIdentity,
 * 1 = NonzeroWitness, 2 = Unknown */
fxc_status fxc_freiheit(fxc_context* ctx, int rank, int n, const char* word,
                        int catalog_limit, char** out, int* kind);

/* relator sweep with n = rank; unknowns counts catalog exhaustion */
fxc_status fxc_freiheit_sweep(fxc_context* ctx, int rank, int maxlen,
                              int catalog_limit, char** out,
                              long long* unknowns);

/* finite-level examination of x1^p [x2, x1^p]; ok = 1 when the derivative
 * formula holds and no per-hom assertion failed */
fxc_status fxc_gildenhuys(fxc_context* ctx, int p, int catalog_limit,
                          char** out, int* ok);

#ifdef __cplusplus
}
#endif

#endif /* FOXCALC_H */
