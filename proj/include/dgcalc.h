/* dgcalc: exact differential graded (co)algebra computations behind a C API.
 *
 * All functions returning int use the error codes below.  Functions that can
 * fail accept a char** err; on failure it receives a malloc'd message the
 * caller releases with dgc_string_free (pass NULL to ignore).  Returned
 * strings are always released with dgc_string_free.  Handles are opaque and
 * single-owner; they are not thread-safe for concurrent mutation but may be
 * read from many threads. */
#ifndef DGCALC_H
#define DGCALC_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

enum {
    DGC_OK = 0,
    DGC_ERR_INPUT = 2,     /* malformed sources, bad parameters, capability gaps */
    DGC_ERR_INVARIANT = 3, /* an exact structural identity failed */
    DGC_ERR_WINDOW = 4     /* request outside a truncation-safe window */
};

typedef struct dgc_algebra dgc_algebra;

const char* dgc_version(void);
void dgc_string_free(char* s);

/* Sources: "preset:NAME", "simplicial:PATH", "simplicial:builtin:NAME",
 * "dga:PATH".  Presets: sphere(n), exterior(n), moore(p,n),
 * truncated_poly(n,h), wedge_of_spheres(...), tensor(a,b). */
dgc_algebra* dgc_algebra_load(const char* source, char** err);
dgc_algebra* dgc_algebra_from_json(const char* json_text, char** err);
void dgc_algebra_free(dgc_algebra* a);

/* Serialize to the interchange JSON (write-then-read is the identity). */
char* dgc_algebra_to_json(const dgc_algebra* a);

/* Exhaustive invariant suite (d^2, Leibniz, associativity, unit,
 * augmentation, cup-one identities when present). */
int dgc_algebra_check(const dgc_algebra* a, char** err);

/* Reduce an integral algebra mod p (eps = 1) or mod p^eps. */
dgc_algebra* dgc_algebra_reduce(const dgc_algebra* a, long p, int eps, char** err);

/* Betti table of the algebra's own cochain complex (field coefficients),
 * as the CSV text "degree,dimension". */
int dgc_space_betti_csv(const dgc_algebra* a, int max_degree, char** csv_out, char** err);

/* Full orchestrated run.  spec_json fields: source (required), prime,
 * ring_mode ("fp"|"z"|"zpe"), eps, max_degree, target
 * ("space"|"loop"|"freeloop"|"kraines"|"check"), format
 * ("text"|"csv"|"json"), cache_dir, variant, coset_search.
 * text_out receives the rendered report, report_json the structured one;
 * either may be NULL.  Returns the job's exit code. */
int dgc_run_job_json(const char* spec_json, char** text_out, char** report_json, char** err);

#ifdef __cplusplus
}
#endif

#endif /* DGCALC_H */
