/* gradedpi — exact computation of graded polynomial-identity invariants
 * (partial/graded codimensions, colengths, multiplicity tables, exponent
 * estimates) of finite-dimensional graded algebras given by structure
 * constants, plus verification of the associated combinatorial bounds.
 *
 * C API: opaque handles + status codes. All returned strings are owned by
 * the caller and must be released with gp_string_free. Machine-readable
 * output is JSON with exact integers encoded as strings; two runs with the
 * same configuration and seed produce byte-identical JSON.
 */
#ifndef GRADEDPI_H
#define GRADEDPI_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct gp_algebra gp_algebra;

typedef enum gp_status {
  GP_OK = 0,
  GP_ERR_ARGUMENT = 1,        /* bad parameter / precondition violation */
  GP_ERR_PARSE = 2,           /* malformed algebra file (message has line info) */
  GP_ERR_VALIDATION = 3,      /* grading rule violated (message lists triples) */
  GP_ERR_UNKNOWN_BUILTIN = 4,
  GP_ERR_CAP = 5,             /* resource cap exceeded (message names the cap) */
  GP_ERR_IO = 6,
  GP_ERR_INTERNAL = 7         /* internal cross-check failed */
} gp_status;

typedef struct gp_config {
  int n_max;                  /* default 4 */
  int associative;            /* 0: all bracketings, 1: left-normed only */
  long max_monomials;         /* per-degree-vector row cap */
  long max_columns;           /* evaluation matrix column cap */
  int cap_n_nonassoc;         /* hard degree caps (defaults 6 / 8) */
  int cap_n_assoc;
  int trials;                 /* randomized simplicity trials per component */
  int coord_bound;            /* random coordinates drawn from [-B, B] */
  unsigned long long seed;
  int precision_bits;         /* log-space comparison precision, default 256 */
  int workers;                /* 0 = all cores */
  int tail_n_min;             /* exponent-estimate window start */
  int ratio_n_min;              /* ratio-bound reporting threshold */
  int generic_n_max;          /* degree cap for generic-span checks */
} gp_config;

/* Fills every field with its documented default. */
void gp_config_defaults(gp_config* cfg);

const char* gp_status_name(gp_status s);
/* Message for the most recent failure on this thread; valid until the next
 * API call on the same thread. */
const char* gp_last_error(void);

gp_status gp_algebra_builtin(const char* name, gp_algebra** out);
gp_status gp_algebra_from_file(const char* path, gp_algebra** out);
gp_status gp_algebra_from_text(const char* text, gp_algebra** out);
void gp_algebra_free(gp_algebra* a);

int gp_algebra_dim(const gp_algebra* a);
int gp_algebra_support_size(const gp_algebra* a);
/* Canonical algebra-definition text; round-trips exactly. */
gp_status gp_algebra_export_text(const gp_algebra* a, char** out);

/* Codimension sequence report (rows n, c_n^gr, root, per-dv breakdown). */
gp_status gp_codim_json(const gp_algebra* a, const gp_config* cfg, char** json_out);
/* Codimension + colength report (adds l_n^gr and the polynomial bound). */
gp_status gp_colength_json(const gp_algebra* a, const gp_config* cfg, char** json_out);
/* Full verification suite; *hard_fail is set to 1 when a hard check failed,
 * *truncated to 1 when a resource cap cut the run short. */
gp_status gp_verify_json(const gp_algebra* a, const gp_config* cfg, char** json_out, int* hard_fail,
                         int* truncated);
/* Full invariant report including the exponent-existence applicability
 * classification (uses the seeded randomized simplicity checks). */
gp_status gp_report_json(const gp_algebra* a, const gp_config* cfg, char** json_out);

/* Newline-separated "name: description" catalog of builtin algebras. */
gp_status gp_builtin_catalog(char** out);

void gp_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* GRADEDPI_H */
