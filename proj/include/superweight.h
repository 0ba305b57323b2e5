/* superweight C API: exact-arithmetic characters and weight multiplicities
 * for classical Lie superalgebras of type I and W(n).
 *
 * All functions return sw_status; SW_OK means success. String outputs are
 * heap-allocated JSON documents owned by the caller (free with
 * sw_string_free). On failure *out is untouched and *errmsg (when non-NULL)
 * receives a JSON object {"error": <machine code>, "message": <text>}.
 */
#ifndef SUPERWEIGHT_H
#define SUPERWEIGHT_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sw_status {
    SW_OK = 0,
    SW_ERR_USAGE = 1,      /* malformed input / validation failure */
    SW_ERR_DOMAIN = 2,     /* domain error (not-parabolic, provider-gap, ...) */
    SW_ERR_IO = 3,         /* file system problem */
    SW_ERR_INTERNAL = 4
} sw_status;

const char* sw_version(void);
const char* sw_status_name(sw_status s);
void sw_string_free(char* s);

/* ---- algebras ---------------------------------------------------------- */

typedef struct sw_algebra sw_algebra; /* opaque */

/* descriptor: {"kind": "gl"|"sl"|"psl"|"osp"|"p"|"sp"|"W", "m": int, "n": int} */
sw_status sw_algebra_create(const char* descriptor_json, sw_algebra** out,
                            char** errmsg);
void sw_algebra_free(sw_algebra* a);

/* {typical, atypical_witnesses, singular, partially_finite, gamma_injective,
 * normal_form_valid} for the weight string, relative to the standard basis
 * and the maximal even parabolic. */
sw_status sw_classify(const sw_algebra* a, const char* weight,
                      char** json_out, char** errmsg);

/* ---- bounded-module jobs ------------------------------------------------ */

typedef struct sw_jobspec sw_jobspec; /* opaque */

/* spec: {"algebra": {...}, "parabolic_l": [int...], "lambda_blocks": [[...]],
 *        "lambda_z": "<weight>", "sigma": "<weight>",
 *        "providers"?: {"b_g": "auto" | "table:<path>"},
 *        "w_omit_undefined_sum"?: bool} */
sw_status sw_jobspec_create(const char* spec_json, sw_jobspec** out,
                            char** errmsg);
void sw_jobspec_free(sw_jobspec* s);
sw_status sw_jobspec_set_cache_dir(sw_jobspec* s, const char* dir);

/* {"multiplicity": n, "terms": [{"mu": ..., "c": ..., "induced": ...}]} */
sw_status sw_char_multiplicity(const sw_jobspec* s, const char* weight,
                               char** json_out, char** errmsg);

/* c-coefficient table on the order ideal of the given depth. */
sw_status sw_coeffs(const sw_jobspec* s, int order_ideal_depth,
                    char** json_out, char** errmsg);

/* {"d_blocks": [...], "degree": n, "flagged_blocks": [...]} */
sw_status sw_degree(const sw_jobspec* s, char** json_out, char** errmsg);

/* ---- lab ---------------------------------------------------------------- */

/* suite in {theta-integer, lemma-phi, lemma-m1m2, series-psi, commut-h0,
 * kac-typicality, serganova-check, w2-check, mathieu-sup}.
 * Returns {"suite": ..., "cases": n, "failures": [...]}. */
sw_status sw_lab_run(const char* suite, int depth, uint64_t seed,
                     char** json_out, char** errmsg);

/* ---- multiplicity tables ------------------------------------------------ */

/* Validates a JSON-lines table file; returns a normalized copy of the data
 * as {"header": {...}, "entries": n}. */
sw_status sw_table_validate(const char* path, char** json_out, char** errmsg);

/* Exports built-in provider values for the jobspec's algebra on the order
 * ideal below lambda (kind "a" or "b") to a table file. */
sw_status sw_table_export(const sw_jobspec* s, const char* kind, int depth,
                          const char* path, char** errmsg);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* SUPERWEIGHT_H */
