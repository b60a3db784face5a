/*
 * corr13 — exact cross-correlation spectra of cubic-decimated m-sequences.
 *
 * C interface to the corr13 core. Objects are opaque handles created and
 * destroyed through this API; every computation returns a status code and
 * results are JSON documents (exact integers encoded as decimal strings).
 * Strings returned through `char**` outputs are heap-allocated and must be
 * released with c13_string_free().
 *
 * On any failure the thread-local message of c13_last_error() describes
 * the cause.
 */

#ifndef CORR13_H
#define CORR13_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum c13_status {
    C13_OK = 0,
    C13_ERR_NOT_PRIME = 1,
    C13_ERR_P_NOT_ONE_MOD_THREE = 2,
    C13_ERR_I_OUT_OF_RANGE = 3,
    C13_ERR_G_MOD_THREE_IS_TWO = 4,
    C13_ERR_FIELD_TOO_LARGE = 5,
    C13_ERR_LOG_OF_ZERO = 6,
    C13_ERR_GCD_NOT_ONE = 7,
    C13_ERR_ZERO_COEFFICIENT = 8,
    C13_ERR_NON_INTEGRAL = 9,
    C13_ERR_ORACLE_CEILING = 10,
    C13_ERR_BAD_ARGUMENT = 11,
    C13_ERR_INTERNAL = 12
} c13_status;

typedef struct c13_params c13_params;
typedef struct c13_field c13_field;

const char* c13_version(void);
const char* c13_status_name(c13_status status);

/* Message for the most recent failure on this thread; never NULL. */
const char* c13_last_error(void);

/*
 * Parameter validation. c13_params_create validates the full triple
 * (p, n, i), deriving d = (q-1)/3 + p^i and the admissibility case;
 * c13_field_params_create validates only (p, n) (p prime, p = 1 mod 3),
 * which is enough for the cyclotomy / period / quadratic-partition calls.
 */
c13_status c13_params_create(uint64_t p, uint32_t n, uint32_t i,
                             c13_params** out);
c13_status c13_field_params_create(uint64_t p, uint32_t n, c13_params** out);
void c13_params_destroy(c13_params* params);

uint64_t c13_params_q(const c13_params* params);
uint64_t c13_params_d(const c13_params* params);
uint64_t c13_params_g(const c13_params* params);
/* 1 or 0 for the admissibility case; -1 for field-only parameters. */
int32_t c13_params_case(const c13_params* params);

/* Builds the tabulated field. max_q = 0 selects the default ceiling. */
c13_status c13_field_build(const c13_params* params, uint64_t max_q,
                           c13_field** out);
void c13_field_destroy(c13_field* field);

uint64_t c13_field_q(const c13_field* field);
uint64_t c13_field_psi(const c13_field* field);
uint32_t c13_field_omega(const c13_field* field);

/* Options for c13_verify_json. Initialize with c13_verify_options_init. */
typedef struct c13_verify_options {
    uint32_t workers;            /* 0 = CORR13_WORKERS env or hardware */
    double tolerance;            /* 0 = default 1e-6 * p^(n/2) */
    uint64_t max_oracle_q;       /* 0 = default 10000 */
    int32_t run_cyclotomy;       /* booleans */
    int32_t run_periods;
    int32_t run_codes;
    int32_t run_partition_oracle;
    int32_t run_triple_sum;
    uint64_t triple_sum_samples; /* 0 = default 200 */
} c13_verify_options;

void c13_verify_options_init(c13_verify_options* options);

/*
 * JSON-producing computations. All of them set *out to a NUL-terminated
 * JSON document on success. Calls that involve the decimation exponent
 * require params created with c13_params_create.
 */

/* Quadratic partition u^2 + 3v^2 = 4p with the field's omega branch. */
c13_status c13_quad_partition_json(const c13_field* field, char** out);

/* Brute-force cross-correlation value distribution over all shifts. */
c13_status c13_distribution_json(const c13_field* field, uint32_t workers,
                                 char** out);

/* Closed-form 13-row prediction table for the distribution. */
c13_status c13_correlation_predictions_json(const c13_field* field, char** out);

/* Exact Gaussian periods plus the predicted cosine value sets. */
c13_status c13_periods_json(const c13_field* field, char** out);

/* Cyclotomic pair counts, brute and closed, plus diagonal-count samples. */
c13_status c13_cyclotomy_json(const c13_field* field, uint32_t samples,
                              char** out);

/* Brute-force code weight distribution and its prediction. */
c13_status c13_code_weights_json(const c13_field* field, uint32_t workers,
                                 char** out);

/* The m-sequence, its decimation, and the defining parameters.
 * max_terms = 0 emits the full period. */
c13_status c13_sequence_json(const c13_field* field, uint64_t max_terms,
                             char** out);

/* Full verification pipeline; the report carries a "verdict" field
 * ("Verified" or a mismatch kind). options = NULL uses the defaults. */
c13_status c13_verify_json(const c13_field* field,
                           const c13_verify_options* options, char** out);

/* CSV forms of the main tables. */
c13_status c13_distribution_csv(const c13_field* field, uint32_t workers,
                                char** out);
c13_status c13_correlation_predictions_csv(const c13_field* field, char** out);
c13_status c13_code_weights_csv(const c13_field* field, uint32_t workers,
                                char** out);

void c13_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* CORR13_H */
