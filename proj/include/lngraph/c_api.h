#ifndef LNGRAPH_C_API_H
#define LNGRAPH_C_API_H

/*
 * C interface to the lngraph library.
 *
 * All graph state lives behind the opaque ln_graph handle, created by
 * ln_graph_create and released by ln_graph_destroy. Functions return an
 * ln_status; on failure ln_last_error() carries a message for the
 * calling thread. Strings handed out through char** out-parameters are
 * owned by the caller and must be released with ln_string_free.
 *
 * Handles are immutable after creation and may be shared across threads
 * for concurrent reads.
 */

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct ln_graph ln_graph;

typedef enum ln_status {
  LN_OK = 0,
  LN_ERR_INVALID_ARGUMENT = 1, /* bad vertex, length/range violations */
  LN_ERR_UNSUPPORTED_ORDER = 2, /* n outside the operation's range */
  LN_ERR_VERIFY_FAILED = 3,     /* certificate rejected; report produced */
  LN_ERR_PARSE = 4,             /* malformed certificate text */
  LN_ERR_CLAIM_VIOLATED = 5,    /* a survey expectation did not hold */
  LN_ERR_INTERNAL = 6
} ln_status;

const char* ln_status_name(ln_status status);

/* Thread-local message for the most recent failure; empty on success. */
const char* ln_last_error(void);

void ln_string_free(char* s);

/* Builds L(n). order_cap <= 0 selects the default cap (50). */
ln_status ln_graph_create(int n, int order_cap, ln_graph** out);
void ln_graph_destroy(ln_graph* g);

int ln_graph_n(const ln_graph* g);
int ln_graph_order(const ln_graph* g);      /* n(n-1) */
long long ln_graph_size(const ln_graph* g); /* n(n-1)^2/2 */

/* Degree of (head,tail); -1 when the vertex is out of range. */
int ln_graph_degree(const ln_graph* g, int head, int tail);

/* 1 adjacent, 0 not, -1 when a vertex is out of range. */
int ln_graph_adjacent(const ln_graph* g, int head_a, int tail_a, int head_b,
                      int tail_b);

/* Serializes the graph; format is "edgelist" or "dot". */
ln_status ln_graph_export(const ln_graph* g, const char* format, char** out);

/* Serializes B(n) in the same formats. */
ln_status ln_bn_export(int n, int order_cap, const char* format, char** out);

/* JSON record of order, size, degree range, girth, diameter,
 * connectivity. */
ln_status ln_graph_metrics_json(const ln_graph* g, char** out);

/* An m-cycle through (head,tail) as certificate JSON; self-verified
 * before it is returned. Requires n >= 6 and 3 <= m <= n(n-1). */
ln_status ln_cycle_through(const ln_graph* g, int head, int tail, int m,
                           char** out_certificate);

/* A Hamiltonian path between two distinct vertices as certificate JSON;
 * self-verified. Requires n >= 4. */
ln_status ln_hamilton_path(const ln_graph* g, int from_head, int from_tail,
                           int to_head, int to_tail, char** out_certificate);

/* Parses certificate JSON just far enough to report which n it claims,
 * so callers can build the right graph to verify against. */
ln_status ln_certificate_order(const char* certificate, int* out_n);

/* Checks certificate JSON against g. LN_OK when valid; on
 * LN_ERR_VERIFY_FAILED *out_report (JSON) lists the violations. */
ln_status ln_verify_certificate(const ln_graph* g, const char* certificate,
                                char** out_report);

/* Runs a sweep; kind is "pancyclic", "hamilton", "negatives" or
 * "spectrum". sample_pairs > 0 samples that many vertex pairs for the
 * hamilton sweep (seed selects the sample; pass 0 for the default).
 * node_budget <= 0 selects the default search budget (1e8 expansions).
 * format is "text" or "json". LN_OK only when every expectation holds;
 * LN_ERR_CLAIM_VIOLATED still fills *out with the report. */
ln_status ln_survey(const ln_graph* g, const char* kind,
                    long long sample_pairs, unsigned long long seed,
                    long long node_budget, const char* format, char** out);

/* 1 when build_ln(n) matches the relabeled line graph of B(n), else 0. */
ln_status ln_cross_validate(int n, int* out_identical);

#ifdef __cplusplus
}
#endif

#endif /* LNGRAPH_C_API_H */
