/* C API for the cospec library: exact construction and certification of
 * cospectral graphs via coalescing and block-diagonal similarity matrices.
 *
 * Conventions:
 *   - All functions returning cospec_status report COSPEC_OK (0) on success;
 *     on failure cospec_last_error() carries a thread-local message.
 *   - Strings returned through char** out parameters are heap-allocated and
 *     must be released with cospec_string_free().
 *   - Structured results are JSON documents (schema field "schema": 1).
 *   - Vertex sets and partitions use the 1-based text syntax of the CLI:
 *     classes separated by ';', vertices within a class by ','
 *     (e.g. "1;2;3;4,5,6,7").
 *   - Matrix kinds: "adj", "dist", "lap", "siglap", "qlap:Q",
 *     "gendist:v0,v1,..." or the sugared families "gendist:identity",
 *     "gendist:square", "gendist:exp:Q", "gendist:indicator:t1,t2,...".
 */
#ifndef COSPEC_H
#define COSPEC_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
    COSPEC_OK = 0,
    COSPEC_ERR_NULL_POINTER = 1,
    COSPEC_ERR_PARSE = 2,         /* malformed graph6 / partition / kind text */
    COSPEC_ERR_INVALID = 3,       /* precondition violated (partition, shape, ...) */
    COSPEC_ERR_NOT_CONNECTED = 4, /* distance kind on a disconnected graph */
    COSPEC_ERR_UNSUPPORTED = 5,   /* e.g. enumeration size out of range */
    COSPEC_ERR_IO = 6,
    COSPEC_ERR_INTERNAL = 7
} cospec_status;

typedef struct cospec_graph cospec_graph;

const char* cospec_version(void);

/* Thread-local message describing the most recent failure. */
const char* cospec_last_error(void);

void cospec_string_free(char* s);

/* ---- graphs and the graph6 codec ---- */

cospec_status cospec_graph_decode(const char* g6, int strict, cospec_graph** out);
cospec_status cospec_graph_from_edges(int n, const int* endpoints, size_t edge_count,
                                      cospec_graph** out);
cospec_status cospec_graph_encode(const cospec_graph* g, char** out_g6);
void cospec_graph_free(cospec_graph* g);

/* Return -1 on null input. */
int cospec_graph_order(const cospec_graph* g);
int cospec_graph_size(const cospec_graph* g);

/* JSON: {n, edges:[[u,v],...], connected, degree_sequence} (0-based). */
cospec_status cospec_graph_describe(const cospec_graph* g, char** out_json);

/* ---- matrices and spectra ---- */

/* JSON: {n, kind, entries:[["0","1",...],...]} with exact rational strings. */
cospec_status cospec_matrix_json(const cospec_graph* g, const char* kind, char** out_json);

/* JSON: {kind, coefficients:[c0,...,cn]} ascending, exact rational strings. */
cospec_status cospec_charpoly_json(const cospec_graph* g, const char* kind, char** out_json);

/* out_equal: 1 when the charpolys agree exactly, else 0. */
cospec_status cospec_cospectral_json(const cospec_graph* g1, const cospec_graph* g2,
                                     const char* kind, int* out_equal, char** out_json);

/* ---- coalescing ---- */

/* attachments: comma-separated "g6:root" with 1-based roots, one per class
 * (e.g. "Bw:1,@:1,Bw:3"). JSON carries the coalesced graph6 and the
 * (i:j:k) labeling. */
cospec_status cospec_coalesce_json(const char* base_g6, const char* partition,
                                   const char* attachments, char** out_json);

/* ---- block similarity ---- */

cospec_status cospec_find_similarity_json(const char* g1_g6, const char* g2_g6,
                                          const char* partition, const char* kind,
                                          int require_sjjs, int simultaneous,
                                          unsigned long long seed, int trials,
                                          long long coeff_bound, int* out_found,
                                          char** out_json);

/* blocks_json: [[["1","0"],["0","1"]], ...], exact rational strings, one
 * square block per partition class. out_ok: 1 when the certificate verifies. */
cospec_status cospec_check_similarity_json(const char* g1_g6, const char* g2_g6,
                                           const char* partition, const char* kind,
                                           int require_sjjs, int simultaneous,
                                           const char* blocks_json, int* out_ok,
                                           char** out_json);

/* which: 1 (L^q, any attachments), 2 (distance + SJ=JS), 3 (generalized
 * distance via simultaneous witness). Finds a base witness, extends it and
 * re-verifies on `random_trials` random attachment tuples. */
cospec_status cospec_verify_theorem_json(int which, const char* g1_g6, const char* g2_g6,
                                         const char* partition, const char* kind,
                                         int random_trials, unsigned long long seed,
                                         int* out_ok, char** out_json);

/* ---- structural checks ---- */

/* v1/v2: comma-separated 1-based vertex lists forming a two-class split. */
cospec_status cospec_butler_json(const char* g1_g6, const char* g2_g6, const char* v1,
                                 const char* v2, int* out_holds, char** out_json);

/* ---- census mining ---- */

/* path: graph6 file, or "-" for stdin. */
cospec_status cospec_mine_file_json(const char* path, const char* kind, int classify,
                                    int workers, unsigned long long seed, int trials,
                                    long long coeff_bound, int lenient, char** out_json);

/* Labeled enumeration census for n <= 8 (self-contained, no input file). */
cospec_status cospec_mine_enumerate_json(int n, const char* kind, int classify, int workers,
                                         unsigned long long seed, int trials,
                                         long long coeff_bound, char** out_json);

/* ---- bundled reproduction scenarios ---- */

/* scenario: fig1..fig8, census7, census9. out_pass: 1 when all checks pass. */
cospec_status cospec_reproduce_json(const char* scenario, unsigned long long seed, int workers,
                                    const char* nine_vertex_file, int* out_pass,
                                    char** out_json);

/* Newline-separated list of scenario names. */
cospec_status cospec_reproduce_names(char** out_names);

#ifdef __cplusplus
}
#endif

#endif /* COSPEC_H */
