/*
 * elliptope - exactness certificates for the Max-Cut semidefinite relaxation.
 *
 * C API over the shared library: opaque handles, integer status codes,
 * JSON documents for structured results. All returned strings are owned by
 * the caller and released with ell_free_text(); graphs with ell_graph_free().
 * Rational values appear in JSON as strings "p/q" in lowest terms.
 */
#ifndef ELLIPTOPE_H
#define ELLIPTOPE_H

#ifdef __cplusplus
extern "C" {
#endif

typedef struct ell_graph ell_graph;

/* 0 = ok; nonzero codes name specific failures (ell_status_name). */
typedef int ell_status;

const char* ell_status_name(ell_status s);

/* Message for the most recent failure on this thread. */
const char* ell_last_error(void);

const char* ell_version(void);

void ell_free_text(char* text);

/* ---- graphs and the edge-list format ---------------------------------- */

ell_status ell_graph_read_file(const char* path, ell_graph** out);
ell_status ell_graph_from_text(const char* text, ell_graph** out);
ell_status ell_graph_write_file(const ell_graph* g, const char* path);
ell_status ell_graph_to_text(const ell_graph* g, char** out_text);
int ell_graph_order(const ell_graph* g);
int ell_graph_edge_count(const ell_graph* g);
void ell_graph_free(ell_graph* g);

/* ---- generators -------------------------------------------------------- */

ell_status ell_gen_cycle(int n, ell_graph** out);
ell_status ell_gen_path(int n, ell_graph** out);
ell_status ell_gen_complete(int n, ell_graph** out);
ell_status ell_gen_edgeless(int n, ell_graph** out);
ell_status ell_gen_kpartite(const int* parts, int k, ell_graph** out);
/* masses as rational literals "p/q" */
ell_status ell_gen_wcomplete(const char* const* masses, int n, ell_graph** out);
ell_status ell_gen_join(const ell_graph* a, const ell_graph* b, ell_graph** out);
ell_status ell_gen_lex(const ell_graph* a, const ell_graph* b, ell_graph** out);
ell_status ell_gen_split(const ell_graph* g, const int* multiplicities, int n,
                         ell_graph** out);

/* ---- analyses ----------------------------------------------------------
 * Structured results are JSON documents. Calls taking `semantic_negative`
 * set it to 1 when the outcome is a well-formed negative verdict
 * (NotExact, GapAtLeast, Rejected, recognizer decline, failing suite). */

ell_status ell_maxcut_json(const ell_graph* g, int all_cuts, char** out_json);

ell_status ell_phi_json(const ell_graph* g, double tol, char** out_json);

ell_status ell_exactness_json(const ell_graph* g, double tol, char** out_json,
                              int* semantic_negative);

/* method: join-balanced | join-unbalanced | nondominating | lex | split-lift.
 * witness_json may be NULL when the method can infer its inputs. */
ell_status ell_certify_json(const ell_graph* g, const char* method,
                            const char* witness_json, int dump, char** out_json);

ell_status ell_recognize_json(const ell_graph* g, char** out_json,
                              int* semantic_negative);

ell_status ell_kpartite_json(const long long* parts, int k, char** out_json,
                             int* semantic_negative);

ell_status ell_hardness(const long long* parts, int k, ell_graph** out);

ell_status ell_verify_decomp_json(const ell_graph* g, const char* witness_json,
                                  char** out_json, int* semantic_negative);

ell_status ell_counterexample_json(int which, char** out_json);

/* name: phi-properties | certificates | counterexamples | recognizers */
ell_status ell_suite_json(const char* name, const char* corpus_dir, char** out_json,
                          int* semantic_negative);

#ifdef __cplusplus
}
#endif

#endif /* ELLIPTOPE_H */
