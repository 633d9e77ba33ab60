/* C interface to the chromatic-symmetric-function toolkit. Graphs are opaque
 * handles; every computing call returns a status code and, on success, a
 * heap-allocated string the caller releases with csf_string_free. On failure
 * csf_last_error() describes the problem for the calling thread. */
#ifndef CSF_C_H
#define CSF_C_H

#ifdef __cplusplus
extern "C" {
#endif

typedef struct csf_graph csf_graph;

typedef enum {
    CSF_OK = 0,
    CSF_ERR_INVALID = 1,  /* bad arguments or parse failure */
    CSF_ERR_BOUND = 2,    /* a configured size bound was exceeded */
    CSF_ERR_INTERNAL = 3, /* internal invariant violated */
} csf_status;

const char* csf_version(void);
const char* csf_last_error(void);
void csf_string_free(char* s);

/* ---- graph construction ------------------------------------------------ */
csf_graph* csf_graph_path(int n);
csf_graph* csf_graph_star(int n);
csf_graph* csf_graph_complete(int n);
csf_graph* csf_graph_spider(const int* legs, int leg_count);
csf_graph* csf_graph_windmill(int d, int n);
csf_graph* csf_graph_from_edge_list(const char* text); /* "n" line then "u v" lines */
csf_graph* csf_graph_from_graph6(const char* text);
csf_graph* csf_graph_from_tree_code(const char* levels); /* "0,1,2,1" */
void csf_graph_free(csf_graph* g);

int csf_graph_n(const csf_graph* g);
int csf_graph_edges(const csf_graph* g);

/* ---- computations ------------------------------------------------------ */

/* Chromatic symmetric function rendered in the requested basis ('p', 'm',
 * 'e' or 's'). format: 0 = one term per line, 1 = JSON object. max_edges <= 0
 * selects the default subset-route bound (26); workers <= 0 selects
 * CSF_WORKERS or hardware concurrency. */
csf_status csf_graph_csf(const csf_graph* g, char basis, int format, int max_edges,
                         int workers, char** out);

/* Positivity report as JSON. e_verdict: 1 e-positive, 0 not e-positive,
 * 2 undecided within the configured bounds. */
csf_status csf_graph_positivity(const csf_graph* g, int max_edges, int workers,
                                char** out_json, int* e_verdict);

/* Runs the spider non-e-positivity decision chain for the given leg lengths.
 * When the spider has at most verify_max_n vertices the produced witness is
 * independently confirmed by the connected-partition search. */
csf_status csf_spider_analyze(const int* legs, int leg_count, int verify_max_n,
                              char** out_json);

/* Conjecture scans over free trees. conjecture_id: "degree4-e" or
 * "halfdegree-schur". scan_status: 0 VERIFIED, 1 COUNTEREXAMPLE, 2 PARTIAL.
 * jsonl_path (optional) receives one JSON line per examined tree; cache_path
 * (optional) points at an expansion cache file, falling back to CSF_CACHE. */
csf_status csf_scan(const char* conjecture_id, int n_max, int workers, int exhaustive,
                    int override_budget, const char* cache_path, const char* jsonl_path,
                    char** out_json, int* scan_status);

/* Recomputes the toolkit's worked examples; one PASS/FAIL line per check.
 * Returns CSF_OK even when checks fail; *n_failed reports how many. */
csf_status csf_verify_paper(int workers, char** out_text, int* n_failed);

/* Free trees on n vertices, one per line. format: 0 = level-sequence codes,
 * 1 = edge lists (blank-line separated), 2 = graph6. min_max_degree > 0 keeps
 * trees whose maximum degree reaches it; exists_degree > 0 keeps trees with a
 * vertex of exactly that degree. bound <= 0 selects the default (19). */
csf_status csf_trees(int n, int min_max_degree, int exists_degree, int format, int bound,
                     char** out);

#ifdef __cplusplus
}
#endif

#endif /* CSF_C_H */
