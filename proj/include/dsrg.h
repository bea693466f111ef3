/*
 * dsrg: construction and verification toolkit for directed strongly regular
 * graphs built around the pi-join of a (D)SRG over a good partition.
 *
 * All functions return DSRG_OK on success. On failure they return an error
 * code and leave a message retrievable through dsrg_last_error() (the message
 * is thread-local). Handles are opaque; every *_free function accepts NULL.
 *
 * Vertex numbering is 1-based in every textual format and in reported
 * witnesses.
 */
#ifndef DSRG_H
#define DSRG_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum dsrg_status {
    DSRG_OK = 0,
    DSRG_ERR_INVALID = 1, /* malformed input, bad argument, violated precondition */
    DSRG_ERR_INTERNAL = 2
} dsrg_status;

const char* dsrg_last_error(void);
const char* dsrg_version(void);

void dsrg_string_free(char* s);

/* ------------------------------------------------------------------ graphs */

typedef struct dsrg_graph dsrg_graph;

/* Matrix file format: '#' comment lines, a line with the order n, then n
 * rows of n characters from {0,1}. */
dsrg_status dsrg_graph_from_text(const char* text, dsrg_graph** out);
dsrg_status dsrg_graph_to_text(const dsrg_graph* g, char** out);
void dsrg_graph_free(dsrg_graph* g);
int64_t dsrg_graph_order(const dsrg_graph* g);
dsrg_status dsrg_graph_transpose(const dsrg_graph* g, dsrg_graph** out);
dsrg_status dsrg_graph_complement(const dsrg_graph* g, dsrg_graph** out);

/* -------------------------------------------------------- classification */

enum {
    DSRG_KIND_DSRG = 0,
    DSRG_KIND_SRG = 1,
    DSRG_KIND_COMPLETE = 2,
    DSRG_KIND_NOT_STRONGLY_REGULAR = 3
};

typedef struct dsrg_classification {
    int kind;
    int64_t n, k, t, lambda, mu; /* mu meaningless for complete graphs */
    int64_t witness_u, witness_v; /* 1-based; 0 when there is no witness */
    char witness[160];
} dsrg_classification;

dsrg_status dsrg_classify(const dsrg_graph* g, dsrg_classification* out);

/* -------------------------------------------------- parameter arithmetic */

typedef struct dsrg_params {
    int64_t n, k, t, lambda, mu;
} dsrg_params;

#define DSRG_MAX_CONDITIONS 12

typedef struct dsrg_feasibility {
    int feasible;
    int has_d, has_s;
    int64_t d, s;
    int condition_count;
    char condition_name[DSRG_MAX_CONDITIONS][96];
    int condition_ok[DSRG_MAX_CONDITIONS];
} dsrg_feasibility;

dsrg_status dsrg_feasibility_check(const dsrg_params* p, dsrg_feasibility* out);

typedef struct dsrg_spectrum {
    int64_t theta0, theta1, theta2;
    int64_t m0, m1, m2;
} dsrg_spectrum;

dsrg_status dsrg_spectrum_of(const dsrg_params* p, dsrg_spectrum* out);
dsrg_status dsrg_complement_params(const dsrg_params* p, dsrg_params* out);
dsrg_status dsrg_pi_join_params(const dsrg_params* p, int64_t a, int64_t b, int64_t j,
                                dsrg_params* out);

/* -------------------------------------------------- admissibility (eq1) */

typedef struct dsrg_join_shape {
    int64_t a, b;
    int64_t diag, offdiag; /* required quotient entries */
} dsrg_join_shape;

/* Writes up to `cap` admissible shapes sorted by a; *count receives the
 * total number found. apply_eq2 = 0 keeps solutions that violate
 * lambda + b - k >= 0. */
dsrg_status dsrg_solve_eq1(const dsrg_params* p, int apply_eq2, dsrg_join_shape* out,
                           size_t cap, size_t* count);

/* ---------------------------------------------------------- partitions */

typedef struct dsrg_partition dsrg_partition;

/* One line of n whitespace-separated 1-based cell labels. */
dsrg_status dsrg_partition_from_text(const char* text, dsrg_partition** out);
dsrg_status dsrg_partition_to_text(const dsrg_partition* p, char** out);
void dsrg_partition_free(dsrg_partition* p);
int64_t dsrg_partition_cell_count(const dsrg_partition* p);
int64_t dsrg_partition_cell_size(const dsrg_partition* p);
void dsrg_partition_list_free(dsrg_partition** list, size_t count);

/* *equitable is set to 1 and q (row-major, a*a entries, cap >= a*a) filled
 * when the partition is column equitable; otherwise *equitable = 0 and the
 * 1-based witness vertex/cell identify the first violation. */
dsrg_status dsrg_measure_quotient(const dsrg_graph* g, const dsrg_partition* p,
                                  int* equitable, int64_t* q, size_t cap,
                                  int64_t* witness_vertex, int64_t* witness_cell);

dsrg_status dsrg_is_good_partition(const dsrg_graph* g, const dsrg_partition* p,
                                   int* good);

dsrg_status dsrg_build_pi_join(const dsrg_graph* g, const dsrg_partition* p, int64_t j,
                               dsrg_graph** out);

/* ------------------------------------------------------------- search */

/* Finds up to `limit` good partitions for the shape (a,b); (a,b) must be
 * admissible for the classified parameters. *exhausted reports whether the
 * search space was fully traversed. timeout_s <= 0 means no deadline. */
dsrg_status dsrg_find_good_partitions(const dsrg_graph* g, int64_t a, int64_t b,
                                      size_t limit, int jobs, double timeout_s,
                                      dsrg_partition*** out, size_t* count,
                                      int* exhausted);

/* --------------------------------------------- isomorphism, equivalence */

enum {
    DSRG_ISO_FOUND = 1,
    DSRG_ISO_ABSENT = 0,
    DSRG_ISO_UNDECIDED = -1
};

/* mapping may be NULL; otherwise it must hold order(g1) entries and receives
 * the 1-based vertex bijection when the result is DSRG_ISO_FOUND. */
dsrg_status dsrg_isomorphic(const dsrg_graph* g1, const dsrg_graph* g2,
                            uint64_t node_budget, int* result, int64_t* mapping);

enum {
    DSRG_EQUIV_ISOMORPHIC = 0,
    DSRG_EQUIV_REVERSE = 1,
    DSRG_EQUIV_COMPLEMENT = 2,
    DSRG_EQUIV_REVERSE_COMPLEMENT = 3,
    DSRG_EQUIV_NONEQUIVALENT = 4,
    DSRG_EQUIV_UNDECIDED = 5
};

dsrg_status dsrg_equivalence(const dsrg_graph* g1, const dsrg_graph* g2,
                             uint64_t node_budget, int* verdict);

/* ------------------------------------------------------------ families */

dsrg_status dsrg_family_graph(const char* id, const int64_t* params, size_t nparams,
                              dsrg_graph** out);

/* Documented good partitions of the family for the shape (a,b); *count = 0
 * when none are on record. */
dsrg_status dsrg_family_partitions(const char* id, const int64_t* params,
                                   size_t nparams, int64_t a, int64_t b,
                                   dsrg_partition*** out, size_t* count);

/* ------------------------------------------------------------- catalog */

/* Runs the published-table reproduction and returns the structured text
 * report (free with dsrg_string_free). timeout_s caps each row's search
 * fallback, search_limit caps the partitions it requests (0 means 1), and
 * timing != 0 appends non-deterministic '#' timing comments. reproduced may
 * be NULL. */
dsrg_status dsrg_catalog_run(int constructible_only, int jobs, double timeout_s,
                             size_t search_limit, int timing, char** report,
                             int* reproduced);

#ifdef __cplusplus
}
#endif

#endif /* DSRG_H */
