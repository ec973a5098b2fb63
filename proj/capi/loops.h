/* C interface to the loops library: opaque handles, integer status codes,
 * and heap strings released through loops_string_free. Reports come back as
 * rendered text or JSON so bindings never need the C++ types. */

#ifndef LOOPS_CAPI_H
#define LOOPS_CAPI_H

#ifdef __cplusplus
extern "C" {
#endif

typedef struct loops_table loops_table;
typedef struct loops_action loops_action;

enum {
    LOOPS_OK = 0,
    LOOPS_ERR_INVALID = 1,  /* bad input: malformed file, broken invariant */
    LOOPS_ERR_IO = 2,       /* unreadable or unwritable path */
    LOOPS_ERR_INTERNAL = 3
};

typedef int loops_status;

/* Message for the most recent failure on this thread; never NULL. */
const char* loops_last_error(void);

void loops_string_free(char* s);
void loops_table_free(loops_table* t);
void loops_action_free(loops_action* a);

/* --- tables ----------------------------------------------------------- */

/* Accepts the plain-text format (order, then rows) or the JSON object
 * {"n": int, "cells": [[int]]}; the format is detected from the content. */
loops_status loops_table_parse(const char* text, loops_table** out);
loops_status loops_table_read_file(const char* path, loops_table** out);
loops_status loops_table_cyclic(int n, loops_table** out);

int loops_table_order(const loops_table* t);

/* Each out-flag may be NULL when the caller does not care. */
loops_status loops_table_check(const loops_table* t, int* quasigroup, int* has_identity, int* loop,
                               int* associative, int* commutative);

/* Renders text (format_json = 0) or JSON (format_json = 1). */
loops_status loops_table_render(const loops_table* t, int format_json, char** out_text);

/* --- actions and products --------------------------------------------- */

/* JSON: {"n_table":..., "h_table":..., "images": {...}} or the cyclic
 * shorthand {"N": "Z9", "H": "Z3", "generator": "(1,2,3)"}. */
loops_status loops_action_parse(const char* text, loops_action** out);
loops_status loops_action_read_file(const char* path, loops_action** out);
loops_status loops_action_product(const loops_action* a, loops_table** out);

/* --- analysis --------------------------------------------------------- */

/* Nuclei, commutant, center, associator subloop of a loop table. */
loops_status loops_analyze(const loops_table* t, int format_json, char** out_report);

/* *iso = 1 and a cycle-notation witness on success; *iso = 0, witness NULL
 * when the tables are not isomorphic. */
loops_status loops_iso(const loops_table* t1, const loops_table* t2, int* iso,
                       char** witness_cycles);

/* Permutations p of 0..degree-1 with p(fixed_point) = fixed_point and
 * p^n = id, one cycle-notation line each, lexicographic order. */
loops_status loops_enumerate_stabilizer_torsion(int degree, int fixed_point, int n,
                                                char** out_lines);

/* --- reproduction pipelines ------------------------------------------- */

/* Classification of the Z_m x| Z_p family. */
loops_status loops_classify_metacyclic(int m, int p, int format_json, int jobs, char** out_report);

/* Full order-20 / order-27 runs. *discrepancy is set to 1 when a computed
 * value disagrees with the published one (the report carries the evidence). */
loops_status loops_report_order20(int format_json, int jobs, char** out_report, int* discrepancy);
loops_status loops_report_order27(int format_json, int jobs, char** out_report, int* discrepancy);

#ifdef __cplusplus
}
#endif

#endif /* LOOPS_CAPI_H */
