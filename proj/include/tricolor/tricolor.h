/* tricolor: plane-graph 3-coloring toolkit — C API.
 *
 * Conventions
 *   - Every function returns a tc_status unless noted. TC_OK, TC_UNSAT and
 *     TC_END are non-error outcomes; negative codes are errors and leave a
 *     human-readable message in tc_last_error() (thread-local).
 *   - Out-parameters are written only on TC_OK (or TC_UNSAT where a verdict
 *     plus no object is the point, as noted per function).
 *   - Objects are opaque handles owned by the caller; free each with its
 *     matching tc_*_free. Freeing NULL is a no-op. Strings returned through
 *     tc_text handles stay valid until the handle is freed.
 *   - Vertices are non-negative integer labels; colors are 1..3.
 */
#ifndef TRICOLOR_H
#define TRICOLOR_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define TC_API __declspec(dllexport)
#else
#define TC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum tc_status {
  TC_OK = 0,
  TC_UNSAT = 1,          /* valid verdict: no coloring meets the constraints */
  TC_END = 2,            /* stream exhausted */
  TC_ERR = -1,           /* internal failure */
  TC_ERR_INVALID = -2,   /* bad arguments, constraints, or structure */
  TC_ERR_NOT_PLANAR = -3,
  TC_ERR_CAP = -4,       /* desk-scale size cap exceeded */
  TC_ERR_IO = -5         /* file or format problem; message names the byte */
} tc_status;

typedef struct tc_graph tc_graph;             /* simple labeled graph */
typedef struct tc_plane tc_plane;             /* graph + combinatorial embedding */
typedef struct tc_constraints tc_constraints; /* precoloring constraint set */
typedef struct tc_coloring tc_coloring;       /* total proper 3-coloring */
typedef struct tc_stream tc_stream;           /* ordered list of plane graphs */
typedef struct tc_report tc_report;           /* theorem-check report */
typedef struct tc_witnesses tc_witnesses;     /* tightness witness list */
typedef struct tc_text tc_text;               /* owned string */

/* Last error message for this thread ("" when none). */
TC_API const char* tc_last_error(void);

TC_API void tc_graph_free(tc_graph* g);
TC_API void tc_plane_free(tc_plane* p);
TC_API void tc_constraints_free(tc_constraints* c);
TC_API void tc_coloring_free(tc_coloring* c);
TC_API void tc_stream_free(tc_stream* s);
TC_API void tc_report_free(tc_report* r);
TC_API void tc_witnesses_free(tc_witnesses* w);
TC_API void tc_text_free(tc_text* t);

TC_API const char* tc_text_get(const tc_text* t); /* NUL-terminated, UTF-8 */

/* ---- graphs ---------------------------------------------------------- */

/* Edge-list text: one "u v" pair per line; blank lines ignored. */
TC_API tc_status tc_graph_from_edge_text(const char* text, tc_graph** out);
TC_API tc_status tc_graph_vertex_count(const tc_graph* g, int* out);
TC_API tc_status tc_graph_edge_count(const tc_graph* g, int* out);
TC_API tc_status tc_graph_triangle_count(const tc_graph* g, int* out);
/* Number of distinct apex vertices of K4'-occurrences (apex degree 3). */
TC_API tc_status tc_graph_k4prime_apex_count(const tc_graph* g, int* out);
/* "n=..;e=0-1,..." replay text. */
TC_API tc_status tc_graph_text(const tc_graph* g, tc_text** out);

/* ---- embeddings ------------------------------------------------------ */

TC_API tc_status tc_plane_embed(const tc_graph* g, tc_plane** out);
TC_API tc_status tc_is_planar(const tc_graph* g, int* flag);
TC_API tc_status tc_plane_graph(const tc_plane* p, tc_graph** out); /* copy */
TC_API tc_status tc_plane_face_count(const tc_plane* p, int* out);
/* Face-length census as "len:count" pairs, one per line, ascending. */
TC_API tc_status tc_plane_face_census(const tc_plane* p, tc_text** out);
/* flag = 1 iff the vertex sequence bounds a face (any rotation/reflection). */
TC_API tc_status tc_plane_is_facial_cycle(const tc_plane* p, const int* verts, int len,
                                          int* flag);
/* Canonical stats block: n, m, f, triangle census, face census, K4' apexes. */
TC_API tc_status tc_stats_text(const tc_plane* p, tc_text** out);

/* ---- constraints and colorings --------------------------------------- */

TC_API tc_status tc_constraints_new(tc_constraints** out);
TC_API tc_status tc_constraints_fix(tc_constraints* c, int v, int color);
TC_API tc_status tc_constraints_equal(tc_constraints* c, int u, int v);
TC_API tc_status tc_constraints_distinct(tc_constraints* c, int u, int v);

TC_API tc_status tc_coloring_color(const tc_coloring* c, int v, int* color);
/* "v color" lines, vertices ascending. */
TC_API tc_status tc_coloring_text(const tc_coloring* c, tc_text** out);

/* ---- coloring engines ------------------------------------------------ */

/* Exact solver. TC_OK writes *out; TC_UNSAT writes nothing. cs may be NULL. */
TC_API tc_status tc_solve(const tc_graph* g, const tc_constraints* cs, tc_coloring** out);

/* Proof-guided reduction engine. Verdict as tc_solve; *trace_out (optional)
 * receives the step log ("STEP kind args n m n' m'" lines) on both verdicts. */
TC_API tc_status tc_reduce_and_color(const tc_plane* p, const tc_constraints* cs,
                                     tc_coloring** out, tc_text** trace_out);

/* ---- criticality ------------------------------------------------------ */

TC_API tc_status tc_chromatic_number(const tc_graph* g, int* out);
TC_API tc_status tc_is_k_critical(const tc_graph* g, int k, int* flag);
/* Requires a 4-critical graph (TC_ERR_INVALID otherwise). */
TC_API tc_status tc_ky_bound(const tc_graph* g, int* holds, int* equality);

/* ---- corpus streams --------------------------------------------------- */

TC_API tc_status tc_stream_new(tc_stream** out);
TC_API tc_status tc_stream_push(tc_stream* s, const tc_plane* p); /* copies */
TC_API tc_status tc_stream_size(const tc_stream* s, int* out);
/* Owned copy of the next graph, TC_END when exhausted. */
TC_API tc_status tc_stream_next(tc_stream* s, tc_plane** out);
TC_API tc_status tc_stream_rewind(tc_stream* s);
/* planar_code bytes (">>planar_code<<" header + all graphs). */
TC_API tc_status tc_stream_write_file(const tc_stream* s, const char* path);
TC_API tc_status tc_read_planar_code_file(const char* path, tc_stream** out);
TC_API tc_status tc_read_planar_code_bytes(const uint8_t* bytes, size_t len, tc_stream** out);

/* Exhaustive connected planar enumeration, n = 1..max_n, one graph per
 * isomorphism class. max_triangles < 0 means unbounded; tags_csv is a
 * comma-separated subset of {has-4-face, k4prime-free,
 * has-independent-2plus-vertex} or NULL/empty. */
TC_API tc_status tc_generate_enum(int max_n, int max_triangles, const char* tags_csv,
                                  tc_stream** out);
/* Every iterated DHGO composition of K4-copies with at most max_n vertices.
 * The seed is recorded for provenance; the stream is exhaustive either way.
 * Compositions that are not planar are skipped: the stream type carries an
 * embedding per graph (planar_code cannot encode the others). */
TC_API tc_status tc_generate_4ore(int max_n, uint64_t seed, tc_stream** out);
/* The single K4' graph. */
TC_API tc_status tc_generate_k4prime(tc_stream** out);

/* ---- theorem harness --------------------------------------------------- */

/* theorem is one of: T6_pair, T8_add3vertex, T9_small_face,
 * T11_mono_neighborhood, T13_adynamic, C1_three_common, L10_witness,
 * KY_bound, T15_pl44f. */
TC_API tc_status tc_check_theorem(const tc_plane* p, const char* theorem, tc_report** out);
/* Corpus-wide scan (for T15_pl44f: over the DHGO stream). jobs 0 = auto. */
TC_API tc_status tc_scan_corpus(int max_n, int max_triangles, const char* tags_csv,
                                const char* theorem, int jobs, tc_report** out);
TC_API tc_status tc_report_instances(const tc_report* r, long* out);
TC_API tc_status tc_report_failure_count(const tc_report* r, long* out);
TC_API tc_status tc_report_seconds(const tc_report* r, double* out);
/* FAIL lines + key=value summary; deterministic for a corpus manifest. */
TC_API tc_status tc_report_text(const tc_report* r, tc_text** out);

/* Tightness-witness search. pattern is one of:
 * three-precolored-vertices-one-triangle, pair-two-triangles,
 * added-4-vertex-one-triangle, added-3-vertex-two-triangles,
 * fiveface-one-triangle, mono-4-neighborhood-K4'-free-one-triangle,
 * mono-2-neighborhood-two-triangles. Empty result = none under the cap. */
TC_API tc_status tc_search_tightness(const char* pattern, int max_n, tc_witnesses** out);
TC_API tc_status tc_witnesses_count(const tc_witnesses* w, int* out);
TC_API tc_status tc_witnesses_graph(const tc_witnesses* w, int i, tc_plane** out);
TC_API tc_status tc_witnesses_constraint(const tc_witnesses* w, int i, tc_text** out);

/* Single-graph planar_code, lowercase hex, one line. */
TC_API tc_status tc_plane_code_hex(const tc_plane* p, tc_text** out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* TRICOLOR_H */
