/* cidc — exact counting and certification of circuit double covers of cubic
 * multigraphs. C API over the C++ core: opaque handles, integer status codes,
 * heap-allocated strings released with cidc_string_free. All functions are
 * thread-safe as long as a handle is not shared between threads; the error
 * message of the last failing call is thread-local. */

#ifndef CIDC_H
#define CIDC_H

#ifdef __cplusplus
extern "C" {
#endif

typedef struct cidc_graph cidc_graph;

enum {
    CIDC_OK = 0,
    CIDC_E_USAGE = 1,
    CIDC_E_PARSE = 2,
    CIDC_E_RESOURCE = 3,
    CIDC_E_VERIFY = 4,
    CIDC_E_INTERNAL = 5
};

/* Message of the last failing call in this thread; empty string otherwise. */
const char* cidc_last_error(void);

void cidc_string_free(char* s);
void cidc_graph_free(cidc_graph* g);

/* -- construction ---------------------------------------------------------- */

/* One line of graph6 (simple graphs; vertices must be cubic). */
int cidc_graph_from_graph6(const char* line, cidc_graph** out);

/* Native multipole text: header "n k f", then "u v" / "u *i" / "*i *j" lines. */
int cidc_graph_from_multipole_text(const char* text, cidc_graph** out);

/* Families: k4, theta, cube, petersen, klee, flower_gadget, flower_snark,
 * three_star, triangle_pole, isolated_edge_pole. param is ignored by the
 * fixed graphs. Planar families carry a rotation (see rotation_text). */
int cidc_graph_generate(const char* family, int param, cidc_graph** out);

/* -- inspection ------------------------------------------------------------ */

int cidc_graph_order(const cidc_graph* g);      /* vertices */
int cidc_graph_size(const cidc_graph* g);       /* semiedges */
int cidc_graph_edge_count(const cidc_graph* g);

int cidc_graph_to_graph6(const cidc_graph* g, char** out);
int cidc_graph_to_multipole_text(const cidc_graph* g, char** out);

/* Rotation text "v: d1 d2 d3" per vertex. Generated planar families carry
 * one; otherwise set it explicitly before asking for faces. */
int cidc_graph_rotation_text(const cidc_graph* g, char** out);
int cidc_graph_set_rotation_text(cidc_graph* g, const char* text);

/* Face report under the handle's rotation: one line per face with its darts,
 * a flower flag per face, and the Euler characteristic. */
int cidc_graph_faces_text(const cidc_graph* g, char** out);

/* -- counting ---------------------------------------------------------------- */

/* engine: "brute" | "backtrack" | "dp" | "auto". nu_out receives the exact
 * count in decimal. engine_used_out (optional) names the engine that ran. */
int cidc_count(const cidc_graph* g, const char* engine, char** nu_out, char** engine_used_out);

/* ratio nu / 2^{n/2-1} in lowest terms as "p/q"; meets_bound (optional)
 * reports nu >= 2^{n/2-1}. */
int cidc_conjecture_ratio(const char* nu_decimal, int order, char** ratio_out, int* meets_bound);

/* Exact comparison of "p/q" rationals: sign of a - b. */
int cidc_rational_cmp(const char* a, const char* b, int* sign_out);

/* -- boundaries and linear programs ------------------------------------------ */

/* Number of canonical boundaries of size k; with list != 0, *list_out gets
 * one boundary text form per line. */
int cidc_boundary_count(int k, long* count_out, int list, char** list_out);

/* cycle_len 4 or 5; mode "planar" | "all" (ignored for 4). Reports the exact
 * LP optimum "p/q" and the certified growth factor c^4. ok_out is 1 iff the
 * optimum is at least 1. */
int cidc_lp_check(int cycle_len, const char* mode, char** optimum_out, char** factor_out, int* ok_out);

/* -- certificates ------------------------------------------------------------- */

/* Reduction certificate for a bridgeless cubic planar graph (planarity is
 * the caller's assertion). bound_out gets the exact rational "p/q";
 * target_ok_out reports bound >= (5/2)^{(n-2)/4} via integer cross-powering. */
int cidc_certify_planar(const cidc_graph* g, char** json_out, char** bound_out, int* target_ok_out);

/* CIDC_OK for a valid certificate; CIDC_E_VERIFY with reason_out otherwise. */
int cidc_verify_certificate(const char* json, char** reason_out);

/* -- flowers ------------------------------------------------------------------- */

/* Outer-fixed CiDC count of the flower gadget of size k (3..8), with the
 * lower-bound and closed-form checks. */
int cidc_flower_check(int k, char** count_out, int* bound_ok_out, int* formula_ok_out);

#ifdef __cplusplus
}
#endif

#endif /* CIDC_H */
