/* C interface to the bimorphism-monoid verification library.
 *
 * Every function returns a bimo_status; on failure bimo_last_error() holds a
 * human-readable message for the calling thread. Strings returned through
 * char** are owned by the caller and released with bimo_string_free().
 */
#ifndef BIMO_H
#define BIMO_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum bimo_status {
    BIMO_OK = 0,
    BIMO_ERR_PARSE = 1,
    BIMO_ERR_INVALID_ARGUMENT = 2,
    BIMO_ERR_GRAPH = 3,        /* loops, duplicate edges, dangling endpoints */
    BIMO_ERR_ALGEBRA = 4,      /* not associative, no identity, not a group */
    BIMO_ERR_CONSTRUCTION = 5, /* group too small, gadget or submonoid problems */
    BIMO_ERR_BUDGET = 6,       /* a search or closure budget was exceeded */
    BIMO_ERR_MISMATCH = 7,     /* replay diverged from the certificate */
    BIMO_ERR_VERIFICATION = 8, /* ran to completion but a clause failed */
    BIMO_ERR_INTERNAL = 9
} bimo_status;

typedef struct bimo_graph bimo_graph;
typedef struct bimo_group bimo_group;

const char* bimo_last_error(void);
void bimo_string_free(char* text);

/* graphs ------------------------------------------------------------- */
bimo_status bimo_graph_from_text(const char* text, bimo_graph** out); /* JSON or DOT */
void bimo_graph_free(bimo_graph* graph);
bimo_status bimo_graph_to_json(const bimo_graph* graph, char** out);
bimo_status bimo_graph_to_dot(const bimo_graph* graph, char** out);

/* groups and monoids -------------------------------------------------- */
bimo_status bimo_group_from_json(const char* table_json, bimo_group** out);
bimo_status bimo_group_from_generators(const char* lines, int points, bimo_group** out);
void bimo_group_free(bimo_group* group);
/* associativity/identity/cancellativity/Ore report for any table */
bimo_status bimo_algebra_report(const char* table_json, char** report_json);
bimo_status bimo_submonoid_closure(const bimo_group* group, const char* seed_csv,
                                   char** elements_json);

/* constructions -------------------------------------------------------- */
bimo_status bimo_gadget_family(int count, int min_size, char** family_json);
/* min_gadget_size <= 0 means auto (|G|); output is a wrapper document */
bimo_status bimo_build_cayley(const bimo_group* group, int min_gadget_size,
                              char** gamma_json);
bimo_status bimo_build_top_layer(const char* gamma_json, const char* submonoid_csv,
                                 char** gamma_star_json);
bimo_status bimo_ladder_graph(int radius, bimo_graph** out);

/* searches -------------------------------------------------------------- */
/* mode: "bi", "aut", or "mono" (mono needs target). budget_vertices <= 0
 * means the default. oracle != 0 additionally cross-checks against the
 * brute-force path (graphs up to 8 vertices only). */
bimo_status bimo_enumerate_maps(const bimo_graph* graph, const bimo_graph* target_or_null,
                                const char* mode, int budget_vertices, int oracle,
                                char** certificate_json);
bimo_status bimo_ladder_report(int radius, int target, int margin, char** report_json);
bimo_status bimo_ray_report(int length, char** report_json);

/* pipeline --------------------------------------------------------------- */
/* options_json may be NULL for defaults; see the CLI for the fields.
 * Returns BIMO_OK when verification passed, BIMO_ERR_VERIFICATION when it
 * ran but failed; the certificate is written in both cases. */
bimo_status bimo_verify(const char* group_table_json, const char* submonoid_csv,
                        const char* options_json, char** certificate_json);
bimo_status bimo_replay(const char* certificate_json, char** report_json);

#ifdef __cplusplus
}
#endif

#endif /* BIMO_H */
