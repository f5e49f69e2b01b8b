#ifndef TIGHTPATH_TIGHTPATH_H
#define TIGHTPATH_TIGHTPATH_H

/* C interface to the tightpath library.
 *
 * Every function returns a tp_status. Objects are opaque and owned by the
 * caller once returned; release them with the matching *_free function.
 * Strings returned through char** are heap copies freed with tp_string_free.
 * After a failure tp_last_error() describes it for the calling thread. */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define TP_API __declspec(dllexport)
#else
#define TP_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum tp_status {
  TP_OK = 0,
  TP_ERR_DOMAIN = 1,
  TP_ERR_UNSUPPORTED = 2,
  TP_ERR_STUCK_END = 3,
  TP_ERR_PARSE = 4,
  TP_ERR_IO = 5,
  TP_ERR_INTERNAL = 6,
  TP_ERR_NULL_ARGUMENT = 7
} tp_status;

typedef enum tp_pattern {
  TP_TIGHT_PATH = 0,
  TP_ZIGZAG = 1,
  TP_STACK = 2,
  TP_GOOD_PATH = 3
} tp_pattern;

typedef enum tp_family {
  TP_FAMILY_STACK_FREE = 0,
  TP_FAMILY_SHORT_SIDE = 1,
  TP_FAMILY_CLIQUE_UNION = 2,
  TP_FAMILY_TRANSVERSAL = 3
} tp_family;

typedef struct tp_hypergraph tp_hypergraph;
typedef struct tp_witness tp_witness;

TP_API const char* tp_last_error(void);
TP_API const char* tp_status_name(tp_status status);
TP_API void tp_string_free(char* s);

TP_API tp_status tp_pattern_from_name(const char* name, tp_pattern* out);

/* Hypergraphs. Edges are passed as a flat array of count*r vertex ids. */
TP_API tp_status tp_hypergraph_create(int n, int r, int geometric, const int32_t* vertices,
                                      size_t edge_count, tp_hypergraph** out);
TP_API tp_status tp_hypergraph_parse(const char* text, tp_hypergraph** out);
TP_API tp_status tp_hypergraph_read_file(const char* path, tp_hypergraph** out);
TP_API tp_status tp_hypergraph_write_file(const tp_hypergraph* h, const char* path);
TP_API tp_status tp_hypergraph_to_text(const tp_hypergraph* h, char** out);
TP_API tp_status tp_hypergraph_to_json(const tp_hypergraph* h, char** out);
TP_API void tp_hypergraph_free(tp_hypergraph* h);

TP_API int tp_hypergraph_n(const tp_hypergraph* h);
TP_API int tp_hypergraph_r(const tp_hypergraph* h);
TP_API int tp_hypergraph_geometric(const tp_hypergraph* h);
TP_API size_t tp_hypergraph_edge_count(const tp_hypergraph* h);
/* Writes the r vertices of edge `index` (lexicographic order) to out. */
TP_API tp_status tp_hypergraph_edge(const tp_hypergraph* h, size_t index, int32_t* out);

TP_API tp_status tp_hypergraph_shadow(const tp_hypergraph* h, tp_hypergraph** out);
TP_API tp_status tp_hypergraph_link(const tp_hypergraph* h, int vertex, tp_hypergraph** out);

/* Constructions. clique_union ignores r (always 2). */
TP_API tp_status tp_construct(tp_family family, int n, int r, int k, tp_hypergraph** out);
TP_API tp_status tp_lift_plus(const tp_hypergraph* h, int m, tp_hypergraph** out);

/* Pattern detection. On TP_OK *out is NULL when h has no copy. */
TP_API tp_status tp_find_pattern(const tp_hypergraph* h, tp_pattern pattern, int k,
                                 tp_witness** out);
TP_API int tp_witness_k(const tp_witness* w);
TP_API size_t tp_witness_length(const tp_witness* w);
TP_API const int32_t* tp_witness_sequence(const tp_witness* w);
TP_API tp_status tp_witness_to_json(const tp_witness* w, char** out);
TP_API void tp_witness_free(tp_witness* w);

TP_API tp_status tp_is_zigzag(int n, const int32_t* sequence, size_t length, int r,
                              int* out);

/* JSON reports. */
TP_API tp_status tp_bound_table(int n, int r, int k, char** out_json);
TP_API tp_status tp_evaluate_bound(const char* kind, int n, int r, int k, double* out);

typedef struct tp_search_options {
  long long budget; /* node limit, 0 for none */
  int threads;      /* 0 is treated as 1 */
} tp_search_options;

/* *out_exhaustive is 1 for a completed run and 0 when the budget ran out. */
TP_API tp_status tp_search(int n, int r, int k, tp_pattern pattern, int geometric,
                           const tp_search_options* options, int* out_value,
                           int* out_exhaustive, tp_hypergraph** out_witness,
                           char** out_json);

TP_API tp_status tp_verify_family(const tp_hypergraph* h, tp_pattern pattern, int k,
                                  int* out_free, char** out_json);
/* good_path mode uses the coloring given as one block id per vertex. */
TP_API tp_status tp_verify_counting(const tp_hypergraph* h, int k_max, int good_path,
                                    const int32_t* block_of, int blocks, int* out_violations,
                                    char** out_json);
TP_API tp_status tp_experiment(const tp_hypergraph* h, uint64_t seed, long long trials,
                               char** out_json);

#ifdef __cplusplus
}
#endif

#endif
