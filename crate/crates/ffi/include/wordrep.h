#ifndef WORDREP_H
#define WORDREP_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum WrAnswer {
  WR_ANSWER_YES = 0,
  WR_ANSWER_NO = 1,
  WR_ANSWER_UNKNOWN = 2,
} WrAnswer;

typedef enum WrStatus {
  WR_STATUS_OK = 0,
  WR_STATUS_NULL_POINTER = 1,
  WR_STATUS_INVALID_INPUT = 2,
  WR_STATUS_TOO_LARGE = 3,
  // The input lies outside the class the operation handles.
  WR_STATUS_NOT_FOUND = 4,
  WR_STATUS_INTERNAL = 5,
} WrStatus;

// Opaque graph handle.
typedef struct WrGraph WrGraph;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message for the most recent failure on this thread, or NULL. Valid until
// the next `wr_` call on the same thread.
const char *wr_last_error(void);

// Library version as a static string.
const char *wr_version(void);

// # Safety
// `s` must be NULL or a string returned by this library, not yet freed.
void wr_string_free(char *s);

// Builds a graph on `1..=n` from `edge_count` label pairs stored flat in
// `edges`.
//
// # Safety
// `edges` must point to `2 * edge_count` readable values (it may be NULL
// when `edge_count` is 0); `out` must be writable.
enum WrStatus wr_graph_new(size_t n,
                           const uint32_t *edges,
                           size_t edge_count,
                           struct WrGraph **out);

// Parses a graph6 string.
//
// # Safety
// `text` must be a NUL-terminated string; `out` must be writable.
enum WrStatus wr_graph_from_graph6(const char *text, struct WrGraph **out);

// # Safety
// `g` must be NULL or a handle from this library, not yet freed.
void wr_graph_free(struct WrGraph *g);

// Vertex count, 0 for NULL.
//
// # Safety
// `g` must be NULL or a live handle.
size_t wr_graph_vertex_count(const struct WrGraph *g);

// Edge count, 0 for NULL.
//
// # Safety
// `g` must be NULL or a live handle.
size_t wr_graph_edge_count(const struct WrGraph *g);

// Whether `x` and `y` are adjacent; false for NULL or unknown labels.
//
// # Safety
// `g` must be NULL or a live handle.
bool wr_graph_has_edge(const struct WrGraph *g, uint32_t x, uint32_t y);

// Decodes `word` under `pattern` (e.g. `"12"`).
//
// # Safety
// `word` must point to `len` readable letters; `pattern` must be a
// NUL-terminated string; `out` must be writable.
enum WrStatus wr_decode(const uint32_t *word,
                        size_t len,
                        const char *pattern,
                        struct WrGraph **out);

// Sets `*result` to whether `word` `pattern`-represents `g` exactly.
//
// # Safety
// As for [`wr_decode`]; `g` must be a live handle and `result` writable.
enum WrStatus wr_verifies(const uint32_t *word,
                          size_t len,
                          const struct WrGraph *g,
                          const char *pattern,
                          bool *result);

// Decides 12-representability of `g` up to relabeling. `json_out` may be
// NULL; otherwise it receives the certificate as JSON.
//
// # Safety
// `g` must be a live handle; `answer` writable; `json_out` NULL or writable.
enum WrStatus wr_recognize(const struct WrGraph *g,
                           uint64_t budget,
                           size_t jobs,
                           enum WrAnswer *answer,
                           char **json_out);

// Runs a construction and writes its JSON to `json_out`. `method` is one of
// `perm`, `1k`, `dcat` (these use `g`; `1k` takes the pattern length `k`)
// or `corner`, `skewladder` (these ignore `g` and use `k`). Returns
// `NotFound` when `g` is outside the method's class.
//
// # Safety
// `method` must be a NUL-terminated string; `g` a live handle or NULL for
// the grid methods; `json_out` writable.
enum WrStatus wr_construct(const struct WrGraph *g, const char *method, size_t k, char **json_out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* WORDREP_H */
