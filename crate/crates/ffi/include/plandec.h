#ifndef PLANDEC_H
#define PLANDEC_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Graph classes with a dedicated pipeline.
typedef enum PlandecClass {
  PLANDEC_CLASS_K5 = 0,
  PLANDEC_CLASS_K33 = 1,
  PLANDEC_CLASS_TREEWIDTH = 2,
  PLANDEC_CLASS_GENERIC = 3,
} PlandecClass;

// Outcome of a call. The numeric values of the library failures match the
// exit codes of the command-line tool.
typedef enum PlandecStatus {
  PLANDEC_STATUS_OK = 0,
  // A null or otherwise unusable argument.
  PLANDEC_STATUS_INVALID_ARGUMENT = 1,
  PLANDEC_STATUS_PARSE = 2,
  PLANDEC_STATUS_PRECONDITION = 3,
  // A checked invariant or bound failed.
  PLANDEC_STATUS_INVARIANT = 4,
  // The library panicked; a bug, reported instead of unwinding.
  PLANDEC_STATUS_INTERNAL = 5,
} PlandecStatus;

// Opaque decomposition.
typedef struct PlandecDecomposition PlandecDecomposition;

// Opaque drawing together with its crossing report and bound checks.
typedef struct PlandecDrawing PlandecDrawing;

// Opaque simple graph.
typedef struct PlandecGraph PlandecGraph;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message for the last failed call on this thread, or null after a success.
// Valid until the next call into the library from this thread.
const char *plandec_last_error(void);

// Library version as a static NUL-terminated string.
const char *plandec_version(void);

// Releases a string returned by this library. Null is ignored.
//
// # Safety
// `s` is null or came from this library and was not freed before.
void plandec_string_free(char *s);

// Parses an edge list: `n m`, then `m` lines `u v`, 0-based.
//
// # Safety
// `text` is a NUL-terminated string; `out` points to writable storage.
enum PlandecStatus plandec_graph_parse(const char *text, struct PlandecGraph **out);

// Graph on `n` vertices with edges `(edges[2i], edges[2i + 1])` for `i < m`.
//
// # Safety
// `edges` holds `2 m` values (it may be null when `m` is 0); `out` points to
// writable storage.
enum PlandecStatus plandec_graph_new(size_t n,
                                     const size_t *edges,
                                     size_t m,
                                     struct PlandecGraph **out);

// # Safety
// `g` is null or a graph handle not freed before.
void plandec_graph_free(struct PlandecGraph *g);

// Vertex count; 0 for null.
//
// # Safety
// `g` is null or a live graph handle.
size_t plandec_graph_vertex_count(const struct PlandecGraph *g);

// Edge count; 0 for null.
//
// # Safety
// `g` is null or a live graph handle.
size_t plandec_graph_edge_count(const struct PlandecGraph *g);

// Decomposition from the pipeline of `class`:
// `K5` planar ω-decomposition of width 2 (strong: width 3, order at most `3n - 8`),
// `K33` the planarizing pair partition, `Treewidth` an exact tree decomposition,
// `Generic` singleton bags (strong: degeneracy ω-decomposition).
//
// # Safety
// `g` is a live graph handle; `out` points to writable storage.
enum PlandecStatus plandec_decompose(const struct PlandecGraph *g,
                                     enum PlandecClass class_,
                                     bool strong,
                                     struct PlandecDecomposition **out);

// Strong planar decomposition of width 2 with a bag for every pair `i <= j`.
//
// # Safety
// `g` is a live graph handle; `out` points to writable storage.
enum PlandecStatus plandec_quadratic_decomposition(const struct PlandecGraph *g,
                                                   struct PlandecDecomposition **out);

// Reads the JSON form `{"host", "bags", "dedges", "strong", "p"}`.
//
// # Safety
// `json` is a NUL-terminated string; `out` points to writable storage.
enum PlandecStatus plandec_decomposition_from_json(const char *json,
                                                   struct PlandecDecomposition **out);

// Writes the JSON form; release it with [`plandec_string_free`].
//
// # Safety
// `d` is a live decomposition handle; `out` points to writable storage.
enum PlandecStatus plandec_decomposition_to_json(const struct PlandecDecomposition *d, char **out);

// Bag count; 0 for null.
//
// # Safety
// `d` is null or a live decomposition handle.
size_t plandec_decomposition_order(const struct PlandecDecomposition *d);

// Largest bag; 0 for null.
//
// # Safety
// `d` is null or a live decomposition handle.
size_t plandec_decomposition_width(const struct PlandecDecomposition *d);

// Checks every defining condition. `Ok` when valid; `Invariant` with the
// first violation as the last error otherwise.
//
// # Safety
// `d` is a live decomposition handle.
enum PlandecStatus plandec_decomposition_validate(const struct PlandecDecomposition *d);

// # Safety
// `d` is null or a decomposition handle not freed before.
void plandec_decomposition_free(struct PlandecDecomposition *d);

// Drawing from the pipeline of `class`, with its exact crossing count and the
// bounds that pipeline certifies. `Generic` renders the quadratic decomposition.
//
// # Safety
// `g` is a live graph handle; `out` points to writable storage.
enum PlandecStatus plandec_draw(const struct PlandecGraph *g,
                                enum PlandecClass class_,
                                uint64_t seed,
                                struct PlandecDrawing **out);

// Renders a decomposition whose decomposition graph is planar.
//
// # Safety
// `d` is a live decomposition handle; `out` points to writable storage.
enum PlandecStatus plandec_render(const struct PlandecDecomposition *d,
                                  uint64_t seed,
                                  struct PlandecDrawing **out);

// Total crossings; 0 for null.
//
// # Safety
// `dr` is null or a live drawing handle.
size_t plandec_drawing_crossings(const struct PlandecDrawing *dr);

// Stores whether every bound check of the drawing holds.
//
// # Safety
// `dr` is a live drawing handle; `holds` points to writable storage.
enum PlandecStatus plandec_drawing_certified(const struct PlandecDrawing *dr, bool *holds);

// Writes the drawing JSON `{"host", "points", "routes"}`.
//
// # Safety
// `dr` is a live drawing handle; `out` points to writable storage.
enum PlandecStatus plandec_drawing_to_json(const struct PlandecDrawing *dr, char **out);

// Reads a drawing JSON and counts its crossings exactly; the result carries
// no bound checks. Fails with `Precondition` on a drawing not in general position.
//
// # Safety
// `json` is a NUL-terminated string; `out` points to writable storage.
enum PlandecStatus plandec_drawing_from_json(const char *json, struct PlandecDrawing **out);

// SVG with crossings marked.
//
// # Safety
// `dr` is a live drawing handle; `out` points to writable storage.
enum PlandecStatus plandec_drawing_to_svg(const struct PlandecDrawing *dr, char **out);

// # Safety
// `dr` is null or a drawing handle not freed before.
void plandec_drawing_free(struct PlandecDrawing *dr);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* PLANDEC_H */
